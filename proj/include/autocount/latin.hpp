#ifndef AUTOCOUNT_LATIN_HPP
#define AUTOCOUNT_LATIN_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "autocount/permutations.hpp"

namespace autocount {

struct ValidationError : std::runtime_error {
  int row, col;  // 1-based location of the offending cell
  ValidationError(const std::string& msg, int r, int c)
      : std::runtime_error(msg), row(r), col(c) {}
};

// n x n array over [n], each symbol once per row and column.
class LatinSquare {
 public:
  // Validates the Latin property; grid is row-major, 1-based symbols.
  static LatinSquare validate(int n, std::vector<int> cells);

  int size() const { return n_; }
  int at(int i, int j) const { return cells_[(i - 1) * n_ + (j - 1)]; }
  const std::vector<int>& cells() const { return cells_; }

  bool operator==(const LatinSquare&) const = default;

 private:
  LatinSquare(int n, std::vector<int> cells) : n_(n), cells_(std::move(cells)) {}
  int n_;
  std::vector<int> cells_;
};

// n x n array over [n] with empty cells (stored as 0); each symbol at most
// once per row and column.
class PartialLatinSquare {
 public:
  explicit PartialLatinSquare(int n);  // all empty
  static PartialLatinSquare validate(int n, std::vector<int> cells);  // 0 = empty

  int size() const { return n_; }
  int at(int i, int j) const { return cells_[(i - 1) * n_ + (j - 1)]; }
  bool filled(int i, int j) const { return at(i, j) != 0; }
  void set(int i, int j, int k);  // enforces row/column uniqueness
  void clear(int i, int j);
  const std::vector<int>& cells() const { return cells_; }
  int filled_count() const;

  bool operator==(const PartialLatinSquare&) const = default;

 private:
  int n_;
  std::vector<int> cells_;
};

// (alpha, beta, gamma) acting on rows, columns, symbols.
struct Isotopism {
  Permutation alpha, beta, gamma;

  Isotopism(Permutation a, Permutation b, Permutation g);
  static Isotopism identity(int n) { return {Permutation(n), Permutation(n), Permutation(n)}; }

  int size() const { return alpha.size(); }
  bool is_identity() const;
  bool operator==(const Isotopism&) const = default;
};

// L'(alpha(i), beta(j)) = gamma(L(i, j))
LatinSquare apply_isotopism(const Isotopism& t, const LatinSquare& L);
bool is_autotopism(const Isotopism& t, const LatinSquare& L);

// True iff every filled cell of P agrees with L. Requires equal n.
bool contains(const PartialLatinSquare& P, const LatinSquare& L);

PartialLatinSquare as_partial(const LatinSquare& L);

// Text format: first line n, then n rows of n space-separated symbols
// (0 = empty in partial squares).
LatinSquare read_square(std::istream& in);
PartialLatinSquare read_partial(std::istream& in);
void write_square(std::ostream& out, const LatinSquare& L);
void write_partial(std::ostream& out, const PartialLatinSquare& P);

}  // namespace autocount

#endif
