#ifndef AUTOCOUNT_PERMUTATIONS_HPP
#define AUTOCOUNT_PERMUTATIONS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace autocount {

// Thrown by the permutation / cycle-structure text parsers.
struct ParseError : std::runtime_error {
  enum class Kind { Duplicate, OutOfRange, Malformed };
  Kind kind;
  ParseError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

// A permutation of [n] = {1, ..., n}. All interfaces are 1-based.
class Permutation {
 public:
  explicit Permutation(int n);  // identity
  Permutation(int n, std::vector<int> image);

  int size() const { return n_; }
  int operator()(int i) const { return img_[i - 1]; }
  const std::vector<int>& image() const { return img_; }
  bool is_identity() const;

  bool operator==(const Permutation&) const = default;

 private:
  int n_;
  std::vector<int> img_;  // img_[i-1] = p(i)
};

// Canonical cycle decomposition: each cycle led by its minimum,
// cycles ordered by leader; fixed points are length-1 cycles.
struct CycleDecomposition {
  std::vector<std::vector<int>> cycles;
};

// counts[i-1] = number of cycles of length i; sum of i*counts[i-1] = n.
struct CycleStructure {
  std::vector<int> counts;
  int n() const { return static_cast<int>(counts.size()); }
  bool operator==(const CycleStructure&) const = default;
};

// Accepts one-line form ("3 1 2") or cycle form ("(1 2)(3 4)").
// Elements absent from cycle form are fixed points.
Permutation parse_permutation(const std::string& text, int n);

// "(l1,l2,...,ln)" or "l1,l2,...,ln".
CycleStructure parse_cycle_structure(const std::string& text, int n);

CycleDecomposition cycle_decomposition(const Permutation& p);
CycleStructure cycle_structure(const Permutation& p);
Permutation from_cycles(const CycleDecomposition& d, int n);

std::vector<int> fixed_points(const Permutation& p);

// (p*q)(x) = p(q(x))
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);

// p^l, with p^0 the identity. Exponent is reduced mod the order of p.
Permutation power(const Permutation& p, long long l);

// lcm of the cycle lengths.
long long permutation_order(const Permutation& p);

// Canonical representative of a cycle structure: longest cycles laid out
// first on consecutive integers.
Permutation permutation_from_cycle_structure(const CycleStructure& cs);

std::string to_one_line(const Permutation& p);
std::string to_cycle_string(const Permutation& p);
std::string to_string(const CycleStructure& cs);

}  // namespace autocount

#endif
