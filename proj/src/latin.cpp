#include "autocount/latin.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace autocount {

namespace {

void check_shape(int n, const std::vector<int>& cells) {
  if (n <= 0) throw std::invalid_argument("order must be positive");
  if (static_cast<int>(cells.size()) != n * n)
    throw std::invalid_argument("cell array does not match order");
}

// empty_ok: 0 entries allowed, uniqueness is "at most once"
void check_latin(int n, const std::vector<int>& cells, bool empty_ok) {
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      int v = cells[(i - 1) * n + (j - 1)];
      if (v == 0 && empty_ok) continue;
      if (v < 1 || v > n)
        throw ValidationError("symbol out of range at (" + std::to_string(i) + "," +
                                  std::to_string(j) + ")",
                              i, j);
    }
  for (int i = 1; i <= n; ++i) {
    std::vector<int> row_seen(n + 1, 0), col_seen(n + 1, 0);
    for (int j = 1; j <= n; ++j) {
      int v = cells[(i - 1) * n + (j - 1)];
      if (v != 0) {
        if (row_seen[v])
          throw ValidationError("row " + std::to_string(i) + " repeats symbol " +
                                    std::to_string(v) + " at column " + std::to_string(j),
                                i, j);
        row_seen[v] = 1;
      }
      int w = cells[(j - 1) * n + (i - 1)];
      if (w != 0) {
        if (col_seen[w])
          throw ValidationError("column " + std::to_string(i) + " repeats symbol " +
                                    std::to_string(w) + " at row " + std::to_string(j),
                                j, i);
        col_seen[w] = 1;
      }
    }
  }
}

}  // namespace

LatinSquare LatinSquare::validate(int n, std::vector<int> cells) {
  check_shape(n, cells);
  check_latin(n, cells, /*empty_ok=*/false);
  return LatinSquare(n, std::move(cells));
}

PartialLatinSquare::PartialLatinSquare(int n) : n_(n), cells_(n * n, 0) {
  if (n <= 0) throw std::invalid_argument("order must be positive");
}

PartialLatinSquare PartialLatinSquare::validate(int n, std::vector<int> cells) {
  check_shape(n, cells);
  check_latin(n, cells, /*empty_ok=*/true);
  PartialLatinSquare p(n);
  p.cells_ = std::move(cells);
  return p;
}

void PartialLatinSquare::set(int i, int j, int k) {
  if (k < 1 || k > n_) throw std::invalid_argument("symbol out of range");
  for (int t = 1; t <= n_; ++t) {
    if (t != j && at(i, t) == k)
      throw ValidationError("row " + std::to_string(i) + " already holds " + std::to_string(k), i, t);
    if (t != i && at(t, j) == k)
      throw ValidationError("column " + std::to_string(j) + " already holds " + std::to_string(k), t, j);
  }
  cells_[(i - 1) * n_ + (j - 1)] = k;
}

void PartialLatinSquare::clear(int i, int j) { cells_[(i - 1) * n_ + (j - 1)] = 0; }

int PartialLatinSquare::filled_count() const {
  int c = 0;
  for (int v : cells_)
    if (v != 0) ++c;
  return c;
}

Isotopism::Isotopism(Permutation a, Permutation b, Permutation g)
    : alpha(std::move(a)), beta(std::move(b)), gamma(std::move(g)) {
  if (alpha.size() != beta.size() || alpha.size() != gamma.size())
    throw std::invalid_argument("isotopism components must share one order");
}

bool Isotopism::is_identity() const {
  return alpha.is_identity() && beta.is_identity() && gamma.is_identity();
}

LatinSquare apply_isotopism(const Isotopism& t, const LatinSquare& L) {
  int n = L.size();
  if (t.size() != n) throw std::invalid_argument("isotopism/square order mismatch");
  std::vector<int> cells(n * n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      cells[(t.alpha(i) - 1) * n + (t.beta(j) - 1)] = t.gamma(L.at(i, j));
  return LatinSquare::validate(n, std::move(cells));
}

bool is_autotopism(const Isotopism& t, const LatinSquare& L) {
  int n = L.size();
  if (t.size() != n) throw std::invalid_argument("isotopism/square order mismatch");
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (L.at(t.alpha(i), t.beta(j)) != t.gamma(L.at(i, j))) return false;
  return true;
}

bool contains(const PartialLatinSquare& P, const LatinSquare& L) {
  if (P.size() != L.size()) throw std::invalid_argument("contains: order mismatch");
  for (int i = 1; i <= P.size(); ++i)
    for (int j = 1; j <= P.size(); ++j)
      if (P.filled(i, j) && P.at(i, j) != L.at(i, j)) return false;
  return true;
}

PartialLatinSquare as_partial(const LatinSquare& L) {
  return PartialLatinSquare::validate(L.size(), L.cells());
}

namespace {

std::vector<int> read_cells(std::istream& in, int& n) {
  if (!(in >> n) || n <= 0) throw std::runtime_error("square file: bad order line");
  std::vector<int> cells(n * n);
  for (int& v : cells)
    if (!(in >> v)) throw std::runtime_error("square file: truncated");
  return cells;
}

}  // namespace

LatinSquare read_square(std::istream& in) {
  int n;
  auto cells = read_cells(in, n);
  return LatinSquare::validate(n, std::move(cells));
}

PartialLatinSquare read_partial(std::istream& in) {
  int n;
  auto cells = read_cells(in, n);
  return PartialLatinSquare::validate(n, std::move(cells));
}

void write_square(std::ostream& out, const LatinSquare& L) {
  out << L.size() << '\n';
  for (int i = 1; i <= L.size(); ++i) {
    for (int j = 1; j <= L.size(); ++j) {
      if (j > 1) out << ' ';
      out << L.at(i, j);
    }
    out << '\n';
  }
}

void write_partial(std::ostream& out, const PartialLatinSquare& P) {
  out << P.size() << '\n';
  for (int i = 1; i <= P.size(); ++i) {
    for (int j = 1; j <= P.size(); ++j) {
      if (j > 1) out << ' ';
      out << P.at(i, j);
    }
    out << '\n';
  }
}

}  // namespace autocount
