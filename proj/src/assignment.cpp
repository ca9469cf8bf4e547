#include "autocount/assignment.hpp"

#include <cmath>

#include "autocount/counting.hpp"

namespace autocount {

BinaryTensor to_tensor(const LatinSquare& L) {
  BinaryTensor X(L.size());
  for (int i = 1; i <= L.size(); ++i)
    for (int j = 1; j <= L.size(); ++j) X.set(i, j, L.at(i, j), true);
  return X;
}

LatinSquare from_tensor(const BinaryTensor& X) {
  if (!is_feasible(X)) throw InfeasibleError("tensor violates a unit-sum constraint");
  int n = X.n;
  std::vector<int> cells(n * n, 0);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        if (X.at(i, j, k)) cells[(i - 1) * n + (j - 1)] = k;
  return LatinSquare::validate(n, std::move(cells));
}

bool is_feasible(const BinaryTensor& X) {
  int n = X.n;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      int si = 0, sj = 0, sk = 0;
      for (int c = 1; c <= n; ++c) {
        si += X.at(c, a, b);
        sj += X.at(a, c, b);
        sk += X.at(a, b, c);
      }
      if (si != 1 || sj != 1 || sk != 1) return false;
    }
  return true;
}

bool satisfies_autotopism_constraints(const BinaryTensor& X, const Isotopism& t) {
  if (X.n != t.size()) throw std::invalid_argument("tensor/isotopism order mismatch");
  int n = X.n;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        if (X.at(i, j, k) != X.at(t.alpha(i), t.beta(j), t.gamma(k))) return false;
  return true;
}

double objective(const BinaryTensor& X, const WeightTensor& W) {
  if (X.n != W.n) throw std::invalid_argument("tensor/weight size mismatch");
  double total = 0;
  for (size_t c = 0; c < X.x.size(); ++c)
    if (X.x[c]) total += W.w[c];
  return total;
}

std::pair<BinaryTensor, double> solve_3pap_exact(const WeightTensor& W,
                                                 const std::optional<Isotopism>& t) {
  int n = W.n;
  if (t && t->size() != n) throw std::invalid_argument("weights/isotopism order mismatch");
  if ((!t && n > 4) || (t && n > 5))
    throw GuardError("instance too large for the exhaustive solver");

  std::optional<LatinSquare> best;
  double best_obj = 0;
  auto consider = [&](const LatinSquare& L) {
    double obj = 0;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) obj += W.at(i, j, L.at(i, j));
    if (!best || obj < best_obj || (obj == best_obj && L.cells() < best->cells())) {
      best = L;
      best_obj = obj;
    }
    return true;
  };
  if (t)
    enumerate_ls(*t, std::nullopt, consider);
  else
    enumerate_all_latin(n, consider);
  if (!best) throw InfeasibleError("no feasible solution");
  return {to_tensor(*best), best_obj};
}

}  // namespace autocount
