#ifndef AUTOCOUNT_ASSIGNMENT_HPP
#define AUTOCOUNT_ASSIGNMENT_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "autocount/latin.hpp"

namespace autocount {

// The 0/1 variable cube x_{ijk}, 1-based indices.
struct BinaryTensor {
  int n;
  std::vector<uint8_t> x;  // n^3, linear (i-1)*n^2 + (j-1)*n + (k-1)

  explicit BinaryTensor(int order) : n(order), x(static_cast<size_t>(order) * order * order, 0) {}
  uint8_t at(int i, int j, int k) const { return x[idx(i, j, k)]; }
  void set(int i, int j, int k, bool v) { x[idx(i, j, k)] = v ? 1 : 0; }
  size_t idx(int i, int j, int k) const {
    return static_cast<size_t>(i - 1) * n * n + static_cast<size_t>(j - 1) * n + (k - 1);
  }
  bool operator==(const BinaryTensor&) const = default;
};

struct WeightTensor {
  int n;
  std::vector<double> w;  // same layout

  explicit WeightTensor(int order) : n(order), w(static_cast<size_t>(order) * order * order, 0.0) {}
  double at(int i, int j, int k) const { return w[idx(i, j, k)]; }
  void set(int i, int j, int k, double v) { w[idx(i, j, k)] = v; }
  size_t idx(int i, int j, int k) const {
    return static_cast<size_t>(i - 1) * n * n + static_cast<size_t>(j - 1) * n + (k - 1);
  }
};

struct InfeasibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// x_{ijk} = 1 iff L(i,j) = k.
BinaryTensor to_tensor(const LatinSquare& L);

// Inverse; throws InfeasibleError when X violates the unit-sum constraints.
LatinSquare from_tensor(const BinaryTensor& X);

// All 3n^2 unit-sum families hold.
bool is_feasible(const BinaryTensor& X);

// x_{ijk} = x_{alpha(i) beta(j) gamma(k)} for every triple.
bool satisfies_autotopism_constraints(const BinaryTensor& X, const Isotopism& t);

double objective(const BinaryTensor& X, const WeightTensor& W);

// Exhaustive exact solver over the feasible set, restricted to LS(Theta)
// when an isotopism is supplied. Guard: n <= 4 without Theta, n <= 5 with.
// Ties broken by lexicographic row-major cells of the induced square.
std::pair<BinaryTensor, double> solve_3pap_exact(const WeightTensor& W,
                                                 const std::optional<Isotopism>& t = std::nullopt);

}  // namespace autocount

#endif
