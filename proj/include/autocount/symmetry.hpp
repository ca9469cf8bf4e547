#ifndef AUTOCOUNT_SYMMETRY_HPP
#define AUTOCOUNT_SYMMETRY_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "autocount/latin.hpp"

namespace autocount {

// A variable index (i, j, k) of the 0/1 cube, 1-based.
struct Triple {
  int i, j, k;
  bool operator==(const Triple&) const = default;
};

// Cell set whose entries determine a whole Theta-fixed square: leader rows
// crossed with all columns, fixed-point rows crossed with leader columns.
struct SThetaSet {
  std::vector<std::pair<int, int>> indices;  // ordered (i, j), 1-based
  int n_alpha;        // number of cycles of alpha
  int n_beta;         // number of cycles of beta
  int fixed_alpha;    // number of fixed points of alpha

  bool contains(int i, int j) const { return mask[(i - 1) * n + (j - 1)]; }

  int n = 0;
  std::vector<char> mask;  // n*n, row-major
};

SThetaSet compute_s_theta(const Isotopism& t);

// Representative of the orbit of v: v itself when its cell lies in the
// set, otherwise (alpha^m(i), beta^m(j), gamma^m(k)) for the least power m
// landing the cell inside it.
Triple phi(const Isotopism& t, Triple v);

// The cyclic orbit v, Theta v, Theta^2 v, ... back to v.
std::vector<Triple> orbit(const Isotopism& t, Triple v);

struct ReconstructionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rebuilds the full square from a partial square filled exactly on the
// S_Theta cells, propagating L(alpha(i), beta(j)) = gamma(L(i, j)).
// Throws ReconstructionError on propagation conflict, ValidationError if
// the propagated array is not a Latin square.
LatinSquare reconstruct(const Isotopism& t, const PartialLatinSquare& R);

// Precomputed phi over the whole cube, linear index (i-1)*n^2+(j-1)*n+(k-1).
class PhiTable {
 public:
  explicit PhiTable(const Isotopism& t);
  int n() const { return n_; }
  int rep(int linear) const { return rep_[linear]; }
  Triple rep(Triple v) const;

 private:
  int n_;
  std::vector<int32_t> rep_;
};

}  // namespace autocount

#endif
