#include "autocount/symmetry.hpp"

#include <cassert>

namespace autocount {

SThetaSet compute_s_theta(const Isotopism& t) {
  int n = t.size();
  SThetaSet s;
  s.n = n;
  s.mask.assign(n * n, 0);

  auto da = cycle_decomposition(t.alpha);
  auto db = cycle_decomposition(t.beta);
  s.n_alpha = static_cast<int>(da.cycles.size());
  s.n_beta = static_cast<int>(db.cycles.size());
  s.fixed_alpha = 0;
  for (const auto& c : da.cycles)
    if (c.size() == 1) ++s.fixed_alpha;

  std::vector<char> beta_leader(n + 1, 0);
  for (const auto& c : db.cycles) beta_leader[c.front()] = 1;

  for (const auto& c : da.cycles) {
    int i = c.front();
    if (c.size() > 1) {
      for (int j = 1; j <= n; ++j) {
        s.indices.emplace_back(i, j);
        s.mask[(i - 1) * n + (j - 1)] = 1;
      }
    } else {
      for (int j = 1; j <= n; ++j)
        if (beta_leader[j]) {
          s.indices.emplace_back(i, j);
          s.mask[(i - 1) * n + (j - 1)] = 1;
        }
    }
  }
  return s;
}

Triple phi(const Isotopism& t, Triple v) {
  SThetaSet s = compute_s_theta(t);
  if (s.contains(v.i, v.j)) return v;
  Triple w = v;
  for (int l = 1; l <= t.size(); ++l) {
    w = Triple{t.alpha(w.i), t.beta(w.j), t.gamma(w.k)};
    if (s.contains(w.i, w.j)) return w;
  }
  // every cell orbit meets S_Theta within n steps; asserted, not assumed
  assert(false && "phi: orbit never met S_Theta");
  throw std::logic_error("phi: orbit never met S_Theta");
}

std::vector<Triple> orbit(const Isotopism& t, Triple v) {
  std::vector<Triple> out{v};
  Triple w{t.alpha(v.i), t.beta(v.j), t.gamma(v.k)};
  while (!(w == v)) {
    out.push_back(w);
    w = Triple{t.alpha(w.i), t.beta(w.j), t.gamma(w.k)};
  }
  return out;
}

LatinSquare reconstruct(const Isotopism& t, const PartialLatinSquare& R) {
  int n = t.size();
  if (R.size() != n) throw std::invalid_argument("reconstruct: order mismatch");
  SThetaSet s = compute_s_theta(t);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (R.filled(i, j) != static_cast<bool>(s.contains(i, j)))
        throw ReconstructionError("reconstruct: filled cells must be exactly the S_Theta cells");

  std::vector<int> cells(n * n, 0);
  for (auto [i, j] : s.indices) {
    int k = R.at(i, j);
    for (const Triple& w : orbit(t, Triple{i, j, k})) {
      int& cell = cells[(w.i - 1) * n + (w.j - 1)];
      if (cell != 0 && cell != w.k)
        throw ReconstructionError("reconstruct: orbit propagation conflict at (" +
                                  std::to_string(w.i) + "," + std::to_string(w.j) + ")");
      cell = w.k;
    }
  }
  for (int v : cells)
    if (v == 0) throw ReconstructionError("reconstruct: propagation left empty cells");
  return LatinSquare::validate(n, std::move(cells));
}

PhiTable::PhiTable(const Isotopism& t) : n_(t.size()) {
  int n = n_;
  SThetaSet s = compute_s_theta(t);
  rep_.assign(static_cast<size_t>(n) * n * n, -1);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        size_t idx = static_cast<size_t>(i - 1) * n * n + (j - 1) * n + (k - 1);
        if (rep_[idx] >= 0) continue;
        Triple w{i, j, k};
        int l = 0;
        while (!s.contains(w.i, w.j) && l <= n) {
          w = Triple{t.alpha(w.i), t.beta(w.j), t.gamma(w.k)};
          ++l;
        }
        assert(s.contains(w.i, w.j));
        rep_[idx] = static_cast<int32_t>((w.i - 1) * n * n + (w.j - 1) * n + (w.k - 1));
      }
}

Triple PhiTable::rep(Triple v) const {
  int n = n_;
  int r = rep_[static_cast<size_t>(v.i - 1) * n * n + (v.j - 1) * n + (v.k - 1)];
  return Triple{r / (n * n) + 1, (r / n) % n + 1, r % n + 1};
}

}  // namespace autocount
