#include <numeric>
#include <random>

#include "autocount/counting.hpp"
#include "autocount/symmetry.hpp"
#include "doctest.h"

using namespace autocount;

namespace {

Permutation random_perm(int n, std::mt19937& rng) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(n, std::move(img));
}

}  // namespace

TEST_CASE("S_Theta basic shapes") {
  Permutation c8 = parse_permutation("(1 2 3 4 5 6 7 8)", 8);
  SThetaSet s = compute_s_theta(Isotopism(c8, c8, c8));
  CHECK(s.indices.size() == 8);
  for (int j = 1; j <= 8; ++j) CHECK(s.contains(1, j));
  CHECK(s.n_alpha == 1);
  CHECK(s.fixed_alpha == 0);

  s = compute_s_theta(Isotopism::identity(4));
  CHECK(s.indices.size() == 16);

  Permutation d = parse_permutation("(1 2)(3 4)", 4);
  s = compute_s_theta(Isotopism(d, d, Permutation(4)));
  CHECK(s.indices.size() == 8);
  for (int j = 1; j <= 4; ++j) {
    CHECK(s.contains(1, j));
    CHECK(s.contains(3, j));
    CHECK_FALSE(s.contains(2, j));
  }
}

TEST_CASE("S_Theta cardinality matches the closed form, randomized to n = 9") {
  std::mt19937 rng(31);
  for (int n = 1; n <= 9; ++n)
    for (int trial = 0; trial < 40; ++trial) {
      Isotopism t(random_perm(n, rng), random_perm(n, rng), random_perm(n, rng));
      SThetaSet s = compute_s_theta(t);
      size_t expect = static_cast<size_t>(s.n_alpha - s.fixed_alpha) * n +
                      static_cast<size_t>(s.fixed_alpha) * s.n_beta;
      CHECK(s.indices.size() == expect);
    }
}

TEST_CASE("phi cases") {
  Permutation d = parse_permutation("(1 2)(3 4)", 4);
  Isotopism t(d, d, Permutation(4));
  CHECK(phi(t, Triple{1, 2, 3}) == Triple{1, 2, 3});  // already inside
  CHECK(phi(t, Triple{2, 1, 3}) == Triple{1, 2, 3});  // one step to the leader row

  Permutation c8 = parse_permutation("(1 2 3 4 5 6 7 8)", 8);
  Isotopism t8(c8, c8, c8);
  // alpha^6 sends 3 to 1
  Triple v{3, 5, 2};
  Triple expect{1, power(c8, 6)(5), power(c8, 6)(2)};
  CHECK(phi(t8, v) == expect);
}

TEST_CASE("orbit") {
  CHECK(orbit(Isotopism::identity(3), Triple{2, 2, 2}).size() == 1);
  Permutation s = parse_permutation("(1 2)", 2);
  Isotopism t(s, s, Permutation(2));
  auto o = orbit(t, Triple{1, 1, 1});
  REQUIRE(o.size() == 2);
  CHECK(o[0] == Triple{1, 1, 1});
  CHECK(o[1] == Triple{2, 2, 1});
}

TEST_CASE("phi: idempotence, orbit membership, memo table") {
  std::mt19937 rng(37);
  for (int n = 2; n <= 6; ++n)
    for (int trial = 0; trial < 10; ++trial) {
      Isotopism t(random_perm(n, rng), random_perm(n, rng), random_perm(n, rng));
      PhiTable tab(t);
      SThetaSet s = compute_s_theta(t);
      long long ord = std::lcm(std::lcm(permutation_order(t.alpha), permutation_order(t.beta)),
                               permutation_order(t.gamma));
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          for (int k = 1; k <= n; ++k) {
            Triple v{i, j, k};
            Triple r = phi(t, v);
            CHECK(s.contains(r.i, r.j));
            CHECK(phi(t, r) == r);
            CHECK(tab.rep(v) == r);
            auto o = orbit(t, v);
            CHECK(ord % static_cast<long long>(o.size()) == 0);
            // the representative of every member lies inside the member's
            // own orbit; when the orbit meets S_Theta in a single triple,
            // all members collapse onto it
            int inside = 0;
            for (const Triple& w : o)
              if (s.contains(w.i, w.j)) ++inside;
            REQUIRE(inside >= 1);
            for (const Triple& w : o) {
              Triple rw = phi(t, w);
              CHECK(std::find(o.begin(), o.end(), rw) != o.end());
              if (inside == 1) CHECK(rw == r);
            }
          }
    }
}

TEST_CASE("reconstruct: identity isotopism is plain validation") {
  Isotopism id = Isotopism::identity(3);
  LatinSquare L = LatinSquare::validate(3, {1, 2, 3, 2, 3, 1, 3, 1, 2});
  CHECK(reconstruct(id, as_partial(L)) == L);
}

TEST_CASE("reconstruct: single orbit step") {
  Permutation s = parse_permutation("(1 2)", 2);
  Isotopism t(s, s, Permutation(2));
  PartialLatinSquare R(2);
  R.set(1, 1, 1);
  R.set(1, 2, 2);
  LatinSquare L = reconstruct(t, R);
  CHECK(L.cells() == std::vector<int>{1, 2, 2, 1});
  CHECK(is_autotopism(t, L));
}

TEST_CASE("reconstruct rejects wrong support and conflicts") {
  Permutation s = parse_permutation("(1 2)", 2);
  Isotopism t(s, s, Permutation(2));
  PartialLatinSquare wrong(2);
  wrong.set(2, 1, 1);  // row 2 is not a leader row
  wrong.set(2, 2, 2);
  CHECK_THROWS_AS(reconstruct(t, wrong), ReconstructionError);

  // rows and columns fixed, gamma = (1 2): every orbit demands the swapped
  // symbol in the same cell
  Isotopism bad(Permutation(2), Permutation(2), parse_permutation("(1 2)", 2));
  PartialLatinSquare R(2);
  R.set(1, 1, 1);
  R.set(1, 2, 2);
  R.set(2, 1, 2);
  R.set(2, 2, 1);
  CHECK_THROWS_AS(reconstruct(bad, R), ReconstructionError);
}

TEST_CASE("round trip over LS(Theta), n = 4") {
  Permutation d = parse_permutation("(1 2)(3 4)", 4);
  Isotopism t(d, d, Permutation(4));
  SThetaSet s = compute_s_theta(t);
  int members = 0;
  enumerate_all_latin(4, [&](const LatinSquare& L) {
    if (!is_autotopism(t, L)) return true;
    ++members;
    PartialLatinSquare R(4);
    for (auto [i, j] : s.indices) R.set(i, j, L.at(i, j));
    CHECK(reconstruct(t, R) == L);
    return true;
  });
  CHECK(members > 0);
}
