#include <numeric>
#include <random>
#include <sstream>

#include "autocount/counting.hpp"
#include "autocount/latin.hpp"
#include "doctest.h"

using namespace autocount;

TEST_CASE("validate latin") {
  CHECK_NOTHROW(LatinSquare::validate(2, {1, 2, 2, 1}));
  CHECK_NOTHROW(LatinSquare::validate(3, {1, 2, 3, 2, 3, 1, 3, 1, 2}));
  CHECK_THROWS_AS(LatinSquare::validate(2, {1, 2, 1, 2}), ValidationError);
  CHECK_THROWS_AS(LatinSquare::validate(2, {1, 1, 2, 2}), ValidationError);
  CHECK_THROWS_AS(LatinSquare::validate(2, {1, 2, 2}), std::invalid_argument);
  CHECK_THROWS_AS(LatinSquare::validate(2, {1, 2, 2, 3}), ValidationError);
}

TEST_CASE("validate partial") {
  CHECK_NOTHROW(PartialLatinSquare::validate(3, std::vector<int>(9, 0)));
  CHECK_THROWS_AS(PartialLatinSquare::validate(2, {1, 0, 1, 0}), ValidationError);
  CHECK_NOTHROW(PartialLatinSquare::validate(2, {1, 0, 0, 1}));
}

TEST_CASE("apply isotopism") {
  LatinSquare L = LatinSquare::validate(2, {1, 2, 2, 1});
  CHECK(apply_isotopism(Isotopism::identity(2), L) == L);
  Isotopism rowswap(parse_permutation("(1 2)", 2), Permutation(2), Permutation(2));
  CHECK(apply_isotopism(rowswap, L).cells() == std::vector<int>{2, 1, 1, 2});
  Isotopism rowcol(parse_permutation("(1 2)", 2), parse_permutation("(1 2)", 2), Permutation(2));
  CHECK(apply_isotopism(rowcol, L) == L);
  CHECK_THROWS_AS(apply_isotopism(Isotopism::identity(3), L), std::invalid_argument);
}

TEST_CASE("is_autotopism") {
  LatinSquare L = LatinSquare::validate(2, {1, 2, 2, 1});
  CHECK(is_autotopism(Isotopism::identity(2), L));
  Permutation s = parse_permutation("(1 2)", 2), id(2);
  CHECK(is_autotopism(Isotopism(s, s, id), L));
  CHECK_FALSE(is_autotopism(Isotopism(s, s, s), L));
}

TEST_CASE("contains") {
  LatinSquare L = LatinSquare::validate(2, {1, 2, 2, 1});
  PartialLatinSquare empty(2);
  CHECK(contains(empty, L));
  PartialLatinSquare p(2);
  p.set(1, 1, 1);
  CHECK(contains(p, L));
  p.clear(1, 1);
  p.set(1, 1, 2);
  CHECK_FALSE(contains(p, L));
  CHECK_THROWS_AS(contains(PartialLatinSquare(3), L), std::invalid_argument);
}

TEST_CASE("group action properties, exhaustive at n <= 4") {
  std::mt19937 rng(5);
  for (int n = 2; n <= 4; ++n) {
    std::vector<LatinSquare> all;
    enumerate_all_latin(n, [&](const LatinSquare& L) {
      all.push_back(L);
      return true;
    });
    auto random_perm = [&](int) {
      std::vector<int> img(n);
      std::iota(img.begin(), img.end(), 1);
      std::shuffle(img.begin(), img.end(), rng);
      return Permutation(n, std::move(img));
    };
    for (int trial = 0; trial < 5; ++trial) {
      Isotopism t1(random_perm(n), random_perm(n), random_perm(n));
      Isotopism t2(random_perm(n), random_perm(n), random_perm(n));
      Isotopism t21(compose(t2.alpha, t1.alpha), compose(t2.beta, t1.beta),
                    compose(t2.gamma, t1.gamma));
      for (const LatinSquare& L : all) {
        CHECK(apply_isotopism(t2, apply_isotopism(t1, L)) == apply_isotopism(t21, L));
        if (is_autotopism(t1, L) && is_autotopism(t2, L)) CHECK(is_autotopism(t21, L));
      }
    }
  }
}

TEST_CASE("square text round trip") {
  LatinSquare L = LatinSquare::validate(3, {1, 2, 3, 2, 3, 1, 3, 1, 2});
  std::stringstream s;
  write_square(s, L);
  CHECK(s.str() == "3\n1 2 3\n2 3 1\n3 1 2\n");
  CHECK(read_square(s) == L);

  PartialLatinSquare P(2);
  P.set(2, 1, 1);
  std::stringstream sp;
  write_partial(sp, P);
  CHECK(sp.str() == "2\n0 0\n1 0\n");
  CHECK(read_partial(sp) == P);
}
