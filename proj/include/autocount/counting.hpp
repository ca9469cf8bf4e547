#ifndef AUTOCOUNT_COUNTING_HPP
#define AUTOCOUNT_COUNTING_HPP

#include <gmpxx.h>

#include <functional>
#include <optional>

#include "autocount/latin.hpp"
#include "autocount/symmetry.hpp"

namespace autocount {

enum class CountMethod { reduced_backtracking, brute_force, groebner };

const char* to_string(CountMethod m);

struct CountReport {
  mpz_class delta;
  unsigned long long nodes = 0;
  double elapsed_ms = 0.0;
  CountMethod method = CountMethod::reduced_backtracking;
  bool prefix_contradiction = false;
};

// Prefix P supported on S_Theta plus its symmetry coefficient c_P.
// The coefficient is an input, defaulting to 1.
struct SymmetryInput {
  Isotopism theta;
  PartialLatinSquare prefix;
  mpz_class coefficient = 1;
};

struct CountOptions {
  int jobs = 1;              // worker threads; 1 = serial reference path
  double limit_seconds = 0;  // 0 = unbounded
};

struct CountTimeout : std::runtime_error {
  CountTimeout() : std::runtime_error("count aborted: time limit exceeded") {}
};

struct GuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PrefixError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// |LS(Theta)| by backtracking over the S_Theta cells only, propagating each
// assignment over its Theta-orbit. 0 when Theta is not an autotopism of any
// square.
CountReport count_ls(const Isotopism& t, const CountOptions& opts = {});

// |LS_P(Theta)|. Throws PrefixError if the prefix has a cell outside
// S_Theta; a contradictory prefix yields delta 0 with the flag set.
CountReport count_ls_with_prefix(const SymmetryInput& s, const CountOptions& opts = {});

// c_P * |LS_P(Theta)|.
CountReport delta_via_symmetry(const SymmetryInput& s, const CountOptions& opts = {});

// Emits members of LS(Theta); emit returning false stops the stream.
void enumerate_ls(const Isotopism& t, std::optional<long long> limit,
                  const std::function<bool(const LatinSquare&)>& emit);
std::vector<LatinSquare> enumerate_ls(const Isotopism& t,
                                      std::optional<long long> limit = std::nullopt);

// Plain backtracking over all of LS(n); guard n <= 5.
void enumerate_all_latin(int n, const std::function<bool(const LatinSquare&)>& emit);

// Independent oracle: enumerate LS(n), filter by is_autotopism. Guard n <= 5.
CountReport brute_force_count(const Isotopism& t);

}  // namespace autocount

#endif
