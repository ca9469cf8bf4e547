#ifndef AUTOCOUNT_GROEBNER_HPP
#define AUTOCOUNT_GROEBNER_HPP

#include <gmpxx.h>

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "autocount/latin.hpp"

namespace autocount {

// Dense exponent vector over the ideal's variable list. Fine at the scales
// the variable cap admits.
struct Monomial {
  std::vector<uint8_t> e;

  explicit Monomial(int nvars = 0) : e(nvars, 0) {}
  int degree() const;
  bool is_constant() const;
  bool divides(const Monomial& m) const;
  bool operator==(const Monomial&) const = default;
};

Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_div(const Monomial& a, const Monomial& b);  // requires b | a
Monomial mono_lcm(const Monomial& a, const Monomial& b);

struct Term {
  Monomial m;
  mpq_class c;
};

// Terms sorted descending under the order of the computation that produced
// the polynomial; no zero coefficients.
struct Polynomial {
  std::vector<Term> terms;

  bool zero() const { return terms.empty(); }
  const Term& leading() const { return terms.front(); }
};

struct TermOrder {
  enum class Kind { lex, degrevlex };
  Kind kind;
  std::vector<int> vars_by_rank;  // position 0 = most significant variable

  // >0 when a is larger, 0 when equal.
  int cmp(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }
};

TermOrder make_order(TermOrder::Kind kind, int nvars);

// Generators plus the (i, j, k) label of each variable.
struct Ideal {
  int n = 0;  // Latin square order
  int nvars = 0;
  std::vector<std::array<int, 3>> labels;
  std::vector<Polynomial> gens;  // canonical storage order (plain lex)
};

// All five generator families over the n^3 variables: unit sums, the 0/1
// field polynomials F(x) = x(x-1), and the autotopism binomials.
Ideal build_ideal_full(const Isotopism& t);

// Variables restricted to {x_{ijk} : (i,j) in S_Theta}; every occurrence
// rewritten through phi. Optional prefix adds the three indicator-pinning
// families.
Ideal build_ideal_reduced(const Isotopism& t,
                          const std::optional<PartialLatinSquare>& P = std::nullopt);

struct GroebnerOptions {
  int variable_cap = 64;
  size_t basis_cap = 50000;
};

struct ResourceLimit : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotZeroDimensional : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GroebnerBasis {
  int nvars = 0;
  TermOrder order{TermOrder::Kind::degrevlex, {}};
  std::vector<Polynomial> polys;  // reduced, monic, sorted by leading monomial
};

GroebnerBasis buchberger(const Ideal& id, const TermOrder& ord, const GroebnerOptions& opts = {});

// Remainder of multivariate division by the basis.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

// Number of standard monomials; requires a zero-dimensional ideal (every
// variable with a pure-power leading term).
unsigned long long quotient_dimension(const GroebnerBasis& gb);

// One generator per line, variables named x_i_j_k.
std::string dump_ideal(const Ideal& id);
std::string to_string(const Polynomial& p, const std::vector<std::array<int, 3>>& labels);

}  // namespace autocount

#endif
