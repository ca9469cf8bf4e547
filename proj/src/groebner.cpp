#include "autocount/groebner.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

#include "autocount/counting.hpp"
#include "autocount/symmetry.hpp"

namespace autocount {

int Monomial::degree() const {
  int d = 0;
  for (uint8_t v : e) d += v;
  return d;
}

bool Monomial::is_constant() const {
  for (uint8_t v : e)
    if (v) return false;
  return true;
}

bool Monomial::divides(const Monomial& m) const {
  for (size_t v = 0; v < e.size(); ++v)
    if (e[v] > m.e[v]) return false;
  return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (size_t v = 0; v < r.e.size(); ++v) {
    assert(static_cast<int>(r.e[v]) + b.e[v] < 256);
    r.e[v] = static_cast<uint8_t>(r.e[v] + b.e[v]);
  }
  return r;
}

Monomial mono_div(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (size_t v = 0; v < r.e.size(); ++v) {
    assert(r.e[v] >= b.e[v]);
    r.e[v] = static_cast<uint8_t>(r.e[v] - b.e[v]);
  }
  return r;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (size_t v = 0; v < r.e.size(); ++v) r.e[v] = std::max(r.e[v], b.e[v]);
  return r;
}

int TermOrder::cmp(const Monomial& a, const Monomial& b) const {
  if (kind == Kind::lex) {
    for (int v : vars_by_rank) {
      if (a.e[v] != b.e[v]) return a.e[v] > b.e[v] ? 1 : -1;
    }
    return 0;
  }
  int da = a.degree(), db = b.degree();
  if (da != db) return da > db ? 1 : -1;
  // graded reverse lex: last differing position, smaller exponent wins
  for (auto it = vars_by_rank.rbegin(); it != vars_by_rank.rend(); ++it) {
    int v = *it;
    if (a.e[v] != b.e[v]) return a.e[v] < b.e[v] ? 1 : -1;
  }
  return 0;
}

TermOrder make_order(TermOrder::Kind kind, int nvars) {
  TermOrder o{kind, std::vector<int>(nvars)};
  for (int v = 0; v < nvars; ++v) o.vars_by_rank[v] = v;
  return o;
}

namespace {

// Sort terms descending, merge duplicates, drop zeros.
Polynomial normalize(std::vector<Term> terms, const TermOrder& ord) {
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ord.cmp(a.m, b.m) > 0; });
  Polynomial p;
  for (auto& t : terms) {
    if (!p.terms.empty() && p.terms.back().m == t.m)
      p.terms.back().c += t.c;
    else
      p.terms.push_back(std::move(t));
    if (!p.terms.empty() && p.terms.back().c == 0) p.terms.pop_back();
  }
  return p;
}

// f - c * x^m * g, all sorted under ord.
Polynomial sub_scaled(const Polynomial& f, const mpq_class& c, const Monomial& m,
                      const Polynomial& g, const TermOrder& ord) {
  Polynomial r;
  r.terms.reserve(f.terms.size() + g.terms.size());
  size_t a = 0, b = 0;
  while (a < f.terms.size() || b < g.terms.size()) {
    if (b == g.terms.size()) {
      r.terms.push_back(f.terms[a++]);
      continue;
    }
    Monomial gm = mono_mul(g.terms[b].m, m);
    if (a == f.terms.size()) {
      mpq_class gc = -c * g.terms[b].c;
      if (gc != 0) r.terms.push_back(Term{std::move(gm), std::move(gc)});
      ++b;
      continue;
    }
    int cm = ord.cmp(f.terms[a].m, gm);
    if (cm > 0) {
      r.terms.push_back(f.terms[a++]);
    } else if (cm < 0) {
      mpq_class gc = -c * g.terms[b].c;
      if (gc != 0) r.terms.push_back(Term{std::move(gm), std::move(gc)});
      ++b;
    } else {
      mpq_class coef = f.terms[a].c - c * g.terms[b].c;
      if (coef != 0) r.terms.push_back(Term{std::move(gm), std::move(coef)});
      ++a;
      ++b;
    }
  }
  return r;
}

Polynomial resort(const Polynomial& p, const TermOrder& ord) {
  return normalize(p.terms, ord);
}

void make_monic(Polynomial& p) {
  if (p.zero()) return;
  mpq_class lc = p.terms.front().c;
  if (lc == 1) return;
  for (auto& t : p.terms) t.c /= lc;
}

// Full normal form against a list of (already sorted, monic-or-not) polys.
Polynomial reduce_full(Polynomial work, const std::vector<Polynomial>& basis,
                       const TermOrder& ord) {
  Polynomial rem;
  while (!work.zero()) {
    const Term& lt = work.terms.front();
    const Polynomial* red = nullptr;
    for (const Polynomial& g : basis) {
      if (!g.zero() && g.leading().m.divides(lt.m)) {
        red = &g;
        break;
      }
    }
    if (red) {
      mpq_class c = lt.c / red->leading().c;
      Monomial m = mono_div(lt.m, red->leading().m);
      work = sub_scaled(work, c, m, *red, ord);
    } else {
      rem.terms.push_back(lt);
      work.terms.erase(work.terms.begin());
    }
  }
  return rem;
}

struct Pair {
  int i, j;
  Monomial lcm;
  int deg;
};

}  // namespace

GroebnerBasis buchberger(const Ideal& id, const TermOrder& ord, const GroebnerOptions& opts) {
  if (id.nvars > opts.variable_cap)
    throw ResourceLimit("variable count " + std::to_string(id.nvars) +
                        " exceeds the cap; use the combinatorial path");

  std::vector<Polynomial> G;
  std::vector<Pair> pairs;

  auto push_pairs = [&](int t) {
    for (int i = 0; i < t; ++i) {
      if (G[i].zero()) continue;
      Monomial l = mono_lcm(G[i].leading().m, G[t].leading().m);
      pairs.push_back(Pair{i, t, l, l.degree()});
    }
  };

  auto add_poly = [&](Polynomial h) {
    make_monic(h);
    G.push_back(std::move(h));
    if (G.size() > opts.basis_cap) throw ResourceLimit("basis size cap exceeded");
    push_pairs(static_cast<int>(G.size()) - 1);
  };

  for (const Polynomial& gen : id.gens) {
    Polynomial h = reduce_full(resort(gen, ord), G, ord);
    if (!h.zero()) add_poly(std::move(h));
  }

  while (!pairs.empty()) {
    // normal strategy: smallest lcm degree first
    size_t best = 0;
    for (size_t s = 1; s < pairs.size(); ++s) {
      if (pairs[s].deg < pairs[best].deg ||
          (pairs[s].deg == pairs[best].deg && ord.cmp(pairs[s].lcm, pairs[best].lcm) < 0))
        best = s;
    }
    Pair pr = pairs[best];
    pairs[best] = pairs.back();
    pairs.pop_back();

    const Monomial& lmi = G[pr.i].leading().m;
    const Monomial& lmj = G[pr.j].leading().m;

    // first criterion: coprime leading monomials
    if (mono_mul(lmi, lmj) == pr.lcm) continue;

    // chain criterion with strictly smaller sub-lcms
    bool skip = false;
    for (size_t k = 0; k < G.size() && !skip; ++k) {
      if (static_cast<int>(k) == pr.i || static_cast<int>(k) == pr.j || G[k].zero()) continue;
      const Monomial& lmk = G[k].leading().m;
      if (lmk.divides(pr.lcm) && !(mono_lcm(lmi, lmk) == pr.lcm) &&
          !(mono_lcm(lmk, lmj) == pr.lcm))
        skip = true;
    }
    if (skip) continue;

    // S-polynomial
    mpq_class ci = 1 / G[pr.i].leading().c;
    mpq_class cj = 1 / G[pr.j].leading().c;
    Polynomial s;
    {
      Polynomial left;
      Monomial mi = mono_div(pr.lcm, lmi);
      for (const Term& t : G[pr.i].terms) left.terms.push_back(Term{mono_mul(t.m, mi), ci * t.c});
      s = sub_scaled(left, cj, mono_div(pr.lcm, lmj), G[pr.j], ord);
    }
    Polynomial h = reduce_full(std::move(s), G, ord);
    if (!h.zero()) add_poly(std::move(h));
  }

  // minimalize: drop any element whose leading monomial another divides
  std::vector<Polynomial> minimal;
  for (size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j) continue;
      if (G[j].leading().m.divides(G[i].leading().m)) {
        if (!(G[i].leading().m == G[j].leading().m) || j < i) redundant = true;
      }
    }
    if (!redundant) minimal.push_back(G[i]);
  }

  // tail-reduce each element against the others
  std::vector<Polynomial> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Polynomial h = reduce_full(minimal[i], others, ord);
    if (!h.zero()) {
      make_monic(h);
      reduced.push_back(std::move(h));
    }
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord.cmp(a.leading().m, b.leading().m) > 0;
  });

  GroebnerBasis gb;
  gb.nvars = id.nvars;
  gb.order = ord;
  gb.polys = std::move(reduced);
  return gb;
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
  return reduce_full(resort(p, gb.order), gb.polys, gb.order);
}

unsigned long long quotient_dimension(const GroebnerBasis& gb) {
  for (const Polynomial& g : gb.polys)
    if (g.leading().m.is_constant()) return 0;  // the whole ring: empty variety

  std::vector<const Monomial*> lms;
  for (const Polynomial& g : gb.polys) lms.push_back(&g.leading().m);

  int nv = gb.nvars;
  for (int v = 0; v < nv; ++v) {
    bool pure = false;
    for (const Monomial* m : lms) {
      if (m->e[v] == 0) continue;
      bool only_v = true;
      for (int u = 0; u < nv && only_v; ++u)
        if (u != v && m->e[u] != 0) only_v = false;
      if (only_v) {
        pure = true;
        break;
      }
    }
    if (!pure)
      throw NotZeroDimensional("variable without a pure-power leading term");
  }

  // staircase walk: extend exponent by exponent, prune once a leading
  // monomial divides
  Monomial cur(nv);
  unsigned long long count = 0;
  auto divisible = [&]() {
    for (const Monomial* m : lms)
      if (m->divides(cur)) return true;
    return false;
  };
  auto rec = [&](auto&& self, int v) -> void {
    if (v == nv) {
      ++count;
      return;
    }
    for (int e = 0;; ++e) {
      cur.e[v] = static_cast<uint8_t>(e);
      if (divisible()) break;
      self(self, v + 1);
    }
    cur.e[v] = 0;
  };
  rec(rec, 0);
  return count;
}

namespace {

// canonical storage order for ideal generators
TermOrder storage_order(int nvars) { return make_order(TermOrder::Kind::lex, nvars); }

std::string poly_key(const Polynomial& p) {
  std::ostringstream out;
  for (const Term& t : p.terms) {
    out << t.c.get_str() << ':';
    for (uint8_t e : t.m.e) out << static_cast<int>(e) << ',';
    out << ';';
  }
  return out.str();
}

struct IdealBuilder {
  Ideal id;
  TermOrder ord{TermOrder::Kind::lex, {}};
  std::vector<std::string> seen;

  void init(int n, int nvars, std::vector<std::array<int, 3>> labels) {
    id.n = n;
    id.nvars = nvars;
    id.labels = std::move(labels);
    ord = storage_order(nvars);
  }

  Monomial var(int v) const {
    Monomial m(id.nvars);
    m.e[v] = 1;
    return m;
  }

  void add(std::vector<Term> terms) {
    Polynomial p = normalize(std::move(terms), ord);
    if (p.zero()) return;
    std::string key = poly_key(p);
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) return;
    seen.push_back(std::move(key));
    id.gens.push_back(std::move(p));
  }

  void add_field(int v) {  // x^2 - x
    Monomial sq(id.nvars);
    sq.e[v] = 2;
    add({Term{std::move(sq), 1}, Term{var(v), -1}});
  }
};

}  // namespace

Ideal build_ideal_full(const Isotopism& t) {
  int n = t.size();
  IdealBuilder b;
  std::vector<std::array<int, 3>> labels;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) labels.push_back({i, j, k});
  b.init(n, n * n * n, std::move(labels));
  auto vid = [n](int i, int j, int k) { return (i - 1) * n * n + (j - 1) * n + (k - 1); };

  for (int a = 1; a <= n; ++a)
    for (int c = 1; c <= n; ++c) {
      std::vector<Term> si, sj, sk;
      for (int v = 1; v <= n; ++v) {
        si.push_back(Term{b.var(vid(v, a, c)), 1});
        sj.push_back(Term{b.var(vid(a, v, c)), 1});
        sk.push_back(Term{b.var(vid(a, c, v)), 1});
      }
      for (auto* fam : {&si, &sj, &sk}) {
        fam->push_back(Term{Monomial(n * n * n), -1});
        b.add(std::move(*fam));
      }
    }
  for (int v = 0; v < n * n * n; ++v) b.add_field(v);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        int u = vid(i, j, k), w = vid(t.alpha(i), t.beta(j), t.gamma(k));
        if (u == w) continue;  // trivial x - x
        b.add({Term{b.var(u), 1}, Term{b.var(w), -1}});
      }
  return b.id;
}

Ideal build_ideal_reduced(const Isotopism& t, const std::optional<PartialLatinSquare>& P) {
  int n = t.size();
  SThetaSet s = compute_s_theta(t);
  PhiTable tab(t);

  std::vector<int> vmap(static_cast<size_t>(n) * n * n, -1);
  std::vector<std::array<int, 3>> labels;
  for (auto [i, j] : s.indices)
    for (int k = 1; k <= n; ++k) {
      vmap[(i - 1) * n * n + (j - 1) * n + (k - 1)] = static_cast<int>(labels.size());
      labels.push_back({i, j, k});
    }
  int nvars = static_cast<int>(labels.size());
  IdealBuilder b;
  b.init(n, nvars, std::move(labels));

  auto pvid = [&](int i, int j, int k) {
    Triple r = tab.rep(Triple{i, j, k});
    int v = vmap[(r.i - 1) * n * n + (r.j - 1) * n + (r.k - 1)];
    assert(v >= 0);
    return v;
  };

  for (int a = 1; a <= n; ++a)
    for (int c = 1; c <= n; ++c) {
      std::vector<Term> si, sj, sk;
      for (int v = 1; v <= n; ++v) {
        si.push_back(Term{b.var(pvid(v, a, c)), 1});
        sj.push_back(Term{b.var(pvid(a, v, c)), 1});
        sk.push_back(Term{b.var(pvid(a, c, v)), 1});
      }
      for (auto* fam : {&si, &sj, &sk}) {
        fam->push_back(Term{Monomial(nvars), -1});
        b.add(std::move(*fam));
      }
    }

  // cells fixed by alpha and beta force gamma-fixed symbols
  for (int i = 1; i <= n; ++i) {
    if (t.alpha(i) != i) continue;
    for (int j = 1; j <= n; ++j) {
      if (t.beta(j) != j) continue;
      for (int k = 1; k <= n; ++k)
        if (t.gamma(k) != k) b.add({Term{b.var(pvid(i, j, k)), 1}});
    }
  }

  for (auto [i, j] : s.indices)
    for (int k = 1; k <= n; ++k) b.add_field(pvid(i, j, k));

  if (P) {
    if (P->size() != n) throw std::invalid_argument("prefix/isotopism order mismatch");
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (!P->filled(i, j)) continue;
        if (!s.contains(i, j))
          throw PrefixError("prefix cell (" + std::to_string(i) + "," + std::to_string(j) +
                            ") lies outside S_Theta");
        int p = P->at(i, j);
        for (int l = 1; l <= n; ++l) {
          mpq_class cell = (l == p) ? -1 : 0;
          b.add({Term{b.var(pvid(i, j, l)), 1}, Term{Monomial(nvars), cell}});
          mpq_class colhit = (l == j) ? -1 : 0;
          b.add({Term{b.var(pvid(i, l, p)), 1}, Term{Monomial(nvars), colhit}});
          mpq_class rowhit = (l == i) ? -1 : 0;
          b.add({Term{b.var(pvid(l, j, p)), 1}, Term{Monomial(nvars), rowhit}});
        }
      }
  }
  return b.id;
}

std::string to_string(const Polynomial& p, const std::vector<std::array<int, 3>>& labels) {
  if (p.zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const Term& t : p.terms) {
    mpq_class c = t.c;
    if (!first) {
      out << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    } else if (c < 0) {
      out << '-';
      c = -c;
    }
    first = false;
    bool printed_coef = false;
    if (c != 1 || t.m.is_constant()) {
      out << c.get_str();
      printed_coef = true;
    }
    for (size_t v = 0; v < t.m.e.size(); ++v) {
      if (!t.m.e[v]) continue;
      if (printed_coef) out << '*';
      out << "x_" << labels[v][0] << '_' << labels[v][1] << '_' << labels[v][2];
      if (t.m.e[v] > 1) out << '^' << static_cast<int>(t.m.e[v]);
      printed_coef = true;
    }
  }
  return out.str();
}

std::string dump_ideal(const Ideal& id) {
  std::ostringstream out;
  for (const Polynomial& g : id.gens) out << to_string(g, id.labels) << '\n';
  return out.str();
}

}  // namespace autocount
