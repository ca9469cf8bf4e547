#include "autocount/counting.hpp"

#include <atomic>
#include <bit>
#include <cassert>
#include <chrono>
#include <deque>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace autocount {

const char* to_string(CountMethod m) {
  switch (m) {
    case CountMethod::reduced_backtracking: return "reduced_backtracking";
    case CountMethod::brute_force: return "brute_force";
    case CountMethod::groebner: return "groebner";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

constexpr int kMaxOrder = 31;  // symbol occupancy fits a uint32 bitmask

// Static per-isotopism search data shared by all workers.
struct Problem {
  int n;
  std::vector<int> a, b, g;          // 0-based permutation images
  std::vector<int> cells;            // S_Theta cells as linear i*n+j, branch order
  std::vector<uint32_t> allowed;     // candidate-symbol mask per grid cell
  std::vector<char> is_branch;       // grid cell is an S_Theta cell

  explicit Problem(const Isotopism& t) : n(t.size()) {
    if (n > kMaxOrder) throw GuardError("order too large for bitmask search");
    a.resize(n);
    b.resize(n);
    g.resize(n);
    for (int i = 0; i < n; ++i) {
      a[i] = t.alpha(i + 1) - 1;
      b[i] = t.beta(i + 1) - 1;
      g[i] = t.gamma(i + 1) - 1;
    }
    SThetaSet s = compute_s_theta(t);
    is_branch.assign(n * n, 0);
    for (auto [i, j] : s.indices) {
      cells.push_back((i - 1) * n + (j - 1));
      is_branch[(i - 1) * n + (j - 1)] = 1;
    }
    uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    uint32_t gfix = 0;
    for (int k = 0; k < n; ++k)
      if (g[k] == k) gfix |= 1u << k;
    allowed.assign(n * n, full);
    // cells fixed by both row and column permutation admit only
    // gamma-fixed symbols
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (a[i] == i && b[j] == j) allowed[i * n + j] = gfix;
  }
};

struct State {
  std::vector<int8_t> grid;  // -1 empty, else 0-based symbol
  std::vector<uint32_t> row, col;
  int open_branch = 0;  // unfilled S_Theta cells

  explicit State(const Problem& p)
      : grid(p.n * p.n, -1), row(p.n, 0), col(p.n, 0),
        open_branch(static_cast<int>(p.cells.size())) {}
};

struct Searcher {
  const Problem& p;
  State st;
  std::vector<int> trail;  // linear cells filled, for undo
  unsigned long long nodes = 0;
  std::atomic<bool>* cancel = nullptr;
  Clock::time_point deadline{};
  bool has_deadline = false;
  std::function<bool(const State&)> on_leaf;  // optional; return false to stop
  bool stopped = false;

  Searcher(const Problem& prob, State s) : p(prob), st(std::move(s)) {}

  // Assigns the whole Theta-orbit of (cell, k). Returns false on conflict,
  // leaving the trail past `mark` to be undone by the caller.
  bool assign_orbit(int cell, int k) {
    int n = p.n;
    int ci = cell / n, cj = cell % n, ck = k;
    const int si = ci, sj = cj, sk = ck;
    do {
      int lin = ci * n + cj;
      int8_t cur = st.grid[lin];
      if (cur >= 0) {
        if (cur != ck) return false;
      } else {
        uint32_t bit = 1u << ck;
        if ((st.row[ci] & bit) || (st.col[cj] & bit)) return false;
        st.grid[lin] = static_cast<int8_t>(ck);
        st.row[ci] |= bit;
        st.col[cj] |= bit;
        if (p.is_branch[lin]) --st.open_branch;
        trail.push_back(lin);
      }
      ci = p.a[ci];
      cj = p.b[cj];
      ck = p.g[ck];
    } while (ci != si || cj != sj || ck != sk);
    return true;
  }

  void undo_to(size_t mark) {
    int n = p.n;
    while (trail.size() > mark) {
      int lin = trail.back();
      trail.pop_back();
      uint32_t bit = 1u << st.grid[lin];
      st.grid[lin] = -1;
      st.row[lin / n] &= ~bit;
      st.col[lin % n] &= ~bit;
      if (p.is_branch[lin]) ++st.open_branch;
    }
  }

  // Most-constrained unfilled branch cell; returns -1 when none remain.
  int pick_cell(uint32_t& cand) const {
    int best = -1;
    int best_cnt = p.n + 1;
    for (int cell : p.cells) {
      if (st.grid[cell] >= 0) continue;
      uint32_t m = p.allowed[cell] & ~st.row[cell / p.n] & ~st.col[cell % p.n];
      int cnt = std::popcount(m);
      if (cnt < best_cnt) {
        best = cell;
        best_cnt = cnt;
        cand = m;
        if (cnt <= 1) break;
      }
    }
    return best;
  }

  void check_budget() {
    if ((nodes & 0xfff) != 0) return;
    if (cancel && cancel->load(std::memory_order_relaxed)) stopped = true;
    if (has_deadline && Clock::now() > deadline) {
      stopped = true;
      if (cancel) cancel->store(true, std::memory_order_relaxed);
    }
  }

  mpz_class run() {
    if (st.open_branch == 0) {
      if (on_leaf && !on_leaf(st)) stopped = true;
      return 1;
    }
    uint32_t cand = 0;
    int cell = pick_cell(cand);
    mpz_class total = 0;
    while (cand && !stopped) {
      int k = std::countr_zero(cand);
      cand &= cand - 1;
      ++nodes;
      check_budget();
      if (stopped) break;
      size_t mark = trail.size();
      if (assign_orbit(cell, k)) total += run();
      undo_to(mark);
    }
    return total;
  }
};

CountOptions effective(const CountOptions& o) {
  CountOptions e = o;
  if (e.jobs < 1) e.jobs = 1;
  return e;
}

// Expands the search frontier breadth-first until there are enough
// independent subtrees to distribute.
struct Frontier {
  std::deque<State> states;
  mpz_class base = 0;  // leaves met during expansion
  unsigned long long nodes = 0;
};

Frontier expand_frontier(const Problem& p, const State& root, int target) {
  Frontier f;
  f.states.push_back(root);
  while (static_cast<int>(f.states.size()) < target) {
    bool grew = false;
    size_t layer = f.states.size();
    for (size_t s = 0; s < layer; ++s) {
      State cur = std::move(f.states.front());
      f.states.pop_front();
      if (cur.open_branch == 0) {
        f.base += 1;
        continue;
      }
      Searcher probe(p, std::move(cur));
      uint32_t cand = 0;
      int cell = probe.pick_cell(cand);
      while (cand) {
        int k = std::countr_zero(cand);
        cand &= cand - 1;
        ++f.nodes;
        size_t mark = probe.trail.size();
        if (probe.assign_orbit(cell, k)) {
          f.states.push_back(probe.st);
          grew = true;
        }
        probe.undo_to(mark);
      }
    }
    if (!grew) break;
  }
  return f;
}

mpz_class parallel_count(const Problem& p, const State& root, const CountOptions& opts,
                         unsigned long long& nodes, Clock::time_point deadline,
                         bool has_deadline) {
  Frontier f = expand_frontier(p, root, opts.jobs * 8);
  nodes += f.nodes;
  std::vector<State> work(f.states.begin(), f.states.end());
  std::atomic<bool> cancel{false};
  mpz_class total = f.base;
  unsigned long long total_nodes = 0;
  bool timed_out = false;
#ifdef _OPENMP
#pragma omp parallel num_threads(opts.jobs) reduction(+ : total_nodes)
  {
    mpz_class local = 0;
#pragma omp for schedule(dynamic)
    for (int s = 0; s < static_cast<int>(work.size()); ++s) {
      if (cancel.load(std::memory_order_relaxed)) continue;
      Searcher sr(p, work[s]);
      sr.cancel = &cancel;
      sr.deadline = deadline;
      sr.has_deadline = has_deadline;
      local += sr.run();
      total_nodes += sr.nodes;
      if (sr.stopped) cancel.store(true, std::memory_order_relaxed);
    }
#pragma omp critical
    total += local;
  }
  timed_out = cancel.load();
#else
  for (auto& w : work) {
    Searcher sr(p, w);
    sr.deadline = deadline;
    sr.has_deadline = has_deadline;
    total += sr.run();
    total_nodes += sr.nodes;
    if (sr.stopped) { timed_out = true; break; }
  }
#endif
  nodes += total_nodes;
  if (timed_out) throw CountTimeout();
  return total;
}

CountReport finish(CountReport r, Clock::time_point t0) {
  r.elapsed_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
  return r;
}

CountReport run_count(const Problem& p, const State& seed, const CountOptions& o) {
  auto t0 = Clock::now();
  CountReport r;
  bool has_deadline = o.limit_seconds > 0;
  auto deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                     std::chrono::duration<double>(o.limit_seconds));
  if (o.jobs > 1) {
    r.delta = parallel_count(p, seed, o, r.nodes, deadline, has_deadline);
  } else {
    Searcher sr(p, seed);
    sr.deadline = deadline;
    sr.has_deadline = has_deadline;
    r.delta = sr.run();
    r.nodes = sr.nodes;
    if (sr.stopped) throw CountTimeout();
  }
  return finish(std::move(r), t0);
}

}  // namespace

CountReport count_ls(const Isotopism& t, const CountOptions& opts) {
  Problem p(t);
  return run_count(p, State(p), effective(opts));
}

CountReport count_ls_with_prefix(const SymmetryInput& s, const CountOptions& opts) {
  const Isotopism& t = s.theta;
  if (s.prefix.size() != t.size())
    throw std::invalid_argument("prefix/isotopism order mismatch");
  Problem p(t);
  SThetaSet set = compute_s_theta(t);
  int n = t.size();
  State seed(p);
  Searcher seeder(p, std::move(seed));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (!s.prefix.filled(i, j)) continue;
      if (!set.contains(i, j))
        throw PrefixError("prefix cell (" + std::to_string(i) + "," + std::to_string(j) +
                          ") lies outside S_Theta");
      int cell = (i - 1) * n + (j - 1);
      int k = s.prefix.at(i, j) - 1;
      if (!(p.allowed[cell] & (1u << k)) || !seeder.assign_orbit(cell, k)) {
        auto t0 = Clock::now();
        CountReport r;
        r.delta = 0;
        r.prefix_contradiction = true;
        return finish(std::move(r), t0);
      }
    }
  return run_count(p, seeder.st, effective(opts));
}

CountReport delta_via_symmetry(const SymmetryInput& s, const CountOptions& opts) {
  if (s.coefficient <= 0) throw std::invalid_argument("coefficient must be positive");
  CountReport r = count_ls_with_prefix(s, opts);
  r.delta *= s.coefficient;
  return r;
}

void enumerate_ls(const Isotopism& t, std::optional<long long> limit,
                  const std::function<bool(const LatinSquare&)>& emit) {
  if (limit && *limit <= 0) return;
  Problem p(t);
  State seed(p);
  Searcher sr(p, std::move(seed));
  long long emitted = 0;
  sr.on_leaf = [&](const State& st) {
    std::vector<int> cells(st.grid.size());
    for (size_t c = 0; c < cells.size(); ++c) cells[c] = st.grid[c] + 1;
    LatinSquare L = LatinSquare::validate(t.size(), std::move(cells));
    if (!emit(L)) return false;
    ++emitted;
    return !(limit && emitted >= *limit);
  };
  sr.run();
}

std::vector<LatinSquare> enumerate_ls(const Isotopism& t, std::optional<long long> limit) {
  std::vector<LatinSquare> out;
  enumerate_ls(t, limit, [&](const LatinSquare& L) {
    out.push_back(L);
    return true;
  });
  return out;
}

void enumerate_all_latin(int n, const std::function<bool(const LatinSquare&)>& emit) {
  if (n < 1) throw std::invalid_argument("order must be positive");
  if (n > 5) throw GuardError("plain enumeration guarded to n <= 5");
  std::vector<int> grid(n * n, 0);
  std::vector<uint32_t> row(n, 0), col(n, 0);
  bool stop = false;
  auto rec = [&](auto&& self, int pos) -> void {
    if (stop) return;
    if (pos == n * n) {
      std::vector<int> cells(grid);
      if (!emit(LatinSquare::validate(n, std::move(cells)))) stop = true;
      return;
    }
    int i = pos / n, j = pos % n;
    uint32_t free = ~(row[i] | col[j]) & ((1u << n) - 1);
    while (free && !stop) {
      int k = std::countr_zero(free);
      free &= free - 1;
      uint32_t bit = 1u << k;
      grid[pos] = k + 1;
      row[i] |= bit;
      col[j] |= bit;
      self(self, pos + 1);
      row[i] &= ~bit;
      col[j] &= ~bit;
      grid[pos] = 0;
    }
  };
  rec(rec, 0);
}

CountReport brute_force_count(const Isotopism& t) {
  auto t0 = Clock::now();
  CountReport r;
  r.method = CountMethod::brute_force;
  unsigned long long seen = 0;
  mpz_class count = 0;
  enumerate_all_latin(t.size(), [&](const LatinSquare& L) {
    ++seen;
    if (is_autotopism(t, L)) count += 1;
    return true;
  });
  r.delta = count;
  r.nodes = seen;
  return finish(std::move(r), t0);
}

}  // namespace autocount
