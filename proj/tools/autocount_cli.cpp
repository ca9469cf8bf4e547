// Command-line front end: delta counts, enumeration, and the reference
// table regression check.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "autocount/counting.hpp"
#include "autocount/groebner.hpp"
#include "autocount/table.hpp"

using json = nlohmann::json;
using namespace autocount;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitGuard = 3;
constexpr int kExitTimeout = 4;

struct IsotopismArgs {
  int n = 0;
  std::string alpha, beta, gamma;
  std::string cycle_structure;  // "la|lb|lg"

  void attach(CLI::App* cmd) {
    cmd->add_option("--n", n, "order of the square")->required();
    cmd->add_option("--alpha", alpha, "row permutation (one-line or cycle form)");
    cmd->add_option("--beta", beta, "column permutation");
    cmd->add_option("--gamma", gamma, "symbol permutation");
    cmd->add_option("--cycle-structure", cycle_structure,
                    "cycle structures \"la|lb|lg\"; builds canonical representatives");
  }

  Isotopism build() const {
    if (!cycle_structure.empty()) {
      std::vector<std::string> parts;
      std::stringstream ss(cycle_structure);
      std::string item;
      while (std::getline(ss, item, '|')) parts.push_back(item);
      if (parts.size() != 3)
        throw ParseError(ParseError::Kind::Malformed,
                         "--cycle-structure needs three '|'-separated structures");
      return Isotopism(
          permutation_from_cycle_structure(parse_cycle_structure(parts[0], n)),
          permutation_from_cycle_structure(parse_cycle_structure(parts[1], n)),
          permutation_from_cycle_structure(parse_cycle_structure(parts[2], n)));
    }
    auto one = [&](const std::string& s) {
      return s.empty() ? Permutation(n) : parse_permutation(s, n);
    };
    return Isotopism(one(alpha), one(beta), one(gamma));
  }
};

PartialLatinSquare load_partial(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  char c = 0;
  in >> c;
  in.putback(c);
  if (c == '{') {
    json j = json::parse(in);
    int n = j.at("n").get<int>();
    std::vector<int> cells;
    for (const auto& row : j.at("cells"))
      for (const auto& v : row) cells.push_back(v.is_null() ? 0 : v.get<int>());
    return PartialLatinSquare::validate(n, std::move(cells));
  }
  return read_partial(in);
}

json report_json(const Isotopism& t, const CountReport& r) {
  json j;
  j["n"] = t.size();
  j["alpha"] = to_one_line(t.alpha);
  j["beta"] = to_one_line(t.beta);
  j["gamma"] = to_one_line(t.gamma);
  j["cycle_structure"] = {cycle_structure(t.alpha).counts, cycle_structure(t.beta).counts,
                          cycle_structure(t.gamma).counts};
  j["delta"] = r.delta.get_str();
  j["method"] = to_string(r.method);
  j["nodes"] = r.nodes;
  j["elapsed_ms"] = r.elapsed_ms;
  if (r.prefix_contradiction) j["prefix_contradiction"] = true;
  return j;
}

int default_jobs() {
  if (const char* env = std::getenv("AUTOCOUNT_JOBS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

struct DeltaArgs {
  IsotopismArgs iso;
  std::string method = "search";
  std::string prefix_file;
  std::string coeff = "1";
  int jobs = default_jobs();
  double limit_seconds = 0;
  bool pretty = false;
};

int run_delta(const DeltaArgs& a) {
  Isotopism t = a.iso.build();
  CountOptions opts{a.jobs, a.limit_seconds};
  mpz_class coeff;
  if (coeff.set_str(a.coeff, 10) != 0 || coeff <= 0)
    throw ParseError(ParseError::Kind::Malformed, "--coeff must be a positive integer");

  CountReport r;
  std::optional<PartialLatinSquare> prefix;
  if (!a.prefix_file.empty()) prefix = load_partial(a.prefix_file);

  if (a.method == "search") {
    if (prefix || coeff != 1) {
      SymmetryInput in{t, prefix ? *prefix : PartialLatinSquare(t.size()), coeff};
      r = delta_via_symmetry(in, opts);
    } else {
      r = count_ls(t, opts);
    }
  } else if (a.method == "brute") {
    if (t.size() > 5) throw GuardError("brute force guarded to n <= 5");
    r = brute_force_count(t);
    r.delta *= coeff;
  } else if (a.method == "groebner") {
    auto t0 = std::chrono::steady_clock::now();
    Ideal id = build_ideal_reduced(t, prefix);
    GroebnerBasis gb = buchberger(id, make_order(TermOrder::Kind::degrevlex, id.nvars));
    r.delta = coeff * mpz_class(static_cast<unsigned long>(quotient_dimension(gb)));
    r.method = CountMethod::groebner;
    r.nodes = gb.polys.size();
    r.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  } else {
    throw ParseError(ParseError::Kind::Malformed, "unknown method " + a.method);
  }
  std::cout << report_json(t, r).dump(a.pretty ? 2 : -1) << '\n';
  return 0;
}

struct EnumArgs {
  IsotopismArgs iso;
  long long limit = -1;
  bool has_limit = false;
};

int run_enumerate(const EnumArgs& a) {
  Isotopism t = a.iso.build();
  bool first = true;
  std::optional<long long> limit;
  if (a.has_limit) limit = a.limit;
  enumerate_ls(t, limit, [&](const LatinSquare& L) {
    if (!first) std::cout << '\n';
    first = false;
    write_square(std::cout, L);
    return true;
  });
  return 0;
}

struct VerifyArgs {
  double budget = 60;
  std::string only;
  bool all = false;
  int jobs = default_jobs();
};

int run_verify_table(const VerifyArgs& a) {
  int only_n = 0;
  if (!a.only.empty()) {
    if (a.only == "n=8")
      only_n = 8;
    else if (a.only == "n=9")
      only_n = 9;
    else
      throw ParseError(ParseError::Kind::Malformed, "--only accepts n=8 or n=9");
  }
  bool mismatch = false;
  for (const TableEntry& e : reference_table()) {
    if (only_n && e.n != only_n) continue;
    Isotopism t(permutation_from_cycle_structure(e.la), permutation_from_cycle_structure(e.lb),
                permutation_from_cycle_structure(e.lg));
    std::ostringstream tag;
    tag << "n=" << e.n << " la=" << to_string(e.la) << " lg=" << to_string(e.lg)
        << " expected=" << e.delta;
    try {
      CountOptions opts{a.jobs, a.all ? 0.0 : a.budget};
      CountReport r = count_ls(t, opts);
      if (r.delta == mpz_class(e.delta)) {
        std::cout << "MATCH    " << tag.str() << " (" << r.elapsed_ms << " ms)\n";
      } else {
        std::cout << "MISMATCH " << tag.str() << " got=" << r.delta.get_str() << '\n';
        mismatch = true;
      }
    } catch (const CountTimeout&) {
      std::cout << "SKIPPED  " << tag.str() << " (budget)\n";
    }
  }
  return mismatch ? 1 : 0;
}

struct DumpArgs {
  IsotopismArgs iso;
  bool full = false;
  std::string prefix_file;
  std::string output;
};

int run_dump_ideal(const DumpArgs& a) {
  Isotopism t = a.iso.build();
  std::optional<PartialLatinSquare> prefix;
  if (!a.prefix_file.empty()) prefix = load_partial(a.prefix_file);
  Ideal id = a.full ? build_ideal_full(t) : build_ideal_reduced(t, prefix);
  if (a.output.empty()) {
    std::cout << dump_ideal(id);
  } else {
    std::ofstream out(a.output);
    out << dump_ideal(id);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Counts and enumerates Latin squares fixed by a given isotopism"};
  app.require_subcommand(1);

  DeltaArgs da;
  CLI::App* delta = app.add_subcommand("delta", "count the squares fixed by the isotopism");
  da.iso.attach(delta);
  delta->add_option("--method", da.method, "search, groebner, or brute")
      ->check(CLI::IsMember({"search", "groebner", "brute"}));
  delta->add_option("--prefix", da.prefix_file, "partial square file (text or JSON)");
  delta->add_option("--coeff", da.coeff, "symmetry coefficient c_P (default 1)");
  delta->add_option("--jobs", da.jobs, "worker threads (default $AUTOCOUNT_JOBS or 1)");
  delta->add_option("--limit-seconds", da.limit_seconds, "abort after this many seconds");
  delta->add_flag("--pretty", da.pretty, "indent JSON output");

  EnumArgs ea;
  CLI::App* enumerate = app.add_subcommand("enumerate", "emit the squares themselves");
  ea.iso.attach(enumerate);
  CLI::Option* lim = enumerate->add_option("--limit", ea.limit, "emit at most this many squares");

  VerifyArgs va;
  CLI::App* verify = app.add_subcommand("verify-table", "re-count the embedded reference corpus");
  verify->add_option("--max-seconds-per-entry", va.budget, "per-entry budget (default 60)");
  verify->add_option("--only", va.only, "restrict to n=8 or n=9");
  verify->add_flag("--all", va.all, "ignore the budget and run every entry to completion");
  verify->add_option("--jobs", va.jobs, "worker threads");

  DumpArgs dua;
  CLI::App* dump = app.add_subcommand("dump-ideal", "print the polynomial system as text");
  dua.iso.attach(dump);
  dump->add_flag("--full", dua.full, "dump the uncollapsed system over all n^3 variables");
  dump->add_option("--prefix", dua.prefix_file, "partial square file");
  dump->add_option("--output", dua.output, "write to a file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitParse;
  }

  try {
    if (*delta) return run_delta(da);
    if (*enumerate) {
      ea.has_limit = lim->count() > 0;
      return run_enumerate(ea);
    }
    if (*verify) return run_verify_table(va);
    if (*dump) return run_dump_ideal(dua);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const CountTimeout& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitTimeout;
  } catch (const GuardError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitGuard;
  } catch (const ResourceLimit& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitGuard;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  }
  return 0;
}
