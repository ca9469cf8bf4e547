#include "autocount/permutations.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace autocount {

namespace {

void check_order(int n) {
  if (n <= 0) throw std::invalid_argument("permutation order must be positive");
}

}  // namespace

Permutation::Permutation(int n) : n_(n), img_(n) {
  check_order(n);
  std::iota(img_.begin(), img_.end(), 1);
}

Permutation::Permutation(int n, std::vector<int> image) : n_(n), img_(std::move(image)) {
  check_order(n);
  if (static_cast<int>(img_.size()) != n)
    throw std::invalid_argument("image length does not match order");
  std::vector<char> seen(n, 0);
  for (int v : img_) {
    if (v < 1 || v > n) throw std::invalid_argument("image value out of range");
    if (seen[v - 1]) throw std::invalid_argument("image is not a bijection");
    seen[v - 1] = 1;
  }
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= n_; ++i)
    if ((*this)(i) != i) return false;
  return true;
}

namespace {

std::vector<int> tokenize_ints(const std::string& s, int n, std::vector<char>& seen,
                               const char* what) {
  std::istringstream in(s);
  std::vector<int> out;
  std::string tok;
  while (in >> tok) {
    size_t pos = 0;
    int v;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw ParseError(ParseError::Kind::Malformed,
                       std::string("malformed ") + what + ": token '" + tok + "'");
    }
    if (pos != tok.size())
      throw ParseError(ParseError::Kind::Malformed,
                       std::string("malformed ") + what + ": token '" + tok + "'");
    if (v < 1 || v > n)
      throw ParseError(ParseError::Kind::OutOfRange,
                       "element " + std::to_string(v) + " out of range [1," + std::to_string(n) + "]");
    if (seen[v - 1])
      throw ParseError(ParseError::Kind::Duplicate, "duplicate element " + std::to_string(v));
    seen[v - 1] = 1;
    out.push_back(v);
  }
  return out;
}

}  // namespace

Permutation parse_permutation(const std::string& text, int n) {
  check_order(n);
  if (text.find('(') != std::string::npos) {
    // cycle form
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 1);
    std::vector<char> seen(n, 0);
    size_t pos = 0;
    bool any = false;
    while (pos < text.size()) {
      if (std::isspace(static_cast<unsigned char>(text[pos]))) { ++pos; continue; }
      if (text[pos] != '(')
        throw ParseError(ParseError::Kind::Malformed, "expected '(' in cycle form");
      size_t close = text.find(')', pos);
      if (close == std::string::npos)
        throw ParseError(ParseError::Kind::Malformed, "unbalanced '(' in cycle form");
      std::vector<int> cyc = tokenize_ints(text.substr(pos + 1, close - pos - 1), n, seen, "cycle");
      if (cyc.empty())
        throw ParseError(ParseError::Kind::Malformed, "empty cycle");
      for (size_t t = 0; t < cyc.size(); ++t)
        img[cyc[t] - 1] = cyc[(t + 1) % cyc.size()];
      pos = close + 1;
      any = true;
    }
    if (!any) throw ParseError(ParseError::Kind::Malformed, "empty permutation text");
    return Permutation(n, std::move(img));
  }
  // one-line form
  std::vector<char> seen(n, 0);
  std::vector<int> img = tokenize_ints(text, n, seen, "permutation");
  if (static_cast<int>(img.size()) != n)
    throw ParseError(ParseError::Kind::Malformed,
                     "expected " + std::to_string(n) + " values, got " + std::to_string(img.size()));
  return Permutation(n, std::move(img));
}

CycleStructure parse_cycle_structure(const std::string& text, int n) {
  check_order(n);
  std::string body = text;
  auto l = body.find_first_not_of(" \t");
  auto r = body.find_last_not_of(" \t");
  if (l == std::string::npos)
    throw ParseError(ParseError::Kind::Malformed, "empty cycle structure");
  body = body.substr(l, r - l + 1);
  if (!body.empty() && body.front() == '(') {
    if (body.back() != ')')
      throw ParseError(ParseError::Kind::Malformed, "unbalanced '(' in cycle structure");
    body = body.substr(1, body.size() - 2);
  }
  for (char& c : body)
    if (c == ',') c = ' ';
  std::istringstream in(body);
  std::vector<int> counts;
  int v;
  while (in >> v) {
    if (v < 0)
      throw ParseError(ParseError::Kind::OutOfRange, "negative cycle count");
    counts.push_back(v);
  }
  if (!in.eof())
    throw ParseError(ParseError::Kind::Malformed, "malformed cycle structure");
  if (static_cast<int>(counts.size()) != n)
    throw ParseError(ParseError::Kind::Malformed,
                     "cycle structure must have exactly " + std::to_string(n) + " entries");
  long long total = 0;
  for (int i = 1; i <= n; ++i) total += static_cast<long long>(i) * counts[i - 1];
  if (total != n)
    throw ParseError(ParseError::Kind::Malformed, "cycle lengths do not sum to n");
  return CycleStructure{std::move(counts)};
}

CycleDecomposition cycle_decomposition(const Permutation& p) {
  int n = p.size();
  CycleDecomposition d;
  std::vector<char> seen(n, 0);
  for (int i = 1; i <= n; ++i) {
    if (seen[i - 1]) continue;
    std::vector<int> cyc;
    int j = i;
    do {
      cyc.push_back(j);
      seen[j - 1] = 1;
      j = p(j);
    } while (j != i);
    d.cycles.push_back(std::move(cyc));
  }
  return d;  // leaders are minima by construction (scan order)
}

CycleStructure cycle_structure(const Permutation& p) {
  CycleStructure cs;
  cs.counts.assign(p.size(), 0);
  for (const auto& cyc : cycle_decomposition(p).cycles) ++cs.counts[cyc.size() - 1];
  return cs;
}

Permutation from_cycles(const CycleDecomposition& d, int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  for (const auto& cyc : d.cycles)
    for (size_t t = 0; t < cyc.size(); ++t)
      img[cyc[t] - 1] = cyc[(t + 1) % cyc.size()];
  return Permutation(n, std::move(img));
}

std::vector<int> fixed_points(const Permutation& p) {
  std::vector<int> fp;
  for (int i = 1; i <= p.size(); ++i)
    if (p(i) == i) fp.push_back(i);
  return fp;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw std::invalid_argument("compose: mismatched orders");
  std::vector<int> img(p.size());
  for (int i = 1; i <= p.size(); ++i) img[i - 1] = p(q(i));
  return Permutation(p.size(), std::move(img));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> img(p.size());
  for (int i = 1; i <= p.size(); ++i) img[p(i) - 1] = i;
  return Permutation(p.size(), std::move(img));
}

long long permutation_order(const Permutation& p) {
  long long ord = 1;
  for (const auto& cyc : cycle_decomposition(p).cycles)
    ord = std::lcm(ord, static_cast<long long>(cyc.size()));
  return ord;
}

Permutation power(const Permutation& p, long long l) {
  if (l < 0) throw std::invalid_argument("power: negative exponent");
  l %= permutation_order(p);
  Permutation r(p.size());
  for (long long t = 0; t < l; ++t) r = compose(p, r);
  return r;
}

Permutation permutation_from_cycle_structure(const CycleStructure& cs) {
  int n = cs.n();
  long long total = 0;
  for (int i = 1; i <= n; ++i) {
    if (cs.counts[i - 1] < 0) throw std::invalid_argument("negative cycle count");
    total += static_cast<long long>(i) * cs.counts[i - 1];
  }
  if (total != n) throw std::invalid_argument("cycle structure inconsistent with n");
  CycleDecomposition d;
  int next = 1;
  for (int len = n; len >= 1; --len) {
    for (int c = 0; c < cs.counts[len - 1]; ++c) {
      std::vector<int> cyc(len);
      std::iota(cyc.begin(), cyc.end(), next);
      next += len;
      d.cycles.push_back(std::move(cyc));
    }
  }
  return from_cycles(d, n);
}

std::string to_one_line(const Permutation& p) {
  std::ostringstream out;
  for (int i = 1; i <= p.size(); ++i) {
    if (i > 1) out << ' ';
    out << p(i);
  }
  return out.str();
}

std::string to_cycle_string(const Permutation& p) {
  std::ostringstream out;
  bool any = false;
  for (const auto& cyc : cycle_decomposition(p).cycles) {
    if (cyc.size() == 1) continue;
    out << '(';
    for (size_t t = 0; t < cyc.size(); ++t) {
      if (t) out << ' ';
      out << cyc[t];
    }
    out << ')';
    any = true;
  }
  if (!any) return "(1)";
  return out.str();
}

std::string to_string(const CycleStructure& cs) {
  std::ostringstream out;
  out << '(';
  for (int i = 0; i < cs.n(); ++i) {
    if (i) out << ',';
    out << cs.counts[i];
  }
  out << ')';
  return out.str();
}

}  // namespace autocount
