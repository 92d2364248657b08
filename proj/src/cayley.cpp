#include "l3lab/cayley.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <set>
#include <stdexcept>

namespace l3lab {

namespace {
const double kPi = std::acos(-1.0);
}

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<int> factors)
    : factors_(std::move(factors)) {
  if (factors_.empty())
    throw std::invalid_argument("FiniteAbelianGroup: needs at least one factor");
  for (int d : factors_) {
    if (d < 1) throw std::invalid_argument("FiniteAbelianGroup: factors must be >= 1");
    if (order_ > 1'000'000 / d)
      throw std::invalid_argument("FiniteAbelianGroup: order too large");
    order_ *= d;
  }
}

std::vector<int> FiniteAbelianGroup::tuple(int a) const {
  if (a < 0 || a >= order_)
    throw std::out_of_range("FiniteAbelianGroup: element index out of range");
  std::vector<int> t(factors_.size());
  for (std::size_t j = factors_.size(); j-- > 0;) {
    t[j] = a % factors_[j];
    a /= factors_[j];
  }
  return t;
}

int FiniteAbelianGroup::index(const std::vector<int>& t) const {
  if (t.size() != factors_.size())
    throw std::invalid_argument("FiniteAbelianGroup: tuple rank mismatch");
  int a = 0;
  for (std::size_t j = 0; j < factors_.size(); ++j) {
    int c = t[j] % factors_[j];
    if (c < 0) c += factors_[j];
    a = a * factors_[j] + c;
  }
  return a;
}

int FiniteAbelianGroup::add(int a, int b) const {
  const auto ta = tuple(a), tb = tuple(b);
  std::vector<int> t(factors_.size());
  for (std::size_t j = 0; j < factors_.size(); ++j) t[j] = ta[j] + tb[j];
  return index(t);
}

int FiniteAbelianGroup::neg(int a) const {
  auto t = tuple(a);
  for (int& c : t) c = -c;
  return index(t);
}

std::complex<double> FiniteAbelianGroup::character(int t, int a) const {
  const auto tt = tuple(t), ta = tuple(a);
  double phase = 0;
  for (std::size_t j = 0; j < factors_.size(); ++j)
    phase += static_cast<double>(tt[j]) * ta[j] / factors_[j];
  return std::polar(1.0, 2.0 * kPi * phase);
}

void check_symmetric_connection_set(const FiniteAbelianGroup& g,
                                    const std::vector<int>& s, const char* role) {
  std::set<int> seen;
  for (int e : s) {
    if (e < 0 || e >= g.order())
      throw std::invalid_argument(std::string(role) + ": element index out of range");
    if (e == 0)
      throw std::invalid_argument(std::string(role) + ": identity not allowed in connection set");
    if (!seen.insert(e).second)
      throw std::invalid_argument(std::string(role) + ": duplicate element");
  }
  for (int e : s)
    if (!seen.count(g.neg(e)))
      throw std::invalid_argument(std::string(role) + ": connection set not closed under inverse");
}

Graph cayley_graph(const FiniteAbelianGroup& g, const std::vector<int>& s) {
  check_symmetric_connection_set(g, s, "cayley_graph");
  Graph out(g.order());
  for (int v = 0; v < g.order(); ++v)
    for (int e : s) out.add_edge(v, g.add(v, e));
  return out;
}

std::vector<double> cayley_spectrum(const FiniteAbelianGroup& g,
                                    const std::vector<int>& s) {
  check_symmetric_connection_set(g, s, "cayley_spectrum");
  std::vector<double> vals;
  vals.reserve(g.order());
  for (int t = 0; t < g.order(); ++t) {
    std::complex<double> sum{0.0, 0.0};
    for (int e : s) sum += g.character(t, e);
    if (std::fabs(sum.imag()) > 1e-9)
      throw std::runtime_error("cayley_spectrum: imaginary residue above 1e-9");
    vals.push_back(sum.real());
  }
  std::sort(vals.begin(), vals.end(), std::greater<double>());
  return vals;
}

Lambda3Verdict verify_cayley_lambda3(const FiniteAbelianGroup& g,
                                     const std::vector<int>& s) {
  if (g.order() < 3)
    throw std::invalid_argument("verify_cayley_lambda3: needs group order >= 3");
  const auto vals = cayley_spectrum(g, s);
  Lambda3Verdict v;
  v.lambda3 = vals[2];
  v.n = g.order();
  v.ok = v.lambda3 <= v.n / 3.0 + 1e-9;
  return v;
}

Graph semi_cayley_graph(const FiniteAbelianGroup& g, const std::vector<int>& r,
                        const std::vector<int>& s, const std::vector<int>& t) {
  check_symmetric_connection_set(g, r, "semi_cayley_graph (R)");
  check_symmetric_connection_set(g, s, "semi_cayley_graph (S)");
  const int n = g.order();
  std::set<int> tset;
  for (int e : t) {
    if (e < 0 || e >= n)
      throw std::invalid_argument("semi_cayley_graph (T): element index out of range");
    if (!tset.insert(e).second)
      throw std::invalid_argument("semi_cayley_graph (T): duplicate element");
  }
  Graph out(2 * n);
  for (int h = 0; h < n; ++h) {
    for (int e : r) out.add_edge(h, g.add(h, e));
    for (int e : s) out.add_edge(n + h, n + g.add(h, e));
    for (int e : t) out.add_edge(h, n + g.add(h, e));
  }
  return out;
}

std::vector<double> semi_cayley_spectrum(const FiniteAbelianGroup& g,
                                         const std::vector<int>& r,
                                         const std::vector<int>& s,
                                         const std::vector<int>& t) {
  check_symmetric_connection_set(g, r, "semi_cayley_spectrum (R)");
  check_symmetric_connection_set(g, s, "semi_cayley_spectrum (S)");
  const int n = g.order();
  std::vector<double> vals;
  vals.reserve(2 * n);
  for (int x = 0; x < n; ++x) {
    std::complex<double> lr{0, 0}, ls{0, 0}, lt{0, 0};
    for (int e : r) lr += g.character(x, e);
    for (int e : s) ls += g.character(x, e);
    for (int e : t) lt += g.character(x, e);
    if (std::fabs(lr.imag()) > 1e-9 || std::fabs(ls.imag()) > 1e-9)
      throw std::runtime_error("semi_cayley_spectrum: imaginary residue above 1e-9");
    const double a = lr.real(), b = ls.real();
    const double disc = std::sqrt((a - b) * (a - b) + 4.0 * std::norm(lt));
    vals.push_back((a + b + disc) / 2.0);
    vals.push_back((a + b - disc) / 2.0);
  }
  std::sort(vals.begin(), vals.end(), std::greater<double>());
  return vals;
}

namespace {

// Elements of the dihedral (order 2n) and dicyclic (order 4n, over Z_{2n})
// groups as (flag, i): flag 0 is the cyclic part, flag 1 the twisted coset.
struct TwistedGroup {
  int n;        // modulus of the cyclic part
  bool dicyclic;  // multiplication twist: (1,i)(1,j) = (0, j-i [+ n/2 if dicyclic])

  int mod(int x) const { return ((x % n) + n) % n; }
  std::pair<int, int> mul(std::pair<int, int> x, std::pair<int, int> y) const {
    const int shift = dicyclic ? n / 2 : 0;  // x^2 = a^{n/2} in the dicyclic case
    if (x.first == 0 && y.first == 0) return {0, mod(x.second + y.second)};
    if (x.first == 0 && y.first == 1) return {1, mod(y.second - x.second)};
    if (x.first == 1 && y.first == 0) return {1, mod(x.second + y.second)};
    return {0, mod(y.second - x.second + shift)};
  }
  std::pair<int, int> inv(std::pair<int, int> x) const {
    if (x.first == 0) return {0, mod(-x.second)};
    return {1, mod(x.second - (dicyclic ? n / 2 : 0))};
  }
  int id(std::pair<int, int> x) const { return x.first * n + x.second; }
};

Graph twisted_cayley(const TwistedGroup& tg, const std::vector<int>& rot,
                     const std::vector<int>& refl, const char* op) {
  const int n = tg.n;
  FiniteAbelianGroup zn({n});
  check_symmetric_connection_set(zn, rot, op);
  std::set<std::pair<int, int>> conn;
  for (int i : rot) conn.insert({0, i});
  std::set<int> rset;
  for (int i : refl) {
    if (i < 0 || i >= n)
      throw std::invalid_argument(std::string(op) + ": reflection element out of range");
    if (!rset.insert(i).second)
      throw std::invalid_argument(std::string(op) + ": duplicate reflection element");
    conn.insert({1, i});
  }
  if (tg.dicyclic)
    for (int i : refl)
      if (!rset.count(tg.mod(i + n / 2)))
        throw std::invalid_argument(
            std::string(op) + ": dicyclic reflection part must satisfy B = B + n (mod 2n)");

  // Direct construction from the multiplication table.
  Graph direct(2 * n);
  for (int a = 0; a < 2 * n; ++a)
    for (int b = a + 1; b < 2 * n; ++b) {
      const std::pair<int, int> x{a / n, a % n}, y{b / n, b % n};
      if (conn.count(tg.mul(x, tg.inv(y)))) direct.add_edge(a, b);
    }

  // Two-layer encoding over Z_n: both layers wired by the rotation part, the
  // cross edges by the reflection part.
  const Graph layered = semi_cayley_graph(zn, rot, rot, refl);
  const auto sd = graph_spectrum(direct).values;
  const auto sl = graph_spectrum(layered).values;
  for (int k = 0; k < 2 * n; ++k)
    if (std::fabs(sd[k] - sl[k]) > 1e-8)
      throw std::runtime_error(std::string(op) +
                               ": direct and two-layer constructions disagree spectrally");
  return direct;
}

}  // namespace

Graph dihedral_cayley(int n, const std::vector<int>& rotation_part,
                      const std::vector<int>& reflection_part) {
  if (n < 1) throw std::invalid_argument("dihedral_cayley: n must be >= 1");
  TwistedGroup tg{n, false};
  return twisted_cayley(tg, rotation_part, reflection_part, "dihedral_cayley");
}

Graph dicyclic_cayley(int n, const std::vector<int>& rotation_part,
                      const std::vector<int>& reflection_part) {
  if (n < 1) throw std::invalid_argument("dicyclic_cayley: n must be >= 1");
  TwistedGroup tg{2 * n, true};
  return twisted_cayley(tg, rotation_part, reflection_part, "dicyclic_cayley");
}

bool vertex_transitive_reduction_check(const Graph& g, int group_order) {
  if (g.n() < 3)
    throw std::invalid_argument("vertex_transitive_reduction_check: needs n >= 3");
  if (group_order < g.n() || group_order % g.n() != 0)
    throw std::invalid_argument(
        "vertex_transitive_reduction_check: group order must be a positive multiple of n");
  const double l3 = graph_spectrum(g).values[2];
  if (l3 < 0) return true;  // the bound transfers without any scaling argument
  const int m = group_order / g.n();
  const Graph big = lexicographic_empty_product(g, m);
  const double l3_big = graph_spectrum(big).values[2];
  return std::fabs(l3 / g.n() - l3_big / group_order) <= 1e-8;
}

std::vector<int> paley_residues(int q) {
  if (q < 5) throw std::invalid_argument("paley_residues: modulus too small");
  for (int d = 2; d * d <= q; ++d)
    if (q % d == 0) throw std::invalid_argument("paley_residues: modulus must be prime");
  if (q % 4 != 1)
    throw std::invalid_argument("paley_residues: modulus must be 1 mod 4");
  std::set<int> rs;
  for (long long k = 1; k < q; ++k) rs.insert(static_cast<int>((k * k) % q));
  return {rs.begin(), rs.end()};
}

std::vector<int> random_symmetric_connection_set(const FiniteAbelianGroup& g, Rng& rng) {
  std::set<int> out;
  for (int e = 1; e < g.order(); ++e) {
    const int ne = g.neg(e);
    if (ne < e) continue;  // one draw per inverse pair
    if (rng.bernoulli(0.5)) {
      out.insert(e);
      out.insert(ne);
    }
  }
  return {out.begin(), out.end()};
}

std::vector<int> random_subset(const FiniteAbelianGroup& g, Rng& rng) {
  std::vector<int> out;
  for (int e = 0; e < g.order(); ++e)
    if (rng.bernoulli(0.5)) out.push_back(e);
  return out;
}

GroupSpec parse_group_spec(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("parse_group_spec: empty spec");
  auto parse_int = [](const std::string& w) {
    if (w.empty() || w.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("parse_group_spec: bad integer '" + w + "'");
    return std::stoi(w);
  };
  GroupSpec spec;
  if (s[0] == 'D' || s[0] == 'd') {
    const int order = parse_int(s.substr(1));
    if (order < 2 || order % 2 != 0)
      throw std::invalid_argument("parse_group_spec: dihedral order must be even");
    spec.kind = GroupSpec::Kind::dihedral;
    spec.n = order / 2;
    return spec;
  }
  if (s[0] == 'Q' || s[0] == 'q') {
    const int order = parse_int(s.substr(1));
    if (order < 4 || order % 4 != 0)
      throw std::invalid_argument("parse_group_spec: dicyclic order must be divisible by 4");
    spec.kind = GroupSpec::Kind::dicyclic;
    spec.n = order / 4;
    return spec;
  }
  // Abelian: Z<d> terms joined by 'x'.
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] != 'Z' && s[pos] != 'z')
      throw std::invalid_argument("parse_group_spec: expected 'Z' in '" + text + "'");
    std::size_t end = pos + 1;
    while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) ++end;
    spec.factors.push_back(parse_int(s.substr(pos + 1, end - pos - 1)));
    if (end == s.size()) break;
    if (s[end] != 'x' && s[end] != 'X' && s[end] != '*')
      throw std::invalid_argument("parse_group_spec: expected 'x' between factors");
    pos = end + 1;
    if (pos >= s.size())
      throw std::invalid_argument("parse_group_spec: trailing separator");
    continue;
  }
  if (spec.factors.empty())
    throw std::invalid_argument("parse_group_spec: no factors found");
  return spec;
}

std::vector<int> parse_elements(const FiniteAbelianGroup& g, const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  std::vector<int> out;
  if (s.empty()) return out;
  auto parse_int = [](const std::string& w) {
    std::size_t used = 0;
    int v;
    try {
      v = std::stoi(w, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("parse_elements: bad integer '" + w + "'");
    }
    if (used != w.size())
      throw std::invalid_argument("parse_elements: bad integer '" + w + "'");
    return v;
  };
  if (s[0] == '(') {
    std::size_t pos = 0;
    while (pos < s.size()) {
      if (s[pos] != '(')
        throw std::invalid_argument("parse_elements: expected '(' in tuple list");
      const std::size_t close = s.find(')', pos);
      if (close == std::string::npos)
        throw std::invalid_argument("parse_elements: unbalanced parenthesis");
      std::vector<int> t;
      std::size_t start = pos + 1;
      while (start < close) {
        std::size_t comma = s.find(',', start);
        if (comma == std::string::npos || comma > close) comma = close;
        t.push_back(parse_int(s.substr(start, comma - start)));
        start = comma + 1;
      }
      out.push_back(g.index(t));
      pos = close + 1;
      if (pos < s.size()) {
        if (s[pos] != ',')
          throw std::invalid_argument("parse_elements: expected ',' between tuples");
        ++pos;
      }
    }
  } else {
    if (g.factors().size() != 1)
      throw std::invalid_argument(
          "parse_elements: bare integers only work for a single cyclic factor");
    std::size_t start = 0;
    while (start <= s.size()) {
      std::size_t comma = s.find(',', start);
      if (comma == std::string::npos) comma = s.size();
      out.push_back(g.index({parse_int(s.substr(start, comma - start))}));
      start = comma + 1;
      if (comma == s.size()) break;
    }
  }
  return out;
}

}  // namespace l3lab
