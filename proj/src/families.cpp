#include "l3lab/families.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace l3lab {

Graph build_H(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("build_H: sizes must be nonnegative");
  if (a + b < 1) throw std::invalid_argument("build_H: a and b cannot both be zero");
  return closed_vertex_multiplication(cycle_graph(6), {a, b, a, b, a, b});
}

std::vector<double> H_spectrum_closed_form(int a, int b) {
  if (a < 0 || b < 0)
    throw std::invalid_argument("H_spectrum_closed_form: sizes must be nonnegative");
  const int s = a + b;
  if (s < 1) throw std::invalid_argument("H_spectrum_closed_form: a and b cannot both be zero");
  if (s == 1) return {1.0, 1.0, 1.0};  // three isolated vertices, A + I = I
  const double d = std::sqrt(static_cast<double>(a) * a + 14.0 * a * b +
                             static_cast<double>(b) * b);
  std::vector<double> vals;
  vals.reserve(3 * s);
  vals.push_back((s + d) / 2.0);
  vals.push_back(s);
  vals.push_back(s);
  for (int i = 0; i < 3 * s - 4; ++i) vals.push_back(0.0);
  vals.push_back((s - d) / 2.0);
  std::sort(vals.begin(), vals.end(), std::greater<double>());
  return vals;
}

SymMatrix h_quotient_matrix(int a, int b) {
  if (a < 0 || b < 0)
    throw std::invalid_argument("h_quotient_matrix: sizes must be nonnegative");
  if (a + b < 1)
    throw std::invalid_argument("h_quotient_matrix: a and b cannot both be zero");
  const double sz[6] = {double(a), double(b), double(a), double(b), double(a), double(b)};
  SymMatrix q(6);
  for (int i = 0; i < 6; ++i)
    for (int j = i; j < 6; ++j) {
      const int dist = std::min((j - i) % 6, (i - j + 6) % 6);
      if (dist <= 1) q.set(i, j, std::sqrt(sz[i] * sz[j]));
    }
  return q;
}

Graph build_pivalous(int n) {
  if (n < 3) throw std::invalid_argument("build_pivalous: needs n >= 3");
  Graph g(n);
  const int m = n / 4;
  for (int i = 0; i < n; ++i)
    for (int k = 1; k <= m; ++k) g.add_edge(i, (i + k) % n);
  return g;
}

std::vector<double> pivalous_spectrum_closed_form(int n, bool with_loops) {
  if (n < 4 || n % 4 != 0)
    throw std::invalid_argument("pivalous_spectrum_closed_form: requires 4 | n");
  const double pi = std::acos(-1.0);
  std::vector<double> vals;
  vals.reserve(n);
  vals.push_back(n / 2.0 + 1.0);  // t = 0
  for (int t = 1; t < n; ++t) {
    double v;
    switch (t % 4) {
      case 0: v = 1.0; break;
      case 1: v = 1.0 / std::tan(t * pi / n); break;
      case 2: v = -1.0; break;
      default: v = -1.0 / std::tan(t * pi / n); break;
    }
    vals.push_back(v);
  }
  if (!with_loops)
    for (double& v : vals) v -= 1.0;
  std::sort(vals.begin(), vals.end(), std::greater<double>());
  return vals;
}

SymMatrix T_matrix() {
  // 1-based class pairs; class 11 stays isolated.
  static const int pairs[][2] = {
      {1, 5}, {1, 6}, {1, 7}, {1, 8}, {1, 9},
      {2, 5}, {2, 6}, {2, 7}, {2, 8}, {2, 9}, {2, 10},
      {3, 5}, {3, 6}, {3, 7}, {3, 8},
      {4, 5}, {4, 6}, {4, 7}, {4, 8}, {4, 10},
      {5, 9}, {6, 9}, {6, 10}, {8, 10}, {9, 10}};
  SymMatrix t(11);
  for (const auto& p : pairs) t.set(p[0] - 1, p[1] - 1, 1.0);
  return t;
}

SrgSpectrum srg_spectrum(const SrgParams& p) {
  const long long n = p.n, r = p.r, e = p.e, f = p.f;
  if (n < 2 || r < 1 || e < 0 || f < 0)
    throw std::invalid_argument("srg_spectrum: parameters out of range");
  if (r * (r - e - 1) != (n - r - 1) * f)
    throw std::invalid_argument("srg_spectrum: parameter identity r(r-e-1) = (n-r-1)f violated");
  if (f < 1)
    throw std::invalid_argument("srg_spectrum: requires f >= 1 (connected case)");

  const double disc = std::sqrt(static_cast<double>((e - f) * (e - f) + 4 * (r - f)));
  const double lambda = ((e - f) + disc) / 2.0;
  const double mu = ((e - f) - disc) / 2.0;
  // Trace zero with k + l = n - 1 pins the multiplicities.
  const double kd = (-static_cast<double>(r) - (n - 1) * mu) / (lambda - mu);
  const double ld = static_cast<double>(n - 1) - kd;
  const double ki = std::round(kd), li = std::round(ld);
  if (std::fabs(kd - ki) > 1e-6 || std::fabs(ld - li) > 1e-6 || ki < 0 || li < 0)
    throw std::invalid_argument("srg_spectrum: non-integer multiplicities (infeasible parameters)");

  SrgSpectrum out;
  out.r = static_cast<double>(r);
  out.lambda = lambda;
  out.mu = mu;
  out.k = static_cast<int>(ki);
  out.l = static_cast<int>(li);
  const double cap_k = out.k * (out.k + 3.0) / 2.0;
  const double cap_l = out.l * (out.l + 3.0) / 2.0;
  out.feasible = (n <= cap_k) && (n <= cap_l);
  return out;
}

std::vector<double> morph_graphon_spectrum(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("morph_graphon_spectrum: p must lie in [0, 1]");
  const double root = std::sqrt(p * p - p + 1.0);
  std::vector<double> vals = {(p + 2.0) / 6.0, (1.0 + root) / 6.0, (1.0 + root) / 6.0,
                              (1.0 - root) / 6.0, (1.0 - root) / 6.0, -p / 6.0};
  std::sort(vals.begin(), vals.end(), std::greater<double>());
  return vals;
}

SymMatrix morph_graphon_block(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("morph_graphon_block: p must lie in [0, 1]");
  SymMatrix w(6);
  for (int i = 0; i < 6; ++i) w.set(i, i, 1.0);
  // Matched hexagon edges carry weight 1, the alternating ones weight p.
  w.set(0, 1, 1.0);
  w.set(2, 3, 1.0);
  w.set(4, 5, 1.0);
  w.set(1, 2, p);
  w.set(3, 4, p);
  w.set(5, 0, p);
  w *= 1.0 / 6.0;
  return w;
}

}  // namespace l3lab
