#include "l3lab/unity.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include "l3lab/util.hpp"

namespace l3lab {
namespace unity {

namespace {
const double kPi = std::acos(-1.0);
}

double f(int n) {
  if (n < 1) throw std::invalid_argument("f: n must be >= 1");
  if (n == 1) return 1.0;
  const int m = n / 4;
  return std::sin((2 * m + 1) * kPi / n) / std::sin(kPi / n);
}

double g(int n) {
  if (n < 1) throw std::invalid_argument("g: n must be >= 1");
  const double fn = f(n);
  return (n % 4 == 0) ? std::sqrt(fn * fn + 1.0) : fn;
}

double f_min(int n) {
  // Complement trick: min over S equals (sum of all roots) - max over the
  // complement.  The full sum vanishes except at n = 1, where it is 1.
  return (n == 1 ? 1.0 : 0.0) - f(n);
}

namespace {

// max over subsets of score(sum); the empty subset scores 0.
template <typename Score>
double brute_force(int n, Score score) {
  if (n < 1) throw std::invalid_argument("brute force: n must be >= 1");
  if (n > 16) throw std::invalid_argument("brute force: n must be <= 16");
  std::vector<std::complex<double>> roots(n);
  for (int k = 0; k < n; ++k)
    roots[k] = std::polar(1.0, 2.0 * kPi * k / n);
  double best = 0.0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::complex<double> s{0.0, 0.0};
    for (int k = 0; k < n; ++k)
      if (mask & (1u << k)) s += roots[k];
    best = std::max(best, score(s));
  }
  return best;
}

}  // namespace

double brute_force_f(int n) {
  return brute_force(n, [](std::complex<double> s) { return s.real(); });
}

double brute_force_g(int n) {
  return brute_force(n, [](std::complex<double> s) { return std::abs(s); });
}

double brute_force_f_min(int n) {
  return -brute_force(n, [](std::complex<double> s) { return -s.real(); });
}

CotIdentity cot_identity_check(int n) {
  if (n < 2) throw std::invalid_argument("cot_identity_check: n must be >= 2");
  const std::complex<double> w = std::polar(1.0, 2.0 * kPi / n);
  const std::complex<double> i{0.0, 1.0};
  CotIdentity out;
  out.lhs = (i * (w + 1.0) / (w - 1.0)).real();
  out.rhs = std::cos(kPi / n) / std::sin(kPi / n);
  out.ok = std::fabs(out.lhs - out.rhs) <= 1e-12;
  return out;
}

std::vector<FBoundRow> f_bound_report(int n_max) {
  if (n_max < 3) throw std::invalid_argument("f_bound_report: n_max must be >= 3");
  std::vector<FBoundRow> rows;
  rows.reserve(n_max - 2);
  for (int n = 3; n <= n_max; ++n) {
    FBoundRow r;
    r.n = n;
    r.f = f(n);
    r.n_over_3 = n / 3.0;
    r.equality = std::fabs(r.f - r.n_over_3) <= 1e-9 * n;
    r.bound_ok = r.f <= r.n_over_3 + 1e-9 * n;
    r.delta = r.f - std::cos(kPi / n) / std::sin(kPi / n);
    if (n > 150 && std::fabs(r.delta) > 2.0)
      throw std::runtime_error("f_bound_report: |delta| exceeded 2 past n = 150");
    rows.push_back(r);
  }
  return rows;
}

std::string f_bound_report_csv(int n_max) {
  std::string out = "n,f,n_over_3,equality,delta\n";
  for (const auto& r : f_bound_report(n_max)) {
    out += std::to_string(r.n);
    out += ',';
    out += fmt12(r.f);
    out += ',';
    out += fmt12(r.n_over_3);
    out += ',';
    out += r.equality ? '1' : '0';
    out += ',';
    out += fmt12(r.delta);
    out += '\n';
  }
  return out;
}

}  // namespace unity
}  // namespace l3lab
