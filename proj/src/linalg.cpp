#include "l3lab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace l3lab {

SymMatrix SymMatrix::identity(int n) {
  SymMatrix m(n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1.0);
  return m;
}

SymMatrix SymMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
  const int n = static_cast<int>(rows.size());
  if (n < 1) throw std::invalid_argument("SymMatrix: dimension must be >= 1");
  SymMatrix m(n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw std::invalid_argument("SymMatrix: ragged rows");
    for (int j = 0; j < n; ++j) m.a_[m.idx(i, j)] = rows[i][j];
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (m(i, j) != m(j, i))
        throw std::invalid_argument("SymMatrix: input not symmetric");
  return m;
}

double SymMatrix::trace() const {
  double t = 0;
  for (int i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double SymMatrix::frobenius() const {
  double s = 0;
  for (double v : a_) s += v * v;
  return std::sqrt(s);
}

double SymMatrix::sum() const {
  return std::accumulate(a_.begin(), a_.end(), 0.0);
}

SymMatrix& SymMatrix::operator+=(const SymMatrix& o) {
  if (o.n_ != n_) throw std::invalid_argument("SymMatrix: dimension mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

SymMatrix& SymMatrix::operator-=(const SymMatrix& o) {
  if (o.n_ != n_) throw std::invalid_argument("SymMatrix: dimension mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

SymMatrix& SymMatrix::operator*=(double c) {
  for (double& v : a_) v *= c;
  return *this;
}

SymMatrix operator-(const SymMatrix& a, const SymMatrix& b) {
  SymMatrix r = a;
  r -= b;
  return r;
}

SymMatrix operator+(const SymMatrix& a, const SymMatrix& b) {
  SymMatrix r = a;
  r += b;
  return r;
}

namespace {

double offdiag_frobenius(const std::vector<double>& a, int n) {
  double s = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double v = a[static_cast<std::size_t>(i) * n + j];
      s += 2.0 * v * v;
    }
  return std::sqrt(s);
}

}  // namespace

Spectrum eigen_decompose(const SymMatrix& M, bool want_vectors) {
  const int n = M.n();
  std::vector<double> a = M.data();
  std::vector<double> v;  // row-major; column k accumulates eigenvector k
  if (want_vectors) {
    v.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i) * n + i] = 1.0;
  }

  auto at = [&](int i, int j) -> double& {
    return a[static_cast<std::size_t>(i) * n + j];
  };

  const double norm_f = M.frobenius();
  const double conv_tol = 1e-12 * norm_f;

  bool converged = (n == 1) || offdiag_frobenius(a, n) <= conv_tol;
  for (int sweep = 0; sweep < 100 && !converged; ++sweep) {
    // Threshold schedule: skip tiny pivots early so big ones go first.
    double sm = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) sm += std::fabs(at(i, j));
    const double thresh = (sweep < 3) ? 0.2 * sm / (n * n) : 0.0;

    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (std::fabs(apq) <= thresh) continue;
        // Rotation angle annihilating a[p][q].
        const double diff = at(q, q) - at(p, p);
        double t;
        if (std::fabs(apq) < 1e-300) {
          continue;
        } else {
          const double theta = diff / (2.0 * apq);
          t = 1.0 / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0) t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        at(p, p) -= t * apq;
        at(q, q) += t * apq;
        at(p, q) = 0.0;
        at(q, p) = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = at(r, p), arq = at(r, q);
          at(r, p) = arp - s * (arq + tau * arp);
          at(p, r) = at(r, p);
          at(r, q) = arq + s * (arp - tau * arq);
          at(q, r) = at(r, q);
        }
        if (want_vectors) {
          for (int r = 0; r < n; ++r) {
            const double vrp = v[static_cast<std::size_t>(r) * n + p];
            const double vrq = v[static_cast<std::size_t>(r) * n + q];
            v[static_cast<std::size_t>(r) * n + p] = vrp - s * (vrq + tau * vrp);
            v[static_cast<std::size_t>(r) * n + q] = vrq + s * (vrp - tau * vrq);
          }
        }
      }
    }
    converged = offdiag_frobenius(a, n) <= conv_tol;
  }
  if (!converged)
    throw std::runtime_error(
        "eigen_decompose: Jacobi iteration did not converge within 100 sweeps");

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    return at(x, x) > at(y, y);
  });

  Spectrum sp;
  sp.n = n;
  sp.values.resize(n);
  for (int k = 0; k < n; ++k) sp.values[k] = at(order[k], order[k]);
  if (want_vectors) {
    sp.vectors.resize(static_cast<std::size_t>(n) * n);
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        sp.vectors[static_cast<std::size_t>(k) * n + i] =
            v[static_cast<std::size_t>(i) * n + order[k]];
  }
  return sp;
}

double lambda_k(const SymMatrix& M, int k) {
  if (k < 1 || k > M.n()) throw std::invalid_argument("lambda_k: k out of range");
  return eigen_decompose(M, false).values[k - 1];
}

double Polynomial::eval(double t) const {
  double r = 0;
  for (std::size_t i = c.size(); i-- > 0;) r = r * t + c[i];
  return r;
}

Polynomial poly_from_roots(const std::vector<double>& roots) {
  Polynomial p;
  p.c.assign(1, 1.0);
  for (double r : roots) {
    // multiply by (t - r)
    p.c.push_back(0.0);
    for (std::size_t i = p.c.size(); i-- > 1;) p.c[i] = p.c[i - 1];
    p.c[0] = 0.0;
    for (std::size_t i = 0; i + 1 < p.c.size(); ++i) p.c[i] -= r * p.c[i + 1];
  }
  return p;
}

Polynomial char_poly(const SymMatrix& M) {
  if (M.n() > 64)
    throw std::invalid_argument("char_poly: dimension above the n <= 64 guardrail");
  return poly_from_roots(eigen_decompose(M, false).values);
}

double operator_norm(const SymMatrix& M) {
  const Spectrum sp = eigen_decompose(M, false);
  return std::max(std::fabs(sp.values.front()), std::fabs(sp.values.back()));
}

WeylCheck weyl_gap_check(const SymMatrix& M, const SymMatrix& N, int k) {
  if (M.n() != N.n())
    throw std::invalid_argument("weyl_gap_check: dimension mismatch");
  if (k < 1 || k > M.n())
    throw std::invalid_argument("weyl_gap_check: k out of range");
  const double lhs = std::fabs(lambda_k(M, k) - lambda_k(N, k));
  const double rhs = operator_norm(M - N);
  return {lhs <= rhs + 1e-8, lhs, rhs};
}

double nikiforov_bound(int k) {
  if (k < 2) throw std::invalid_argument("nikiforov_bound: requires k >= 2");
  return 0.5 / std::sqrt(static_cast<double>(k - 1));
}

std::vector<std::pair<double, int>> group_eigenvalues(
    const std::vector<double>& descending, double scale) {
  const double tol = 1e-7 * std::max(1.0, scale);
  std::vector<std::pair<double, int>> groups;
  for (double v : descending) {
    if (!groups.empty() && std::fabs(groups.back().first - v) <= tol)
      groups.back().second += 1;
    else
      groups.emplace_back(v, 1);
  }
  return groups;
}

}  // namespace l3lab
