#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace l3lab {

// Dense real symmetric matrix. Symmetry is enforced by construction: set()
// writes both mirror entries, and from_rows() rejects asymmetric input.
class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("SymMatrix: dimension must be >= 1");
    a_.assign(static_cast<std::size_t>(n) * n, 0.0);
  }

  static SymMatrix identity(int n);
  static SymMatrix from_rows(const std::vector<std::vector<double>>& rows);

  int n() const { return n_; }

  double operator()(int i, int j) const { return a_[idx(i, j)]; }

  void set(int i, int j, double v) {
    a_[idx(i, j)] = v;
    a_[idx(j, i)] = v;
  }

  double trace() const;
  double frobenius() const;
  double sum() const;

  SymMatrix& operator+=(const SymMatrix& o);
  SymMatrix& operator-=(const SymMatrix& o);
  SymMatrix& operator*=(double c);

  const std::vector<double>& data() const { return a_; }

  bool operator==(const SymMatrix& o) const { return n_ == o.n_ && a_ == o.a_; }

 private:
  std::size_t idx(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_)
      throw std::out_of_range("SymMatrix: index out of range");
    return static_cast<std::size_t>(i) * n_ + j;
  }

  int n_ = 0;
  std::vector<double> a_;
};

SymMatrix operator-(const SymMatrix& a, const SymMatrix& b);
SymMatrix operator+(const SymMatrix& a, const SymMatrix& b);

// Full eigen-decomposition result. `values` is sorted descending. When
// vectors are requested, eigenvector k (matching values[k]) has component i
// at vectors[k*n + i]; the basis is orthonormal.
struct Spectrum {
  std::vector<double> values;
  std::vector<double> vectors;
  int n = 0;

  bool has_vectors() const { return !vectors.empty(); }
  double vec(int k, int i) const {
    return vectors[static_cast<std::size_t>(k) * n + i];
  }
  std::vector<double> vector_k(int k) const {
    return std::vector<double>(vectors.begin() + static_cast<std::ptrdiff_t>(k) * n,
                               vectors.begin() + static_cast<std::ptrdiff_t>(k + 1) * n);
  }
};

// Cyclic Jacobi. Converges when the off-diagonal Frobenius norm drops below
// 1e-12 * ||M||_F; throws after 100 sweeps without convergence.
Spectrum eigen_decompose(const SymMatrix& M, bool want_vectors);

// k-th largest eigenvalue, k is 1-based.
double lambda_k(const SymMatrix& M, int k);

struct Polynomial {
  std::vector<double> c;  // c[i] is the coefficient of t^i

  int degree() const { return static_cast<int>(c.size()) - 1; }
  double eval(double t) const;
};

// Monic characteristic polynomial det(tI - M), assembled from the computed
// eigenvalues. Guarded to n <= 64; coefficients are reliable to about
// 1e-6 * (1 + |coeff|) up to n = 16.
Polynomial char_poly(const SymMatrix& M);

Polynomial poly_from_roots(const std::vector<double>& roots);

struct WeylCheck {
  bool ok;
  double lhs;  // |lambda_k(M) - lambda_k(N)|
  double rhs;  // ||M - N||_op
};

// Eigenvalue stability under perturbation: |l_k(M) - l_k(N)| <= ||M - N||_op.
WeylCheck weyl_gap_check(const SymMatrix& M, const SymMatrix& N, int k);

// Upper bound 1/(2*sqrt(k-1)) for the k-th eigenvalue proportion, k >= 2.
double nikiforov_bound(int k);

double operator_norm(const SymMatrix& M);

// Group a descending eigenvalue list into (value, multiplicity) runs at
// tolerance 1e-7 * max(1, scale).
std::vector<std::pair<double, int>> group_eigenvalues(
    const std::vector<double>& descending, double scale);

}  // namespace l3lab
