#pragma once

// Rejection sampler for block matrices in the canonical minimiser shape:
// two fully joined sides P and N, coupling classes Z1/Z2 whose run-form
// columns have balanced sums (colsum/sqrt(P) == colsum/sqrt(N)), a ones
// block between Z1 and Z2, and an isolated Z3 block.  Accepted instances
// have -sqrt(P*N) as a simple penultimate eigenvalue with clean gaps on
// both sides and a bottom eigenvector that splits the coupling classes by
// sign, so the canonicaliser's content passes are exact no-ops on them.

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <vector>

#include "l3lab/extremal.hpp"
#include "l3lab/linalg.hpp"
#include "l3lab/util.hpp"

namespace testutil {

struct CanonicalInstance {
  l3lab::WeightedMatrix matrix;
  int p = 0, n = 0;    // side sizes as the partition step will label them
  int z1 = 0, z2 = 0;  // coupling class sizes in bottom-eigenvector order
  int z3 = 0;
};

namespace detail {

struct RunColumn {
  int ones = 0;
  double boundary = 0.0;
};

// A pair of run-form columns over the two sides with balanced sums.
inline std::pair<RunColumn, RunColumn> balanced_columns(l3lab::Rng& rng, int p,
                                                        int nn) {
  for (int trial = 0; trial < 40; ++trial) {
    const int k = rng.uniform_int(0, p);
    const double alpha = k < p ? rng.uniform() : 0.0;
    const double target = (k + alpha) / std::sqrt(static_cast<double>(p)) *
                          std::sqrt(static_cast<double>(nn));
    const int l = static_cast<int>(std::floor(target));
    const double beta = target - l;
    if (l <= nn && (l < nn || beta < 1e-12)) return {{k, alpha}, {l, beta}};
  }
  return {{0, 0.0}, {0, 0.0}};  // zero columns balance trivially
}

}  // namespace detail

inline std::optional<CanonicalInstance> try_canonical_instance(l3lab::Rng& rng) {
  using detail::balanced_columns;
  const int P = rng.uniform_int(1, 4);
  const int N = rng.uniform_int(1, 4);
  const int Z1 = rng.uniform_int(0, 3);
  const int Z2 = rng.uniform_int(0, 3);
  const int Z3 = rng.uniform_int(0, 2);
  const int n = P + N + Z1 + Z2 + Z3;
  if (n < 3) return std::nullopt;

  l3lab::SymMatrix m(n);
  const int nb = P, z1b = P + N, z2b = z1b + Z1, z3b = z2b + Z2;
  for (int i = 0; i < P; ++i)
    for (int j = nb; j < z1b; ++j) m.set(i, j, 1.0);
  const auto fill = [&](int colb, int cole, bool prefix) {
    if (colb == cole) return;
    const auto [pc, nc] = balanced_columns(rng, P, N);
    for (int z = colb; z < cole; ++z) {
      for (int t = 0; t < pc.ones; ++t) m.set(prefix ? t : P - 1 - t, z, 1.0);
      if (pc.boundary > 1e-12 && pc.ones < P)
        m.set(prefix ? pc.ones : P - 1 - pc.ones, z, pc.boundary);
      for (int t = 0; t < nc.ones; ++t)
        m.set(prefix ? nb + t : z1b - 1 - t, z, 1.0);
      if (nc.boundary > 1e-12 && nc.ones < N)
        m.set(prefix ? nb + nc.ones : z1b - 1 - nc.ones, z, nc.boundary);
    }
  };
  fill(z1b, z2b, true);    // Z1 couples to a prefix of each side
  fill(z2b, z3b, false);   // Z2 couples to a suffix
  for (int a = z1b; a < z2b; ++a)
    for (int b = z2b; b < z3b; ++b) m.set(a, b, 1.0);

  const l3lab::Spectrum s = l3lab::eigen_decompose(m, true);
  const double lam = -std::sqrt(static_cast<double>(P) * N);
  if (std::abs(s.values[n - 2] - lam) > 1e-9) return std::nullopt;
  if (!(s.values[n - 1] < lam - 1e-6)) return std::nullopt;
  if (!(s.values[n - 3] > lam + 1e-6)) return std::nullopt;

  // the bottom eigenvector must separate Z1 from Z2 and vanish on Z3
  const std::vector<double> v = s.vector_k(n - 1);
  int pos = Z1, neg = Z2;
  if (n > z1b) {
    double mz = 0.0;
    int arg = z1b;
    for (int z = z1b; z < n; ++z)
      if (std::abs(v[z]) > mz) {
        mz = std::abs(v[z]);
        arg = z;
      }
    for (int z = z3b; z < n; ++z)
      if (mz > 0.0 && std::abs(v[z]) > 1e-10 * mz) return std::nullopt;
    if (Z1 + Z2 > 0) {
      const double flip = v[arg] < 0.0 ? -1.0 : 1.0;
      const auto side = [&](int z) {
        const double val = flip * v[z];
        if (val > 1e-6 * mz) return +1;
        if (val < -1e-6 * mz) return -1;
        return 0;
      };
      int s1 = 0, s2 = 0;
      for (int z = z1b; z < z2b; ++z) {
        if (side(z) == 0 || (s1 != 0 && side(z) != s1)) return std::nullopt;
        s1 = side(z);
      }
      for (int z = z2b; z < z3b; ++z) {
        if (side(z) == 0 || (s2 != 0 && side(z) != s2)) return std::nullopt;
        s2 = side(z);
      }
      if (Z1 > 0 && Z2 > 0 && s1 == s2) return std::nullopt;
      if ((Z1 > 0 && s1 < 0) || (Z2 > 0 && s2 > 0)) std::swap(pos, neg);
    }
  }
  return CanonicalInstance{l3lab::WeightedMatrix(m), P, N, pos, neg, Z3};
}

inline CanonicalInstance make_canonical_instance(l3lab::Rng& rng) {
  for (int trial = 0; trial < 4000; ++trial)
    if (auto inst = try_canonical_instance(rng)) return *inst;
  throw std::runtime_error("make_canonical_instance: rejection sampling stalled");
}

inline l3lab::WeightedMatrix shuffled_matrix(const l3lab::WeightedMatrix& m,
                                             l3lab::Rng& rng) {
  const int n = m.n();
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.uniform_int(0, i)]);
  l3lab::SymMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) out.set(i, j, m(perm[i], perm[j]));
  return l3lab::WeightedMatrix(out);
}

}  // namespace testutil
