#pragma once

// Extremal machinery for the penultimate eigenvalue lambda_{n-1} of symmetric
// matrices with entries in [0,1]: soundness-checked perturbation moves, a
// canonical block form for minimisers with simple bottom eigenvalue, and a
// stochastic minimiser search.  Every structural move re-verifies eigenvalue
// monotonicity with the dense solver; violations throw rather than propagate.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "l3lab/graphs.hpp"
#include "l3lab/linalg.hpp"

namespace l3lab {

// Symmetric matrix with all entries in [0,1].  The entry range is an
// invariant, not a convention: every move below reasons about "room to the
// boundary", so out-of-range values would silently break step-size logic.
class WeightedMatrix {
 public:
  explicit WeightedMatrix(int n) : m_(n) {}
  explicit WeightedMatrix(const SymMatrix& m);
  static WeightedMatrix from_graph(const Graph& g);

  int n() const { return m_.n(); }
  double operator()(int i, int j) const { return m_(i, j); }
  void set(int i, int j, double value);  // rejects values outside [0,1]
  const SymMatrix& mat() const { return m_; }

  bool operator==(const WeightedMatrix& o) const { return m_ == o.m_; }

 private:
  SymMatrix m_;
};

// Unit eigenvectors for the two smallest eigenvalues: v belongs to lambda_n
// (the bottom), w to lambda_{n-1} (the penultimate).  The factory checks
// unit norms (1e-10), orthogonality (1e-9) and eigen-residuals (1e-8) so the
// perturbation formulas below can rely on them.
struct EigenpairBasis {
  int n = 0;
  double lambda_n = 0.0;
  double lambda_penult = 0.0;
  std::vector<double> v;  // eigenvector for lambda_n
  std::vector<double> w;  // eigenvector for lambda_penult
};

EigenpairBasis make_eigenpair_basis(const SymMatrix& m);

// Quadratic-form data of a symmetric perturbation E on span{v,w}:
// S = v'Ev, Q = v'Ew, R = w'Ew.
struct PerturbationTriple {
  double S = 0.0;
  double Q = 0.0;
  double R = 0.0;
};

PerturbationTriple sqr(const SymMatrix& e, const EigenpairBasis& basis);

// True when E restricted to span{v,w} is negative semidefinite:
// R*S >= Q^2, R <= 0, S <= 0, each with slack 1e-12.
bool is_negsemidef_on_span(const PerturbationTriple& t);

// Upper bound for the third-largest eigenvalue via the complement:
// lambda_3(M) <= -1 - lambda_{n-1}(J - I - M).  Requires zero diagonal so
// that J - I - M stays inside the [0,1] class; the inequality itself is
// re-checked against the eigensolver before returning.
double dual_bound(const WeightedMatrix& m);

// Closed blow-up scaling: predicted = t*(lambda_k(H)+1) - 1 never exceeds
// lambda_k of the blow-up (k = 3, falling back to k = 1 when H has fewer
// than three vertices).  Equality holds whenever lambda_k(H) >= -1.
struct BlowupScaling {
  double predicted = 0.0;
  double actual = 0.0;
  bool ok = false;
};

BlowupScaling blowup_scaling_check(const Graph& h, int t);

// First-order bound for the change of lambda_{n-1} under M + eps*E, valid
// while lambda_{n-1} - lambda_n > eps*(S - R); throws when that fails.
// A negative value certifies strict first-order decrease.
double penultimate_shift_bound(const EigenpairBasis& basis,
                               const PerturbationTriple& t, double eps);

// Zeroing the diagonal never increases any eigenvalue (the perturbation is
// -diag(M) <= 0); the result is re-checked anyway.
WeightedMatrix zero_diagonal(const WeightedMatrix& m);

// Pushes one interior entry of a row with >= 2 strictly-interior
// off-diagonal entries to {0,1} along a direction that is exactly
// lambda-neutral on span{v,w} (RS = Q^2 by construction).  Throws
// "no qualifying row" when every row has at most one interior entry.
WeightedMatrix reduce_interior_entries(const WeightedMatrix& m);

// Replaces row and column `row` (diagonal included) by `alphas`, allowed
// when lambda' * (v_row, w_row) == (sum_j alphas_j v_j, sum_j alphas_j w_j)
// within 1e-8, lambda' <= lambda_n, and the diagonal does not decrease.
// Under those premises the penultimate eigenvalue cannot increase; the
// result is re-checked.
WeightedMatrix replace_row_geometric(const WeightedMatrix& m, int row,
                                     const std::vector<double>& alphas,
                                     double lambda_prime);

// Canonical block form of a minimiser with simple bottom eigenvalue.  Rows
// of `matrix` are ordered P-block, N-block, Z1, Z2, Z3 where P/N are the
// sign classes of the penultimate eigenvector and Z1/Z2/Z3 split its zero
// set by the sign of the bottom eigenvector.  alpha/beta carry the at most
// four interior boundary-row values (absent when the matrix is 0/1):
// alpha/beta sit in the P/N rows against Z1, the primed pair against Z2.
struct MinimiserCertificate {
  WeightedMatrix matrix;
  int p_size = 0, n_size = 0, z1_size = 0, z2_size = 0, z3_size = 0;
  std::vector<int> order;  // order[i] = original index of canonical row i
  double lambda_penult = 0.0;
  std::optional<double> alpha, beta, alpha_prime, beta_prime;
};

// Canonicalisation pipeline: (a) sign-partition by the penultimate
// eigenvector, (b) zero the same-sign blocks and saturate P x N until the
// partition stabilises, (c) decouple the v-null part of the zero set,
// (d) fix the internal zero-set blocks to (O, J, O), (e) equalise the
// stacked P/N columns over the zero set, (f) sort rows into runs.  Each
// step must keep both bottom eigenvalues non-increasing within 1e-8; the
// final matrix must satisfy lambda_{n-1} = -sqrt(P*N), the column-sum
// balance condition, and the two-level shape of the penultimate
// eigenvector.  Violations throw with the offending step named.
MinimiserCertificate canonicalize_simple_minimiser(const WeightedMatrix& m);

// Replaces the interior boundary values of a certificate by 0, yielding a
// 0/1 matrix that must coincide with a class blow-up of the 11-vertex
// reference pattern T; |lambda_{n-1}| moves by at most 2*sqrt(n) in the
// process and this is asserted.
struct StrippedBound {
  WeightedMatrix matrix;  // rows re-sorted into reference-class order
  std::array<int, 11> multiplicities{};
  double gap_bound = 0.0;  // 2*sqrt(n)
};

StrippedBound strip_interior_and_bound(const MinimiserCertificate& cert);

// Characteristic polynomial of the reference pattern T blown up by x (open
// multiplication: classes become independent sets, size 0 deletes).  Checks
// internally: zero trace, at most six nonzero roots, the t^{m-2}
// coefficient equals minus the weighted edge count of T, and x[10] (the
// isolated class) leaves the nonzero roots unchanged.
Polynomial tvm_charpoly(const std::array<int, 11>& x);

struct TvmScanRow {
  std::array<int, 11> x{};
  int total = 0;
  double lambda_penult = 0.0;
  double ratio = 0.0;   // lambda_penult / total
  bool flagged = false;  // ratio < -1/3 - 1e-8
};

struct TvmScanReport {
  std::vector<TvmScanRow> rows;
  double min_ratio = 0.0;
  std::array<int, 11> min_witness{};
  bool counterexample = false;
};

// Scans blow-ups of the reference pattern for penultimate-eigenvalue ratios
// below -1/3.  Always includes the deterministic family
// [a,0,0,b,a,0,0,b,a,b,0] (ratio exactly -1/3) for a,b in [1,max_mult],
// plus `samples` random multiplicity vectors with entries in [0,max_mult]
// and x[10] = 0.
TvmScanReport conjecture_scan_tvm(int max_mult, int samples, std::uint64_t seed);

struct SearchConfig {
  int max_iters = 6000;
  int restarts = 1;
};

struct TrajectoryStep {
  int step = 0;
  std::string move;
  double lambda_penult = 0.0;
};

struct SearchResult {
  WeightedMatrix matrix;
  double lambda_penult = 0.0;
  std::vector<TrajectoryStep> trajectory;  // of the best restart
  int best_restart = 0;
  bool hit_iteration_cap = false;
};

// Monotone local search for min lambda_{n-1} over symmetric [0,1] matrices
// with zero diagonal.  Moves: single-entry pushes screened by the shift
// bound, a clipped rank-2 descent step, and interior-entry reduction; every
// accepted move is verified against the dense solver and never increases
// lambda_{n-1} beyond 1e-10.
SearchResult local_search_minimise(int n, std::uint64_t seed,
                                   const SearchConfig& config = SearchConfig{});

// For matrices whose bottom three eigenvalues coincide within 1e-7 (throws
// otherwise), checks the trace floor lambda_{n-1} >= -n/(2*sqrt(3)) - 1e-8.
bool trace_floor_check(const WeightedMatrix& m);

}  // namespace l3lab
