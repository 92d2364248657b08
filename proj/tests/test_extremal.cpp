#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "canonical_instances.hpp"
#include "l3lab/extremal.hpp"
#include "l3lab/families.hpp"
#include "l3lab/graphs.hpp"
#include "l3lab/linalg.hpp"
#include "l3lab/util.hpp"

using namespace l3lab;

namespace {

WeightedMatrix prism_matrix() {
  return WeightedMatrix::from_graph(
      cartesian_product(cycle_graph(3), complete_graph(2)));
}

WeightedMatrix random_weighted(int n, Rng& rng) {
  SymMatrix m(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) m.set(i, j, rng.uniform());
  return WeightedMatrix(m);
}

double penult(const SymMatrix& m) { return lambda_k(m, m.n() - 1); }

int interior_count(const WeightedMatrix& m) {
  int c = 0;
  for (int i = 0; i < m.n(); ++i)
    for (int j = i + 1; j < m.n(); ++j)
      if (m(i, j) > 1e-9 && m(i, j) < 1.0 - 1e-9) ++c;
  return c;
}

// Exact integer characteristic polynomial for small 0/1 matrices; division
// at each step is exact, so any inexactness would be a logic error.
std::vector<long long> int_char_poly(const std::vector<std::vector<long long>>& a) {
  const int n = static_cast<int>(a.size());
  std::vector<std::vector<long long>> mk = a;
  std::vector<long long> c(n + 1, 0);
  c[n] = 1;
  for (int k = 1; k <= n; ++k) {
    long long tr = 0;
    for (int i = 0; i < n; ++i) tr += mk[i][i];
    if (tr % k != 0) throw std::logic_error("int_char_poly: inexact division");
    const long long ck = tr / k;
    c[n - k] = -ck;
    if (k == n) break;
    std::vector<std::vector<long long>> next(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        long long acc = 0;
        for (int t = 0; t < n; ++t)
          acc += a[i][t] * (mk[t][j] - (t == j ? ck : 0));
        next[i][j] = acc;
      }
    mk = std::move(next);
  }
  return c;
}

// the 25 monomials in the quadratic coefficient of the reference pattern,
// frozen independently of the library's own tables
const std::pair<int, int> kPatternPairs[25] = {
    {0, 4}, {0, 5}, {0, 6}, {0, 7}, {0, 8}, {1, 4}, {1, 5}, {1, 6}, {1, 7},
    {1, 8}, {1, 9}, {2, 4}, {2, 5}, {2, 6}, {2, 7}, {3, 4}, {3, 5}, {3, 6},
    {3, 7}, {3, 9}, {4, 8}, {5, 8}, {5, 9}, {7, 9}, {8, 9}};

}  // namespace

TEST_CASE("weighted matrices validate their entries") {
  WeightedMatrix m(3);
  m.set(0, 1, 0.5);
  CHECK(m(1, 0) == 0.5);
  CHECK_THROWS_AS(m.set(0, 1, 1.5), std::invalid_argument);
  CHECK_THROWS_AS(m.set(0, 1, -0.1), std::invalid_argument);
  SymMatrix bad(2);
  bad.set(0, 1, 2.0);
  CHECK_THROWS_AS(WeightedMatrix{bad}, std::invalid_argument);
  CHECK_NOTHROW(WeightedMatrix::from_graph(petersen_graph()));
}

TEST_CASE("bottom eigenpair basis") {
  const WeightedMatrix m = WeightedMatrix::from_graph(path_graph(4));
  const EigenpairBasis b = make_eigenpair_basis(m.mat());
  const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
  CHECK(b.lambda_n == doctest::Approx(-golden));
  CHECK(b.lambda_penult == doctest::Approx(-golden + 1.0));
  double dot = 0.0, nv = 0.0, nw = 0.0;
  for (int i = 0; i < 4; ++i) {
    dot += b.v[i] * b.w[i];
    nv += b.v[i] * b.v[i];
    nw += b.w[i] * b.w[i];
  }
  CHECK(std::abs(dot) < 1e-9);
  CHECK(nv == doctest::Approx(1.0));
  CHECK(nw == doctest::Approx(1.0));
  CHECK_THROWS_AS(make_eigenpair_basis(SymMatrix(1)), std::invalid_argument);
}

TEST_CASE("quadratic forms of a perturbation") {
  const WeightedMatrix m = WeightedMatrix::from_graph(path_graph(4));
  const EigenpairBasis b = make_eigenpair_basis(m.mat());
  SymMatrix e(4);
  e.set(0, 1, 1.0);
  const PerturbationTriple t = sqr(e, b);
  CHECK(t.S == doctest::Approx(2 * b.v[0] * b.v[1]).epsilon(1e-12));
  CHECK(t.Q == doctest::Approx(b.v[0] * b.w[1] + b.v[1] * b.w[0]).epsilon(1e-12));
  CHECK(t.R == doctest::Approx(2 * b.w[0] * b.w[1]).epsilon(1e-12));
  CHECK_THROWS_AS(sqr(SymMatrix(3), b), std::invalid_argument);

  // rank-one drops in the span are negative semidefinite, bumps are not
  SymMatrix drop(4), bump(4);
  for (int i = 0; i < 4; ++i)
    for (int j = i; j < 4; ++j) {
      drop.set(i, j, -(b.v[i] * b.v[j] + b.w[i] * b.w[j]));
      bump.set(i, j, b.v[i] * b.v[j]);
    }
  CHECK(is_negsemidef_on_span(sqr(drop, b)));
  CHECK_FALSE(is_negsemidef_on_span(sqr(bump, b)));
}

TEST_CASE("duality bound is tight on classic graphs") {
  CHECK(dual_bound(WeightedMatrix::from_graph(cycle_graph(6))) ==
        doctest::Approx(1.0).epsilon(1e-9));
  CHECK(dual_bound(WeightedMatrix::from_graph(petersen_graph())) ==
        doctest::Approx(1.0).epsilon(1e-9));
  CHECK(dual_bound(WeightedMatrix::from_graph(empty_graph(3))) ==
        doctest::Approx(0.0).scale(1.0).epsilon(1e-9));
  // the third eigenvalue never exceeds the bound on random instances
  Rng rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = rng.uniform_int(3, 9);
    WeightedMatrix m = random_weighted(n, rng);
    CHECK(lambda_k(m.mat(), 3) <= dual_bound(m) + 1e-8);
  }
  WeightedMatrix loops(3);
  loops.set(0, 0, 0.5);
  CHECK_THROWS_AS(dual_bound(loops), std::invalid_argument);
  CHECK_THROWS_AS(dual_bound(WeightedMatrix(2)), std::invalid_argument);
}

TEST_CASE("blow-up scaling") {
  for (int t : {1, 2, 3}) {
    const BlowupScaling r = blowup_scaling_check(cycle_graph(6), t);
    CHECK(r.ok);
    CHECK(r.predicted == doctest::Approx(r.actual).epsilon(1e-9));
    CHECK(r.predicted == doctest::Approx(2.0 * t - 1.0));
  }
  const BlowupScaling pet = blowup_scaling_check(petersen_graph(), 2);
  CHECK(pet.ok);
  CHECK(pet.predicted == doctest::Approx(3.0));
  // when the source eigenvalue sits below -1 the prediction is only a floor
  const BlowupScaling p3 = blowup_scaling_check(path_graph(3), 2);
  CHECK(p3.ok);
  CHECK(p3.predicted == doctest::Approx(1.0 - 2.0 * std::sqrt(2.0)));
  CHECK(p3.actual == doctest::Approx(-1.0));
  CHECK(p3.actual > p3.predicted + 0.1);
  CHECK_THROWS_AS(blowup_scaling_check(cycle_graph(6), 0), std::invalid_argument);
}

TEST_CASE("penultimate shift bound dominates the true shift") {
  Rng rng(23);
  int tested = 0;
  for (int trial = 0; trial < 200 && tested < 60; ++trial) {
    const int n = rng.uniform_int(4, 8);
    const WeightedMatrix m = random_weighted(n, rng);
    const EigenpairBasis b = make_eigenpair_basis(m.mat());
    const int i = rng.uniform_int(0, n - 2);
    const int j = rng.uniform_int(i + 1, n - 1);
    const double pw = b.w[i] * b.w[j];
    if (std::abs(pw) < 1e-10) continue;
    const double sgn = pw > 0 ? -1.0 : 1.0;  // push the w-form downward
    const double room = sgn < 0 ? m(i, j) : 1.0 - m(i, j);
    if (room < 1e-6) continue;
    SymMatrix dir(n);
    dir.set(i, j, sgn);
    const PerturbationTriple t = sqr(dir, b);
    double eps = room;
    bool valid = false;
    while (eps > 1e-12) {
      if (b.lambda_penult - b.lambda_n > eps * (t.S - t.R)) {
        valid = true;
        break;
      }
      eps /= 2;
    }
    if (!valid) continue;
    const double bound = penultimate_shift_bound(b, t, eps);
    WeightedMatrix moved = m;
    moved.set(i, j, std::min(1.0, std::max(0.0, m(i, j) + sgn * eps)));
    const double shift = penult(moved.mat()) - b.lambda_penult;
    CHECK(shift <= bound + 1e-9);
    ++tested;
  }
  CHECK(tested >= 40);

  // violated validity condition: degenerate bottom pair with S - R > 0
  const WeightedMatrix prism = prism_matrix();
  const EigenpairBasis pb = make_eigenpair_basis(prism.mat());
  PerturbationTriple bad{1.0, 0.0, -1.0};
  CHECK_THROWS_AS(penultimate_shift_bound(pb, bad, 0.5), std::invalid_argument);
  PerturbationTriple any{0.0, 0.0, 0.0};
  CHECK_THROWS_AS(penultimate_shift_bound(pb, any, -1.0), std::invalid_argument);
}

TEST_CASE("zeroing the diagonal never raises the penultimate eigenvalue") {
  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = rng.uniform_int(3, 8);
    WeightedMatrix m = random_weighted(n, rng);
    for (int i = 0; i < n; ++i) m.set(i, i, rng.uniform());
    const double before = penult(m.mat());
    const WeightedMatrix out = zero_diagonal(m);
    for (int i = 0; i < n; ++i) CHECK(out(i, i) == 0.0);
    CHECK(penult(out.mat()) <= before + 1e-8);
  }
}

TEST_CASE("interior reduction pushes entries to a bound") {
  // 0/1 matrices have no interior pairs to work on
  CHECK_THROWS_AS(reduce_interior_entries(prism_matrix()), std::runtime_error);

  WeightedMatrix m = WeightedMatrix::from_graph(cycle_graph(4));
  m.set(0, 1, 0.4);
  m.set(0, 3, 0.6);
  const double before = penult(m.mat());
  const WeightedMatrix out = reduce_interior_entries(m);
  CHECK(penult(out.mat()) <= before + 1e-8);
  CHECK(interior_count(out) < interior_count(m));

  Rng rng(41);
  int reduced = 0;
  for (int trial = 0; trial < 15; ++trial) {
    const int n = rng.uniform_int(4, 7);
    const WeightedMatrix r = random_weighted(n, rng);
    const double lp = penult(r.mat());
    try {
      const WeightedMatrix o = reduce_interior_entries(r);
      CHECK(penult(o.mat()) <= lp + 1e-8);
      CHECK(interior_count(o) <= interior_count(r));
      ++reduced;
    } catch (const std::runtime_error&) {
      // a fully interior matrix can lack an admissible neutral direction
    }
  }
  CHECK(reduced >= 8);
}

TEST_CASE("row replacement") {
  const WeightedMatrix m = WeightedMatrix::from_graph(cycle_graph(5));
  const EigenpairBasis b = make_eigenpair_basis(m.mat());
  std::vector<double> row(5, 0.0);
  for (int j = 0; j < 5; ++j) row[j] = m(2, j);

  // replacing a row by itself at lambda' = lambda_n is the identity move
  const WeightedMatrix same = replace_row_geometric(m, 2, row, b.lambda_n);
  for (int j = 0; j < 5; ++j) CHECK(same(2, j) == doctest::Approx(m(2, j)));

  CHECK_THROWS_AS(replace_row_geometric(m, 5, row, b.lambda_n),
                  std::invalid_argument);
  CHECK_THROWS_AS(replace_row_geometric(m, 2, {0.0, 1.0}, b.lambda_n),
                  std::invalid_argument);
  CHECK_THROWS_AS(replace_row_geometric(m, 2, row, b.lambda_n + 1.0),
                  std::invalid_argument);
  std::vector<double> wrong = row;
  wrong[0] = 1.0 - wrong[0];
  CHECK_THROWS_AS(replace_row_geometric(m, 2, wrong, b.lambda_n),
                  std::invalid_argument);

  // a genuine move: perturb a row inside the orthogonal complement of the
  // bottom pair, which keeps both eigenvector identities intact
  SymMatrix half(4);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) half.set(i, j, 0.5);
  const WeightedMatrix hm{half};
  const EigenpairBasis hb = make_eigenpair_basis(hm.mat());
  const int r = 0;
  const double vv[3] = {hb.v[1], hb.v[2], hb.v[3]};
  const double ww[3] = {hb.w[1], hb.w[2], hb.w[3]};
  const double cross[3] = {vv[1] * ww[2] - vv[2] * ww[1],
                           vv[2] * ww[0] - vv[0] * ww[2],
                           vv[0] * ww[1] - vv[1] * ww[0]};
  double mx = 0.0;
  for (double c : cross) mx = std::max(mx, std::abs(c));
  REQUIRE(mx > 1e-6);
  const double t = 0.3 / mx;
  std::vector<double> alphas{0.0, 0.5 + t * cross[0], 0.5 + t * cross[1],
                             0.5 + t * cross[2]};
  const WeightedMatrix out = replace_row_geometric(hm, r, alphas, hb.lambda_n);
  CHECK(out(0, 1) == doctest::Approx(alphas[1]));
  CHECK(penult(out.mat()) <= hb.lambda_penult + 1e-8);
  // shrinking the diagonal is rejected by the monotonicity precondition
  WeightedMatrix diag = hm;
  diag.set(0, 0, 0.25);
  std::vector<double> keep{0.0, 0.5, 0.5, 0.5};
  CHECK_THROWS_AS(
      replace_row_geometric(diag, 0, keep, make_eigenpair_basis(diag.mat()).lambda_n),
      std::invalid_argument);
}

TEST_CASE("canonical form rejects degenerate or mismatched input") {
  // double bottom eigenvalue: hypothesis fails outright
  CHECK_THROWS_AS(canonicalize_simple_minimiser(prism_matrix()),
                  std::invalid_argument);
  // complete bipartite graphs never satisfy the certificate identities
  CHECK_THROWS_AS(canonicalize_simple_minimiser(
                      WeightedMatrix::from_graph(complete_bipartite(2, 3))),
                  std::runtime_error);
}

TEST_CASE("canonical form certifies generated minimisers") {
  Rng rng(2026);
  for (int k = 0; k < 12; ++k) {
    const testutil::CanonicalInstance inst = testutil::make_canonical_instance(rng);
    CAPTURE(inst.p);
    CAPTURE(inst.n);
    const MinimiserCertificate cert = canonicalize_simple_minimiser(inst.matrix);
    CHECK(cert.p_size * cert.n_size == inst.p * inst.n);
    CHECK(cert.p_size + cert.n_size == inst.p + inst.n);
    CHECK(cert.z1_size + cert.z2_size == inst.z1 + inst.z2);
    CHECK(cert.z3_size == inst.z3);
    CHECK(cert.lambda_penult ==
          doctest::Approx(-std::sqrt(double(inst.p) * inst.n)).epsilon(1e-8));
    // order must be a permutation of the vertices
    std::vector<int> seen(inst.matrix.n(), 0);
    for (int i : cert.order) ++seen[i];
    for (int c : seen) CHECK(c == 1);
    if (cert.alpha) CHECK((*cert.alpha > 0.0 && *cert.alpha < 1.0));

    const StrippedBound sb = strip_interior_and_bound(cert);
    int total = 0;
    for (int x : sb.multiplicities) total += x;
    CHECK(total == inst.matrix.n());
    CHECK(sb.multiplicities[8] == cert.z1_size);
    CHECK(sb.multiplicities[9] == cert.z2_size);
    CHECK(sb.multiplicities[10] == cert.z3_size);
    CHECK(sb.gap_bound == doctest::Approx(2.0 * std::sqrt(inst.matrix.n())));

    // relabelling vertices must not change the certified structure
    const WeightedMatrix shuffled = testutil::shuffled_matrix(inst.matrix, rng);
    const MinimiserCertificate cert2 = canonicalize_simple_minimiser(shuffled);
    CHECK(cert2.p_size * cert2.n_size == inst.p * inst.n);
    CHECK(cert2.lambda_penult == doctest::Approx(cert.lambda_penult).epsilon(1e-9));
    CHECK_NOTHROW(strip_interior_and_bound(cert2));
  }
}

TEST_CASE("characteristic polynomial of pattern multiplications") {
  Rng rng(77);
  for (int trial = 0; trial < 25; ++trial) {
    std::array<int, 11> x{};
    int total = 0;
    for (int i = 0; i < 11 && total < 8; ++i) {
      x[i] = rng.uniform_int(0, 2);
      total += x[i];
    }
    if (total < 2) {
      x[0] = 1;
      x[4] = 1;
      total = 0;
      for (int v : x) total += v;
    }
    const Polynomial p = tvm_charpoly(x);
    REQUIRE(p.degree() == total);

    // exact integer oracle
    const Graph g = open_vertex_multiplication(
        Graph::from_symmatrix(T_matrix()), std::vector<int>(x.begin(), x.end()));
    std::vector<std::vector<long long>> a(total, std::vector<long long>(total, 0));
    for (const auto& [u, w] : g.edges()) a[u][w] = a[w][u] = 1;
    const std::vector<long long> want = int_char_poly(a);
    for (int i = 0; i <= total; ++i)
      CHECK(p.c[i] == doctest::Approx(double(want[i])).scale(1.0).epsilon(1e-6));

    // quadratic coefficient equals minus the frozen monomial table
    long long table = 0;
    for (const auto& [u, w] : kPatternPairs)
      table += static_cast<long long>(x[u]) * x[w];
    CHECK(want[total - 2] == -table);
  }
  CHECK_THROWS_AS(tvm_charpoly({0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}),
                  std::invalid_argument);
  std::array<int, 11> neg{};
  neg[0] = -1;
  CHECK_THROWS_AS(tvm_charpoly(neg), std::invalid_argument);
  // adding isolated vertices leaves the nonzero roots alone
  CHECK_NOTHROW(tvm_charpoly({2, 0, 0, 1, 2, 0, 0, 1, 2, 1, 3}));
}

TEST_CASE("pattern scan stays at the conjectured floor") {
  const TvmScanReport rep = conjecture_scan_tvm(3, 0, 1);
  REQUIRE(rep.rows.size() == 9);  // the deterministic family alone
  for (const auto& row : rep.rows) {
    CHECK(row.ratio == doctest::Approx(-1.0 / 3.0).epsilon(1e-8));
    CHECK_FALSE(row.flagged);
  }
  CHECK_FALSE(rep.counterexample);
  CHECK(rep.min_ratio == doctest::Approx(-1.0 / 3.0).epsilon(1e-8));

  const TvmScanReport rep2 = conjecture_scan_tvm(3, 40, 9);
  CHECK(rep2.rows.size() == 49);
  CHECK_FALSE(rep2.counterexample);
  CHECK(rep2.min_ratio >= -1.0 / 3.0 - 1e-8);
  CHECK_THROWS_AS(conjecture_scan_tvm(0, 5, 1), std::invalid_argument);
}

TEST_CASE("local search reaches the floor on six vertices") {
  SearchConfig cfg;
  cfg.restarts = 10;
  const SearchResult res = local_search_minimise(6, 1, cfg);
  CHECK(res.lambda_penult <= -2.0 + 1e-6);
  CHECK(res.lambda_penult >= -2.0 - 1e-6);
  CHECK(res.best_restart < 10);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      CHECK(res.matrix(i, j) >= 0.0);
      CHECK(res.matrix(i, j) <= 1.0);
    }
  // the trajectory never moves the objective upward
  double last = 1e300;
  for (const auto& step : res.trajectory) {
    CHECK(step.lambda_penult <= last + 1e-9);
    last = step.lambda_penult;
    CHECK((step.move == "edge" || step.move == "steep" || step.move == "interior"));
  }

  // determinism: the same seed reproduces the same search
  const SearchResult again = local_search_minimise(6, 1, cfg);
  CHECK(again.lambda_penult == res.lambda_penult);
  CHECK(again.best_restart == res.best_restart);
  CHECK(again.trajectory.size() == res.trajectory.size());
  CHECK(again.matrix == res.matrix);
  CHECK_THROWS_AS(local_search_minimise(1, 0), std::invalid_argument);
}

TEST_CASE("floor for matrices with a triple bottom eigenvalue") {
  CHECK(trace_floor_check(WeightedMatrix::from_graph(complete_graph(4))));
  // complete multipartite with four doubled classes
  const Graph k2222 = complement(disjoint_union(
      disjoint_union(complete_graph(2), complete_graph(2)),
      disjoint_union(complete_graph(2), complete_graph(2))));
  CHECK(trace_floor_check(WeightedMatrix::from_graph(k2222)));
  CHECK(trace_floor_check(WeightedMatrix::from_graph(empty_graph(3))));
  // octahedron: bottom eigenvalues are -2, -2, 0
  CHECK_THROWS_AS(trace_floor_check(WeightedMatrix::from_graph(
                      lexicographic_empty_product(complete_graph(3), 2))),
                  std::invalid_argument);
  CHECK_THROWS_AS(trace_floor_check(WeightedMatrix(2)), std::invalid_argument);
}
