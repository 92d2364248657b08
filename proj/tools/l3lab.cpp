// l3lab command-line tool: graph construction, class verification, reference
// scans, and the penultimate-eigenvalue minimiser.  Exit codes: 0 success,
// 1 assertion or conjecture violation, 2 usage error, 3 I/O error.

#include <array>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "l3lab/cayley.hpp"
#include "l3lab/extremal.hpp"
#include "l3lab/families.hpp"
#include "l3lab/graphs.hpp"
#include "l3lab/linalg.hpp"
#include "l3lab/unity.hpp"
#include "l3lab/util.hpp"
#include "l3lab/verify.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;
constexpr int kIo = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numbers pass through fmt12 before entering JSON so every format honours
// the 12-significant-digit contract.
double round12(double x) { return std::stod(l3lab::fmt12(x)); }

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string cur;
  std::stringstream ss(text);
  while (std::getline(ss, cur, ',')) {
    std::size_t used = 0;
    const int v = std::stoi(cur, &used);
    if (used != cur.size())
      throw std::invalid_argument("bad integer '" + cur + "'");
    out.push_back(v);
  }
  return out;
}

int parse_int(const std::string& text) {
  std::size_t used = 0;
  const int v = std::stoi(text, &used);
  if (used != text.size())
    throw std::invalid_argument("bad integer '" + text + "'");
  return v;
}

void write_text(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw IoError("cannot write " + out_path);
  f << content;
  if (!f) throw IoError("write failed for " + out_path);
}

std::string group_tag(const l3lab::FiniteAbelianGroup& g) {
  std::string s;
  for (std::size_t i = 0; i < g.factors().size(); ++i) {
    if (i) s += 'x';
    s += 'Z' + std::to_string(g.factors()[i]);
  }
  return s;
}

std::string join_ints(const std::vector<int>& v, char sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(v[i]);
  }
  return s;
}

// ---------------------------------------------------------------- construct

int cmd_construct(const std::string& family, const std::vector<std::string>& params,
                  const std::string& format, const std::string& out_path) {
  using namespace l3lab;
  const auto need = [&](std::size_t k, const char* usage) {
    if (params.size() != k)
      throw std::invalid_argument(std::string("construct ") + family +
                                  " expects: " + usage);
  };
  const auto list_arg = [](const std::string& s) {
    return s == "-" ? std::string() : s;  // "-" stands for the empty list
  };

  Graph g(1);
  if (family == "H") {
    need(2, "a b");
    g = build_H(parse_int(params[0]), parse_int(params[1]));
  } else if (family == "pivalous") {
    need(1, "n");
    g = build_pivalous(parse_int(params[0]));
  } else if (family == "cayley") {
    need(2, "group elements   (e.g. Z12 \"1,5,7,11\")");
    const GroupSpec spec = parse_group_spec(params[0]);
    if (spec.kind != GroupSpec::Kind::abelian)
      throw std::invalid_argument(
          "construct cayley needs an abelian group; use the dihedral/dicyclic "
          "families for the twisted ones");
    const FiniteAbelianGroup grp(spec.factors);
    g = cayley_graph(grp, parse_elements(grp, list_arg(params[1])));
  } else if (family == "semicayley") {
    need(4, "group R S T");
    const GroupSpec spec = parse_group_spec(params[0]);
    if (spec.kind != GroupSpec::Kind::abelian)
      throw std::invalid_argument("construct semicayley needs an abelian group");
    const FiniteAbelianGroup grp(spec.factors);
    g = semi_cayley_graph(grp, parse_elements(grp, list_arg(params[1])),
                          parse_elements(grp, list_arg(params[2])),
                          parse_elements(grp, list_arg(params[3])));
  } else if (family == "dihedral" || family == "dicyclic") {
    need(3, "n rotation-part reflection-part");
    const int n = parse_int(params[0]);
    const std::string rot = list_arg(params[1]), refl = list_arg(params[2]);
    const std::vector<int> r = rot.empty() ? std::vector<int>{} : parse_int_list(rot);
    const std::vector<int> s =
        refl.empty() ? std::vector<int>{} : parse_int_list(refl);
    g = family == "dihedral" ? dihedral_cayley(n, r, s) : dicyclic_cayley(n, r, s);
  } else if (family == "tvm") {
    need(1, "x1,...,x11");
    const std::vector<int> x = parse_int_list(params[0]);
    if (x.size() != 11)
      throw std::invalid_argument("construct tvm expects 11 multiplicities");
    g = open_vertex_multiplication(Graph::from_symmatrix(T_matrix()), x);
  } else if (family == "blowup") {
    need(2, "graph6 t");
    g = closed_blowup(graph6_decode(params[0]), parse_int(params[1]));
  } else if (family == "linegraph") {
    need(1, "graph6");
    g = line_graph(graph6_decode(params[0]));
  } else if (family == "complement") {
    need(1, "graph6");
    g = complement(graph6_decode(params[0]));
  } else {
    throw std::invalid_argument(
        "unknown family '" + family +
        "'; expected one of H, pivalous, cayley, semicayley, dihedral, "
        "dicyclic, tvm, blowup, linegraph, complement");
  }

  const Spectrum s = graph_spectrum(g);
  if (format == "json") {
    json j;
    j["graph6"] = graph6_encode(g);
    j["n"] = g.n();
    json vals = json::array();
    for (double v : s.values) vals.push_back(round12(v));
    j["spectrum"] = vals;
    write_text(out_path, j.dump() + "\n");
  } else {
    std::string text = graph6_encode(g) + "\n";
    for (std::size_t i = 0; i < s.values.size(); ++i) {
      if (i) text += ' ';
      text += l3lab::fmt12(s.values[i]);
    }
    text += '\n';
    write_text(out_path, text);
  }
  return kOk;
}

// ------------------------------------------------------------------- verify

struct VerifyOutput {
  std::vector<l3lab::VerdictRecord> records;
  std::vector<std::string> notes;   // rendered as trailing '# ...' lines
  std::vector<std::string> errors;  // corpus lines that failed to parse
  int violations = 0;               // conjecture-level exceedances
};

int emit_verify(const VerifyOutput& vo, const std::string& format,
                const std::string& out_path) {
  bool all_ok = true;
  for (const auto& r : vo.records) all_ok = all_ok && r.ok;

  std::string text;
  if (format == "json") {
    json j;
    j["records"] = json::array();
    for (const auto& r : vo.records) {
      json jr;
      jr["id"] = r.id;
      jr["n"] = r.n;
      jr["lambda3"] = round12(r.lambda3);
      jr["ratio"] = round12(r.ratio);
      jr["tags"] = r.tags;
      jr["ok"] = r.ok;
      j["records"].push_back(jr);
    }
    j["notes"] = vo.notes;
    j["errors"] = vo.errors;
    j["all_ok"] = all_ok;
    j["violations"] = vo.violations;
    text = j.dump() + "\n";
  } else {
    text = l3lab::verdict_csv_header() + "\n";
    for (const auto& r : vo.records) text += l3lab::verdict_csv_row(r) + "\n";
    for (const auto& e : vo.errors) text += "# error: " + e + "\n";
    for (const auto& n : vo.notes) text += "# " + n + "\n";
  }
  write_text(out_path, text);
  return (all_ok && vo.violations == 0) ? kOk : kViolation;
}

std::vector<l3lab::Graph> load_corpus(const std::string& path,
                                      std::vector<std::string>* errors) {
  const std::string resolved = l3lab::resolve_corpus_path(path);
  std::ifstream in(resolved);
  if (!in) throw IoError("cannot read corpus " + resolved);
  std::vector<l3lab::Graph> graphs;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      graphs.push_back(l3lab::graph6_decode(line));
    } catch (const std::exception& e) {
      errors->push_back("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return graphs;
}

int verify_srg_cmd(bool builtin, const std::string& corpus,
                   const std::string& format, const std::string& out_path) {
  using namespace l3lab;
  VerifyOutput vo;
  if (builtin || corpus.empty()) {
    // connected, disconnected, and complement-disconnected representatives
    const Graph k4 = complete_graph(4);
    const Graph cases[] = {
        petersen_graph(), cycle_graph(5),
        disjoint_union(disjoint_union(k4, k4), k4),
        complement(disjoint_union(disjoint_union(complete_graph(2), complete_graph(2)),
                                  complete_graph(2)))};
    for (const Graph& g : cases) vo.records.push_back(verify_srg(g));
  } else {
    int skipped = 0;
    for (const Graph& g : load_corpus(corpus, &vo.errors)) {
      if (classify(g).srg)
        vo.records.push_back(verify_srg(g));
      else
        ++skipped;
    }
    vo.notes.push_back("skipped " + std::to_string(skipped) +
                       " graphs without srg parameters");
  }
  return emit_verify(vo, format, out_path);
}

int verify_regline_cmd(const std::string& gen, const std::string& corpus,
                       const std::string& format, const std::string& out_path) {
  using namespace l3lab;
  VerifyOutput vo;
  std::vector<Graph> graphs;
  if (!corpus.empty()) {
    int skipped = 0;
    for (const Graph& g : load_corpus(corpus, &vo.errors)) {
      if (classify(g).regular)
        graphs.push_back(g);
      else
        ++skipped;
    }
    vo.notes.push_back("skipped " + std::to_string(skipped) +
                       " non-regular graphs");
    vo.notes.push_back(
        "regular graphs verified: " + std::to_string(graphs.size()) +
        " (full n<=11 reference count: 797)");
  } else {
    std::string spec = gen.empty() ? "n<=8" : gen;
    if (spec.rfind("n<=", 0) != 0)
      throw std::invalid_argument("regline --gen expects the form n<=K");
    const int nmax = parse_int(spec.substr(3));
    if (nmax < 1 || nmax > 10)
      throw std::invalid_argument("regline --gen supports 1 <= K <= 10");
    for (int n = 1; n <= nmax; ++n)
      for (int r = 0; r < n; ++r) {
        if ((n * r) % 2 != 0) continue;
        for (const Graph& g : enumerate_regular_graphs(n, r)) graphs.push_back(g);
      }
    vo.notes.push_back("generated " + std::to_string(graphs.size()) +
                       " regular graphs up to isomorphism");
  }
  for (const Graph& g : graphs) vo.records.push_back(verify_regular_line_graph(g));
  return emit_verify(vo, format, out_path);
}

int verify_semiregline_cmd(const std::string& gen, const std::string& corpus,
                           const std::string& format,
                           const std::string& out_path) {
  using namespace l3lab;
  VerifyOutput vo;
  std::vector<Graph> graphs;
  if (!corpus.empty()) {
    int skipped = 0;
    for (const Graph& g : load_corpus(corpus, &vo.errors)) {
      if (classify(g).semiregular_bipartite)
        graphs.push_back(g);
      else
        ++skipped;
    }
    vo.notes.push_back("skipped " + std::to_string(skipped) +
                       " non-semiregular graphs");
  } else {
    if (!gen.empty() && gen != "params7")
      throw std::invalid_argument("semiregline --gen supports only 'params7'");
    // the seven parameter tuples with n2-side degree 4 and a potential
    // ratio above 1/5
    const int tuples[7][4] = {{5, 4, 4, 5},  {4, 4, 4, 4},  {8, 4, 2, 4},
                              {16, 4, 1, 4}, {4, 4, 3, 3},  {6, 4, 2, 3},
                              {12, 4, 1, 3}};
    for (const auto& t : tuples) {
      const auto family = enumerate_semiregular_bipartite(t[0], t[1], t[2], t[3]);
      vo.notes.push_back("params(" + std::to_string(t[0]) + "," +
                         std::to_string(t[1]) + "," + std::to_string(t[2]) + "," +
                         std::to_string(t[3]) +
                         "): " + std::to_string(family.size()) + " graphs");
      for (const Graph& g : family) graphs.push_back(g);
    }
    vo.notes.push_back("total graphs: " + std::to_string(graphs.size()) +
                       " (reference total: 58)");
  }
  double max_ratio = 0.0;
  for (const Graph& g : graphs) {
    VerdictRecord r = verify_semiregular_line_graph(g);
    max_ratio = std::max(max_ratio, r.ratio);
    vo.records.push_back(std::move(r));
  }
  vo.notes.push_back("max ratio " + fmt12(max_ratio) +
                     " (reference maximum: 0.202254248)");
  return emit_verify(vo, format, out_path);
}

int verify_cayley_cmd(int samples, int max_order, int max_semi_order,
                      std::uint64_t seed, const std::string& format,
                      const std::string& out_path) {
  using namespace l3lab;
  if (samples < 0) throw std::invalid_argument("--samples must be >= 0");
  if (max_order < 3 || max_semi_order < 3)
    throw std::invalid_argument("--max-order values must be >= 3");
  VerifyOutput vo;
  Rng rng(seed);

  const auto random_group = [&](int cap) {
    for (;;) {
      const int rank = rng.uniform_int(1, 3);
      std::vector<int> factors;
      long order = 1;
      for (int i = 0; i < rank; ++i) {
        factors.push_back(rng.uniform_int(2, 9));
        order *= factors.back();
      }
      if (order >= 3 && order <= cap) return FiniteAbelianGroup(factors);
    }
  };
  const auto close = [](const std::vector<double>& a,
                        const std::vector<double>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (std::abs(a[i] - b[i]) > 1e-8) return false;
    return true;
  };

  // pinned instance: the Petersen graph as a two-layer circulant
  {
    const FiniteAbelianGroup z5({5});
    const std::vector<int> r{1, 4}, s{2, 3}, t{0};
    const Graph pet = semi_cayley_graph(z5, r, s, t);
    const std::vector<double> formula = semi_cayley_spectrum(z5, r, s, t);
    std::vector<double> expect{3, 1, 1, 1, 1, 1, -2, -2, -2, -2};
    VerdictRecord rec;
    rec.id = "SC(Z5;{1,4},{2,3},{0})";
    rec.n = 10;
    rec.lambda3 = formula[2];
    rec.ratio = rec.lambda3 / 10.0;
    rec.tags = {"petersen-pin"};
    rec.ok = close(formula, graph_spectrum(pet).values) && close(formula, expect);
    vo.records.push_back(rec);
  }

  for (int i = 0; i < samples; ++i) {
    const FiniteAbelianGroup g = random_group(max_order);
    const std::vector<int> s = random_symmetric_connection_set(g, rng);
    const std::vector<double> formula = cayley_spectrum(g, s);
    const Graph graph = cayley_graph(g, s);
    const Lambda3Verdict v = verify_cayley_lambda3(g, s);
    VerdictRecord rec;
    rec.id = "Cay(" + group_tag(g) + ";{" + join_ints(s, ';') + "})";
    rec.n = g.order();
    rec.lambda3 = v.lambda3;
    rec.ratio = v.lambda3 / g.order();
    rec.tags = {"cayley"};
    rec.ok = close(formula, graph_spectrum(graph).values) && v.ok;
    vo.records.push_back(std::move(rec));
  }

  for (int i = 0; i < samples; ++i) {
    const FiniteAbelianGroup g = random_group(max_semi_order);
    const std::vector<int> r = random_symmetric_connection_set(g, rng);
    const std::vector<int> s = random_symmetric_connection_set(g, rng);
    const std::vector<int> t = random_subset(g, rng);
    const std::vector<double> formula = semi_cayley_spectrum(g, r, s, t);
    const Graph graph = semi_cayley_graph(g, r, s, t);
    const int n = 2 * g.order();
    const double l3 = formula[2];
    VerdictRecord rec;
    rec.id = "SC(" + group_tag(g) + ";|R|=" + std::to_string(r.size()) +
             ",|S|=" + std::to_string(s.size()) + ",|T|=" + std::to_string(t.size()) +
             ")#" + std::to_string(i);
    rec.n = n;
    rec.lambda3 = l3;
    rec.ratio = l3 / n;
    rec.tags = {"semi-cayley"};
    rec.ok = close(formula, graph_spectrum(graph).values) &&
             l3 <= n / 3.0 + 1e-9;
    vo.records.push_back(std::move(rec));
  }
  vo.notes.push_back("seed " + std::to_string(seed) + ", samples " +
                     std::to_string(samples) + " per family");
  return emit_verify(vo, format, out_path);
}

int verify_conjecture_cmd(const std::string& corpus, int top_k, double tol,
                          const std::string& format,
                          const std::string& out_path) {
  using namespace l3lab;
  if (corpus.empty())
    throw std::invalid_argument("verify conjecture requires --corpus");
  const std::string resolved = resolve_corpus_path(corpus);
  ScanResult res;
  try {
    res = scan_corpus_file(resolved, top_k);
  } catch (const std::runtime_error& e) {
    throw IoError(e.what());
  }
  VerifyOutput vo;
  vo.records = res.records;
  vo.errors = res.errors;
  int violations = 0;
  for (const auto& r : res.records)
    if (r.n > 0 && r.ratio > 1.0 / 3.0 + tol) ++violations;
  vo.violations = violations;
  vo.notes.push_back("scanned " + std::to_string(res.summary.scanned) +
                     ", failed lines " + std::to_string(res.summary.failed_lines));
  vo.notes.push_back("max ratio " + fmt12(res.summary.max_ratio) + " at " +
                     (res.summary.argmax_id.empty() ? "-" : res.summary.argmax_id));
  vo.notes.push_back("ratios above 1/3 - 1e-9: " +
                     std::to_string(res.summary.near_third) +
                     ", violations: " + std::to_string(violations));
  for (const auto& t : res.summary.top)
    vo.notes.push_back("top: " + t.id + " ratio " + fmt12(t.ratio));
  // records keep their own ok flags; violations drive the exit code
  return emit_verify(vo, format, out_path);
}

// ----------------------------------------------------------------- minimise

int cmd_minimise(int n, std::uint64_t seed, int restarts, int iters,
                 const std::string& out_path) {
  using namespace l3lab;
  if (n < 3) throw std::invalid_argument("minimise requires n >= 3");
  if (restarts < 1) throw std::invalid_argument("--restarts must be >= 1");
  if (iters < 1) throw std::invalid_argument("--iters must be >= 1");
  SearchConfig cfg;
  cfg.max_iters = iters;
  cfg.restarts = restarts;
  const SearchResult res = local_search_minimise(n, seed, cfg);
  const double floor = -n / 3.0;

  json j;
  j["n"] = n;
  j["seed"] = seed;
  j["restarts"] = restarts;
  j["lambda_penult"] = round12(res.lambda_penult);
  j["conjectured_floor"] = round12(floor);
  j["gap_above_floor"] = round12(res.lambda_penult - floor);
  j["counterexample"] = res.lambda_penult < floor - 1e-6;
  j["best_restart"] = res.best_restart;
  j["hit_iteration_cap"] = res.hit_iteration_cap;
  json mat = json::array();
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) mat.push_back(round12(res.matrix(i, k)));
  j["matrix"] = mat;
  json traj = json::array();
  for (const auto& step : res.trajectory) {
    json js;
    js["step"] = step.step;
    js["move"] = step.move;
    js["lambda_penult"] = round12(step.lambda_penult);
    traj.push_back(js);
  }
  j["trajectory"] = traj;
  write_text(out_path, j.dump(2) + "\n");
  return res.lambda_penult < floor - 1e-6 ? kViolation : kOk;
}

// ----------------------------------------------------------------- scan-tvm

int cmd_scan_tvm(int samples, int max_mult, std::uint64_t seed,
                 const std::string& out_path) {
  using namespace l3lab;
  const TvmScanReport rep = conjecture_scan_tvm(max_mult, samples, seed);
  std::string text = "multiplicities,total,lambda_penult,ratio,flag\n";
  for (const auto& row : rep.rows) {
    std::string mult;
    for (std::size_t i = 0; i < row.x.size(); ++i) {
      if (i) mult += ';';
      mult += std::to_string(row.x[i]);
    }
    text += mult + "," + std::to_string(row.total) + "," +
            fmt12(row.lambda_penult) + "," + fmt12(row.ratio) + "," +
            (row.flagged ? "1" : "0") + "\n";
  }
  std::string witness;
  for (std::size_t i = 0; i < rep.min_witness.size(); ++i) {
    if (i) witness += ';';
    witness += std::to_string(rep.min_witness[i]);
  }
  text += "# min_ratio " + fmt12(rep.min_ratio) + " at " + witness + "\n";
  text += std::string("# counterexample ") + (rep.counterexample ? "1" : "0") + "\n";
  write_text(out_path, text);
  return rep.counterexample ? kViolation : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral graph workbench: constructions, class verifiers, and "
               "penultimate-eigenvalue search"};
  app.require_subcommand(1);

  // construct
  auto* construct = app.add_subcommand("construct", "build a graph and print graph6 + spectrum");
  std::string family;
  std::vector<std::string> params;
  std::string c_format = "text", c_out;
  construct->add_option("family", family,
                        "H | pivalous | cayley | semicayley | dihedral | "
                        "dicyclic | tvm | blowup | linegraph | complement")
      ->required();
  construct->add_option("params", params, "family parameters");
  construct->add_option("--format", c_format, "text|json")
      ->check(CLI::IsMember({"text", "json"}));
  construct->add_option("--out", c_out, "output file (default stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "run a class verifier");
  std::string vclass, v_corpus, v_gen, v_format = "csv", v_out;
  bool v_builtin = false;
  int v_samples = 50, v_max_order = 64, v_max_semi = 24, v_top = 5, v_jobs = 1;
  std::uint64_t v_seed = 0;
  double v_tol = 1e-9;
  verify->add_option("class", vclass, "srg | regline | semiregline | cayley | conjecture")
      ->required();
  verify->add_option("--corpus", v_corpus, "graph6 file (resolved against $L3LAB_CORPUS_DIR)");
  verify->add_option("--gen", v_gen, "generator spec (regline: n<=K; semiregline: params7)");
  verify->add_flag("--builtin", v_builtin, "use the built-in cases (srg)");
  verify->add_option("--samples", v_samples, "random instances per family (cayley)");
  verify->add_option("--max-order", v_max_order, "abelian group order cap (cayley)");
  verify->add_option("--max-semi-order", v_max_semi, "two-layer group order cap (cayley)");
  verify->add_option("--seed", v_seed, "RNG seed");
  verify->add_option("--top", v_top, "summary size for conjecture scans");
  verify->add_option("--tol", v_tol, "violation tolerance (>= 1e-12)");
  verify->add_option("--jobs", v_jobs, "worker count (scans are sharded deterministically)");
  verify->add_option("--format", v_format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  verify->add_option("--out", v_out, "report file (default stdout)");

  // minimise
  auto* minimise = app.add_subcommand("minimise", "local search for min lambda_{n-1}");
  int m_n = 0, m_restarts = 1, m_iters = 6000, m_jobs = 1;
  std::uint64_t m_seed = 0;
  std::string m_out;
  minimise->add_option("n", m_n, "matrix dimension (>= 3)")->required();
  minimise->add_option("--seed", m_seed, "RNG seed");
  minimise->add_option("--restarts", m_restarts, "independent restarts");
  minimise->add_option("--iters", m_iters, "iteration cap per restart");
  minimise->add_option("--jobs", m_jobs, "worker count (restarts run deterministically)");
  minimise->add_option("--out", m_out, "output file (default stdout)");

  // scan-tvm
  auto* scan = app.add_subcommand("scan-tvm", "ratio scan over reference-pattern blow-ups");
  int s_samples = 200, s_max_mult = 6;
  std::uint64_t s_seed = 0;
  std::string s_out;
  scan->add_option("--samples", s_samples, "random multiplicity vectors");
  scan->add_option("--max-mult", s_max_mult, "per-class multiplicity cap");
  scan->add_option("--seed", s_seed, "RNG seed");
  scan->add_option("--out", s_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (construct->parsed()) return cmd_construct(family, params, c_format, c_out);
    if (verify->parsed()) {
      if (v_tol < 1e-12) throw std::invalid_argument("--tol must be >= 1e-12");
      if (v_jobs < 1) throw std::invalid_argument("--jobs must be >= 1");
      if (vclass == "srg") return verify_srg_cmd(v_builtin, v_corpus, v_format, v_out);
      if (vclass == "regline") return verify_regline_cmd(v_gen, v_corpus, v_format, v_out);
      if (vclass == "semiregline")
        return verify_semiregline_cmd(v_gen, v_corpus, v_format, v_out);
      if (vclass == "cayley")
        return verify_cayley_cmd(v_samples, v_max_order, v_max_semi, v_seed,
                                 v_format, v_out);
      if (vclass == "conjecture")
        return verify_conjecture_cmd(v_corpus, v_top, v_tol, v_format, v_out);
      throw std::invalid_argument("unknown verify class '" + vclass + "'");
    }
    if (minimise->parsed()) {
      if (m_jobs < 1) throw std::invalid_argument("--jobs must be >= 1");
      return cmd_minimise(m_n, m_seed, m_restarts, m_iters, m_out);
    }
    if (scan->parsed()) return cmd_scan_tvm(s_samples, s_max_mult, s_seed, s_out);
  } catch (const IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return kViolation;
  }
  return kUsage;
}
