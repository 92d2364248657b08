#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "l3lab/graphs.hpp"

namespace l3lab {

// One verified graph: its identity (graph6 or a construction tag), the
// third-largest adjacency eigenvalue, the ratio lambda3/n, class tags, and
// whether every applicable check passed.
struct VerdictRecord {
  std::string id;
  int n = 0;
  double lambda3 = 0.0;
  double ratio = 0.0;  // lambda3 / n of the measured graph
  std::vector<std::string> tags;
  bool ok = false;
};

// Strongly regular graphs: replays the case analysis (disconnected = equal
// cliques, complement disconnected = balanced complete multipartite,
// otherwise eigensolver) and requires lambda3 < n/3 + 1e-9.  Throws
// "not strongly regular" when classify() finds no SRG parameters.
VerdictRecord verify_srg(const Graph& g);

// Line graphs of regular graphs: checks the characteristic-polynomial
// relation chi_L(t) * (t+2)^max(0,n-q) == (t+2)^max(0,q-n) * chi_G(t-r+2)
// at relative coefficient tolerance 1e-5, then requires
// lambda3(L)/|V(L)| <= 1/3 + 1e-9, and < 4/n + 1e-9 once n >= 12.
VerdictRecord verify_regular_line_graph(const Graph& g);

// Line graphs of semiregular bipartite graphs: tags the n2-case of the proof
// (degree-sum shortcut for n2 >= 6, inequality gate for n2 in {4,5},
// structural trichotomy at n2 = 3, closed forms below) and requires
// lambda3(L)/|V(L)| <= 1/3 + 1e-9 by eigensolver.
VerdictRecord verify_semiregular_line_graph(const Graph& g);

struct ScanSummary {
  int scanned = 0;
  int failed_lines = 0;
  double max_ratio = 0.0;  // 0 when nothing was scanned
  std::string argmax_id;
  int near_third = 0;      // ratio > 1/3 - 1e-9
  int violations = 0;      // ratio > 1/3 + 1e-9 (would refute the conjecture)
  std::vector<VerdictRecord> top;  // top_k by ratio, input order on ties
};

struct ScanResult {
  std::vector<VerdictRecord> records;  // input order
  std::vector<std::string> errors;     // "line N: reason"; scan continues
  ScanSummary summary;
};

// Reads one graph6 graph per line and reports lambda3/n for each.
// Undecodable lines are collected with their line number; blank lines are
// skipped.  Output order follows input order.
ScanResult scan_corpus(std::istream& in, int top_k);

// Same, from a file; throws std::runtime_error when the file cannot be read.
ScanResult scan_corpus_file(const std::string& path, int top_k);

// Returns `path` if it exists; otherwise, for relative paths, retries under
// $L3LAB_CORPUS_DIR; returns the original path when neither resolves.
std::string resolve_corpus_path(const std::string& path);

// CSV rendering shared by the CLI: header "id,n,lambda3,ratio,tags,ok",
// tags joined with ';', numbers at 12 significant digits, ok as 1/0.
std::string verdict_csv_header();
std::string verdict_csv_row(const VerdictRecord& r);

}  // namespace l3lab
