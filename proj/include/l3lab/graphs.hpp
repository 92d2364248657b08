#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "l3lab/linalg.hpp"

namespace l3lab {

// Simple undirected graph. Self-loops are all-or-none: either every vertex
// carries one (loops() == true) or none does. Most operators require loops
// off; the loop variant only exists because the spectral shift A -> A + I is
// sometimes realised as "add a loop everywhere".
class Graph {
 public:
  explicit Graph(int n = 0, bool loops = false);

  // rows must be a square 0/1 symmetric matrix whose diagonal is uniformly
  // 0 or uniformly 1; the diagonal determines the loops flag.
  static Graph from_adjacency(const std::vector<std::vector<int>>& rows);
  // Same validation, starting from a dense symmetric matrix.
  static Graph from_symmatrix(const SymMatrix& m);

  int n() const { return n_; }
  bool loops() const { return loops_; }
  bool edge(int i, int j) const;
  void add_edge(int i, int j);
  void remove_edge(int i, int j);
  void set_loops(bool on);
  int degree(int i) const;  // loop not counted
  int edge_count() const;   // loops not counted
  std::vector<std::pair<int, int>> edges() const;  // i < j, lexicographic
  SymMatrix adjacency() const;  // diagonal reflects the loops flag

  bool operator==(const Graph& o) const {
    return n_ == o.n_ && loops_ == o.loops_ && a_ == o.a_;
  }

 private:
  void check_pair(int i, int j) const;
  int n_ = 0;
  bool loops_ = false;
  std::vector<std::uint8_t> a_;  // n*n row-major, diagonal mirrors loops_
};

struct SrgParams {
  int n = 0, r = 0, e = 0, f = 0;
};

struct BipartiteParams {
  int n1 = 0, n2 = 0, r1 = 0, r2 = 0;  // n1 >= n2, n1*r1 == n2*r2
};

struct Classification {
  std::optional<SrgParams> srg;
  std::optional<BipartiteParams> semiregular_bipartite;
  std::optional<int> regular;
};

struct RectMatrix {
  int rows = 0, cols = 0;
  std::vector<double> a;
  RectMatrix() = default;
  RectMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0.0) {}
  double& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
  double at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

Graph complement(const Graph& g);
Graph closed_blowup(const Graph& g, int t);
Graph closed_vertex_multiplication(const Graph& g, const std::vector<int>& sizes);
Graph open_vertex_multiplication(const Graph& g, const std::vector<int>& sizes);
Graph line_graph(const Graph& g);
RectMatrix incidence_matrix(const Graph& g);
Graph lexicographic_empty_product(const Graph& g, int m);
Graph cartesian_product(const Graph& g, const Graph& h);

Graph graph6_decode(const std::string& line);
std::string graph6_encode(const Graph& g);

// All r-regular graphs on n vertices up to isomorphism (connected or not),
// each exactly once. Complete for n <= 8; for n in {9, 10} the search runs
// under a node budget and throws std::runtime_error when it is exhausted.
std::vector<Graph> enumerate_regular_graphs(int n, int r);

// All bipartite graphs with fixed part sizes (n1, n2) in which every part-1
// vertex has degree r1 and every part-2 vertex degree r2, up to isomorphism.
std::vector<Graph> enumerate_semiregular_bipartite(int n1, int n2, int r1, int r2);

Classification classify(const Graph& g);

// Isomorphism-complete key: equal strings iff isomorphic graphs. Intended
// for n <= 10 or so; cost grows quickly past that.
std::string canonical_key(const Graph& g);

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_bipartite(int p, int q);
Graph petersen_graph();
Graph disjoint_union(const Graph& g, const Graph& h);

Spectrum graph_spectrum(const Graph& g, bool want_vectors = false);

}  // namespace l3lab
