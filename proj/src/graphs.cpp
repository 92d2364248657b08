#include "l3lab/graphs.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace l3lab {

Graph::Graph(int n, bool loops) : n_(n), loops_(loops) {
  if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
  a_.assign(static_cast<std::size_t>(n) * n, 0);
  if (loops_)
    for (int i = 0; i < n_; ++i) a_[static_cast<std::size_t>(i) * n_ + i] = 1;
}

Graph Graph::from_adjacency(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  Graph g(n);
  int diag = -1;
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n)
      throw std::invalid_argument("Graph: ragged adjacency rows");
    for (int j = 0; j < n; ++j) {
      const int v = rows[i][j];
      if (v != 0 && v != 1)
        throw std::invalid_argument("Graph: adjacency entries must be 0 or 1");
      if (i == j) {
        if (diag == -1) diag = v;
        if (v != diag)
          throw std::invalid_argument("Graph: diagonal must be uniformly 0 or 1");
      } else if (rows[j][i] != v) {
        throw std::invalid_argument("Graph: adjacency not symmetric");
      }
    }
  }
  g.loops_ = (diag == 1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      g.a_[static_cast<std::size_t>(i) * n + j] =
          (i == j) ? static_cast<std::uint8_t>(g.loops_ ? 1 : 0)
                   : static_cast<std::uint8_t>(rows[i][j]);
  return g;
}

Graph Graph::from_symmatrix(const SymMatrix& m) {
  std::vector<std::vector<int>> rows(m.n(), std::vector<int>(m.n(), 0));
  for (int i = 0; i < m.n(); ++i)
    for (int j = 0; j < m.n(); ++j) {
      const double v = m(i, j);
      if (v != 0.0 && v != 1.0)
        throw std::invalid_argument("Graph: matrix entries must be exactly 0 or 1");
      rows[i][j] = static_cast<int>(v);
    }
  return from_adjacency(rows);
}

void Graph::check_pair(int i, int j) const {
  if (i < 0 || i >= n_ || j < 0 || j >= n_)
    throw std::out_of_range("Graph: vertex index out of range");
  if (i == j) throw std::invalid_argument("Graph: self-pairs are controlled by the loops flag");
}

bool Graph::edge(int i, int j) const {
  check_pair(i, j);
  return a_[static_cast<std::size_t>(i) * n_ + j] != 0;
}

void Graph::add_edge(int i, int j) {
  check_pair(i, j);
  a_[static_cast<std::size_t>(i) * n_ + j] = 1;
  a_[static_cast<std::size_t>(j) * n_ + i] = 1;
}

void Graph::remove_edge(int i, int j) {
  check_pair(i, j);
  a_[static_cast<std::size_t>(i) * n_ + j] = 0;
  a_[static_cast<std::size_t>(j) * n_ + i] = 0;
}

void Graph::set_loops(bool on) {
  loops_ = on;
  for (int i = 0; i < n_; ++i)
    a_[static_cast<std::size_t>(i) * n_ + i] = on ? 1 : 0;
}

int Graph::degree(int i) const {
  if (i < 0 || i >= n_) throw std::out_of_range("Graph: vertex index out of range");
  int d = 0;
  for (int j = 0; j < n_; ++j)
    if (j != i && a_[static_cast<std::size_t>(i) * n_ + j]) ++d;
  return d;
}

int Graph::edge_count() const {
  int q = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (a_[static_cast<std::size_t>(i) * n_ + j]) ++q;
  return q;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (a_[static_cast<std::size_t>(i) * n_ + j]) e.emplace_back(i, j);
  return e;
}

SymMatrix Graph::adjacency() const {
  SymMatrix m(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = i; j < n_; ++j)
      m.set(i, j, static_cast<double>(a_[static_cast<std::size_t>(i) * n_ + j]));
  return m;
}

namespace {

void require_loops_off(const Graph& g, const char* op) {
  if (g.loops())
    throw std::invalid_argument(std::string(op) + ": requires a loop-free graph");
}

}  // namespace

Graph complement(const Graph& g) {
  require_loops_off(g, "complement");
  Graph c(g.n());
  for (int i = 0; i < g.n(); ++i)
    for (int j = i + 1; j < g.n(); ++j)
      if (!g.edge(i, j)) c.add_edge(i, j);
  return c;
}

Graph closed_vertex_multiplication(const Graph& g, const std::vector<int>& sizes) {
  require_loops_off(g, "closed_vertex_multiplication");
  if (static_cast<int>(sizes.size()) != g.n())
    throw std::invalid_argument(
        "closed_vertex_multiplication: sizes length must equal vertex count");
  for (int s : sizes)
    if (s < 0)
      throw std::invalid_argument("closed_vertex_multiplication: negative size");
  std::vector<int> base(g.n() + 1, 0);
  for (int i = 0; i < g.n(); ++i) base[i + 1] = base[i] + sizes[i];
  Graph out(base[g.n()]);
  for (int i = 0; i < g.n(); ++i) {
    for (int u = base[i]; u < base[i + 1]; ++u)
      for (int v = u + 1; v < base[i + 1]; ++v) out.add_edge(u, v);  // clique block
    for (int j = i + 1; j < g.n(); ++j) {
      if (!g.edge(i, j)) continue;
      for (int u = base[i]; u < base[i + 1]; ++u)
        for (int v = base[j]; v < base[j + 1]; ++v) out.add_edge(u, v);
    }
  }
  return out;
}

Graph open_vertex_multiplication(const Graph& g, const std::vector<int>& sizes) {
  require_loops_off(g, "open_vertex_multiplication");
  if (static_cast<int>(sizes.size()) != g.n())
    throw std::invalid_argument(
        "open_vertex_multiplication: sizes length must equal vertex count");
  for (int s : sizes)
    if (s < 0) throw std::invalid_argument("open_vertex_multiplication: negative size");
  std::vector<int> base(g.n() + 1, 0);
  for (int i = 0; i < g.n(); ++i) base[i + 1] = base[i] + sizes[i];
  Graph out(base[g.n()]);
  for (int i = 0; i < g.n(); ++i)
    for (int j = i + 1; j < g.n(); ++j) {
      if (!g.edge(i, j)) continue;
      for (int u = base[i]; u < base[i + 1]; ++u)
        for (int v = base[j]; v < base[j + 1]; ++v) out.add_edge(u, v);
    }
  return out;
}

Graph closed_blowup(const Graph& g, int t) {
  require_loops_off(g, "closed_blowup");
  if (t < 1) throw std::invalid_argument("closed_blowup: t must be >= 1");
  return closed_vertex_multiplication(g, std::vector<int>(g.n(), t));
}

Graph lexicographic_empty_product(const Graph& g, int m) {
  require_loops_off(g, "lexicographic_empty_product");
  if (m < 1) throw std::invalid_argument("lexicographic_empty_product: m must be >= 1");
  return open_vertex_multiplication(g, std::vector<int>(g.n(), m));
}

Graph line_graph(const Graph& g) {
  require_loops_off(g, "line_graph");
  const auto e = g.edges();
  // An edgeless graph has an empty line graph; callers branch on n() == 0.
  Graph out(static_cast<int>(e.size()));
  for (std::size_t x = 0; x < e.size(); ++x)
    for (std::size_t y = x + 1; y < e.size(); ++y) {
      const bool share = e[x].first == e[y].first || e[x].first == e[y].second ||
                         e[x].second == e[y].first || e[x].second == e[y].second;
      if (share) out.add_edge(static_cast<int>(x), static_cast<int>(y));
    }
  return out;
}

RectMatrix incidence_matrix(const Graph& g) {
  require_loops_off(g, "incidence_matrix");
  const auto e = g.edges();
  RectMatrix b(g.n(), static_cast<int>(e.size()));
  for (std::size_t c = 0; c < e.size(); ++c) {
    b.at(e[c].first, static_cast<int>(c)) = 1.0;
    b.at(e[c].second, static_cast<int>(c)) = 1.0;
  }
  return b;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  require_loops_off(g, "cartesian_product");
  require_loops_off(h, "cartesian_product");
  const int n2 = h.n();
  Graph out(g.n() * n2);
  auto id = [n2](int u, int v) { return u * n2 + v; };
  for (int u = 0; u < g.n(); ++u)
    for (int v = 0; v < h.n(); ++v) {
      for (int w = v + 1; w < h.n(); ++w)
        if (h.edge(v, w)) out.add_edge(id(u, v), id(u, w));
      for (int w = u + 1; w < g.n(); ++w)
        if (g.edge(u, w)) out.add_edge(id(u, v), id(w, v));
    }
  return out;
}

// ---------------------------------------------------------------------------
// graph6 codec (n <= 258047; upper triangle column-major, 6 bits per byte).
// ---------------------------------------------------------------------------

Graph graph6_decode(const std::string& line) {
  std::string s = line;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  const std::string header = ">>graph6<<";
  if (s.rfind(header, 0) == 0) s = s.substr(header.size());
  if (s.empty()) throw std::invalid_argument("graph6_decode: empty line");

  std::size_t pos = 0;
  long long n;
  if (s[pos] == '~') {
    if (s.size() >= 2 && s[1] == '~')
      throw std::invalid_argument("graph6_decode: graphs beyond 258047 vertices unsupported");
    if (s.size() < 4) throw std::invalid_argument("graph6_decode: truncated size field");
    long long v = 0;
    for (int k = 1; k <= 3; ++k) {
      const unsigned char c = static_cast<unsigned char>(s[k]);
      if (c < 63 || c > 126)
        throw std::invalid_argument("graph6_decode: malformed character in size field");
      v = (v << 6) | (c - 63);
    }
    n = v;
    pos = 4;
  } else {
    const unsigned char c = static_cast<unsigned char>(s[0]);
    if (c < 63 || c > 126)
      throw std::invalid_argument("graph6_decode: malformed character in size field");
    n = c - 63;
    pos = 1;
  }

  const long long nbits = n * (n - 1) / 2;
  const std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
  if (s.size() - pos < nbytes)
    throw std::invalid_argument("graph6_decode: truncated bit field");
  if (s.size() - pos > nbytes)
    throw std::invalid_argument("graph6_decode: trailing characters after bit field");

  Graph g(static_cast<int>(n));
  long long bit = 0;
  for (std::size_t k = 0; k < nbytes; ++k) {
    const unsigned char c = static_cast<unsigned char>(s[pos + k]);
    if (c < 63 || c > 126)
      throw std::invalid_argument("graph6_decode: malformed character in bit field");
    const int group = c - 63;
    for (int b = 5; b >= 0; --b, ++bit) {
      const int v = (group >> b) & 1;
      if (bit >= nbits) {
        if (v != 0)
          throw std::invalid_argument("graph6_decode: nonzero padding bits");
        continue;
      }
      if (v) {
        // bit index -> (i, j) with j the column, i < j, column-major order
        long long t = bit;
        long long j = 1;
        while (t >= j) {
          t -= j;
          ++j;
        }
        g.add_edge(static_cast<int>(t), static_cast<int>(j));
      }
    }
  }
  return g;
}

std::string graph6_encode(const Graph& g) {
  require_loops_off(g, "graph6_encode");
  const long long n = g.n();
  if (n > 258047)
    throw std::invalid_argument("graph6_encode: graphs beyond 258047 vertices unsupported");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  }
  int group = 0, filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | (g.edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(63 + group));
        group = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>(63 + (group << (6 - filled))));
  return out;
}

// ---------------------------------------------------------------------------
// Canonical key: colour refinement to stable classes, then a minimum
// adjacency string over class-respecting orderings. Twin vertices (equal
// neighbourhoods) are interchangeable by an automorphism, which keeps the
// search linear on cliques, empty graphs and other twin-heavy inputs.
// ---------------------------------------------------------------------------

namespace {

std::vector<int> refine_colors(const Graph& g) {
  const int n = g.n();
  std::vector<int> color(n, 0);
  {
    std::vector<int> degs;
    degs.reserve(n);
    for (int i = 0; i < n; ++i) degs.push_back(g.degree(i));
    std::vector<int> sorted = degs;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int i = 0; i < n; ++i)
      color[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), degs[i]) -
                                  sorted.begin());
  }
  for (int round = 0; round < n; ++round) {
    std::map<std::vector<int>, int> ids;
    std::vector<std::vector<int>> sig(n);
    for (int i = 0; i < n; ++i) {
      std::vector<int> nb;
      for (int j = 0; j < n; ++j)
        if (j != i && g.edge(i, j)) nb.push_back(color[j]);
      std::sort(nb.begin(), nb.end());
      sig[i].push_back(color[i]);
      sig[i].insert(sig[i].end(), nb.begin(), nb.end());
      ids[sig[i]] = 0;
    }
    int next = 0;
    for (auto& kv : ids) kv.second = next++;  // map order is the canonical order
    std::vector<int> fresh(n);
    for (int i = 0; i < n; ++i) fresh[i] = ids[sig[i]];
    if (fresh == color) break;
    color = std::move(fresh);
  }
  return color;
}

struct KeySearch {
  const Graph& g;
  int n;
  std::vector<int> slot_class;   // required colour class per position
  std::vector<int> color;
  std::vector<char> placed;
  std::vector<int> order;
  std::string cur;   // lower-triangle bits of the placed prefix
  std::string best;  // best complete string so far
  bool have_best = false;

  explicit KeySearch(const Graph& graph) : g(graph), n(graph.n()) {}

  // Swapping u and v is an automorphism when their neighbourhoods outside
  // the pair agree; the (u,v) pair itself maps to itself either way.
  bool twins(int u, int v) const {
    for (int w = 0; w < n; ++w) {
      if (w == u || w == v) continue;
      if (g.edge(u, w) != g.edge(v, w)) return false;
    }
    return true;
  }

  void run(int level) {
    if (level == n) {
      if (!have_best || cur < best) {
        best = cur;
        have_best = true;
      }
      return;
    }
    const int need = slot_class[level];
    std::vector<int> cand;
    std::vector<std::string> pat;
    for (int v = 0; v < n; ++v) {
      if (placed[v] || color[v] != need) continue;
      std::string p(level, '0');
      for (int k = 0; k < level; ++k)
        if (g.edge(order[k], v)) p[k] = '1';
      cand.push_back(v);
      pat.push_back(std::move(p));
    }
    std::string mn = pat[0];
    for (const auto& p : pat)
      if (p < mn) mn = p;
    // Prefix pruning against the best complete string.
    if (have_best) {
      const std::string probe = cur + mn;
      if (best.compare(0, probe.size(), probe) < 0) return;
    }
    std::vector<int> keep;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      if (pat[i] != mn) continue;
      bool dup = false;
      for (int u : keep)
        if (twins(u, cand[i])) {
          dup = true;
          break;
        }
      if (!dup) keep.push_back(cand[i]);
    }
    const std::size_t save = cur.size();
    cur += mn;
    for (int v : keep) {
      placed[v] = 1;
      order.push_back(v);
      run(level + 1);
      order.pop_back();
      placed[v] = 0;
    }
    cur.resize(save);
  }
};

}  // namespace

std::string canonical_key(const Graph& g) {
  const int n = g.n();
  std::string head = std::to_string(n) + (g.loops() ? "L:" : ":");
  if (n == 0) return head;
  KeySearch ks(g);
  ks.color = refine_colors(g);
  ks.placed.assign(n, 0);
  // Class sizes fix which colour occupies which slot range.
  std::vector<int> count(*std::max_element(ks.color.begin(), ks.color.end()) + 1, 0);
  for (int c : ks.color) ++count[c];
  ks.slot_class.reserve(n);
  for (int c = 0; c < static_cast<int>(count.size()); ++c)
    for (int k = 0; k < count[c]; ++k) ks.slot_class.push_back(c);
  ks.run(0);
  // Record class sizes too so distinct colourings can't collide.
  for (int c = 0; c < static_cast<int>(count.size()); ++c)
    head += std::to_string(count[c]) + ",";
  return head + "|" + ks.best;
}

// ---------------------------------------------------------------------------
// Regular-graph enumeration: fix vertex 0's neighbourhood to {1..r}, backtrack
// over the remaining pairs with degree pruning, then reject isomorphs.
// ---------------------------------------------------------------------------

namespace {

struct RegularSearch {
  int n, r;
  std::vector<std::vector<std::uint8_t>> adj;
  std::vector<int> deg;
  std::vector<Graph>* out;
  std::set<std::string>* seen;
  long long nodes = 0;
  long long budget;

  void emit() {
    Graph g(n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (adj[i][j]) g.add_edge(i, j);
    const std::string key = canonical_key(g);
    if (seen->insert(key).second) out->push_back(g);
  }

  // Pairs are decided row by row; when row i closes, deg(i) must equal r.
  void rec(int i, int j) {
    if (++nodes > budget)
      throw std::runtime_error(
          "enumerate_regular_graphs: search budget exhausted (n >= 9 is best-effort)");
    if (i >= n - 1) {
      if (deg[n - 1] == r) emit();
      return;
    }
    if (j >= n) {
      if (deg[i] == r)
        rec(i + 1, i + 2);
      return;
    }
    const int remaining_i = n - j;  // undecided pairs still touching i
    if (deg[i] + remaining_i < r) return;
    // Option: leave (i, j) absent.
    if (deg[i] + remaining_i - 1 >= r) rec(i, j + 1);
    // Option: add the edge.
    if (deg[i] < r && deg[j] < r) {
      adj[i][j] = adj[j][i] = 1;
      ++deg[i];
      ++deg[j];
      rec(i, j + 1);
      adj[i][j] = adj[j][i] = 0;
      --deg[i];
      --deg[j];
    }
  }
};

}  // namespace

std::vector<Graph> enumerate_regular_graphs(int n, int r) {
  if (n < 1 || n > 10)
    throw std::invalid_argument("enumerate_regular_graphs: n must be in [1, 10]");
  if (r < 0 || r >= n)
    throw std::invalid_argument("enumerate_regular_graphs: degree must satisfy 0 <= r < n");
  if ((static_cast<long long>(n) * r) % 2 != 0)
    throw std::invalid_argument("enumerate_regular_graphs: n*r must be even");

  if (r == 0) return {empty_graph(n)};
  // Complement halves the worst-case degree; regular graphs are closed
  // under it and isomorphism is preserved.
  if (2 * r > n - 1) {
    auto low = enumerate_regular_graphs(n, n - 1 - r);
    std::vector<Graph> res;
    res.reserve(low.size());
    for (const auto& g : low) res.push_back(complement(g));
    return res;
  }

  RegularSearch s;
  s.n = n;
  s.r = r;
  s.adj.assign(n, std::vector<std::uint8_t>(n, 0));
  s.deg.assign(n, 0);
  std::vector<Graph> out;
  std::set<std::string> seen;
  s.out = &out;
  s.seen = &seen;
  s.budget = (n <= 8) ? (1LL << 62) : 200'000'000LL;
  for (int j = 1; j <= r; ++j) {
    s.adj[0][j] = s.adj[j][0] = 1;
    ++s.deg[0];
    ++s.deg[j];
  }
  s.rec(1, 2);
  return out;
}

// ---------------------------------------------------------------------------
// Semiregular bipartite enumeration: rows of the n1 x n2 biadjacency matrix in
// non-increasing bitmask order (kills most row-permutation redundancy), column
// sums tracked exactly, isomorph rejection on the assembled graph.
// ---------------------------------------------------------------------------

namespace {

struct BipartiteSearch {
  int n1, n2, r1, r2;
  std::vector<int> rowmask;
  std::vector<int> colsum;
  std::vector<int> row_choices;  // all r1-subsets of columns as bitmasks, descending
  std::vector<Graph>* out;
  std::set<std::string>* seen;

  void emit() {
    Graph g(n1 + n2);
    for (int i = 0; i < n1; ++i)
      for (int j = 0; j < n2; ++j)
        if (rowmask[i] & (1 << j)) g.add_edge(i, n1 + j);
    const std::string key = canonical_key(g);
    if (seen->insert(key).second) out->push_back(g);
  }

  void rec(int row, int max_choice_idx) {
    if (row == n1) {
      for (int j = 0; j < n2; ++j)
        if (colsum[j] != r2) return;
      emit();
      return;
    }
    const int rows_left = n1 - row;
    for (int ci = max_choice_idx; ci < static_cast<int>(row_choices.size()); ++ci) {
      const int mask = row_choices[ci];
      bool ok = true;
      for (int j = 0; j < n2 && ok; ++j) {
        const int inc = (mask >> j) & 1;
        if (colsum[j] + inc > r2) ok = false;
        // Even if every remaining row hits column j, can it still be filled?
        if (colsum[j] + inc + (rows_left - 1) < r2) ok = false;
      }
      if (!ok) continue;
      rowmask[row] = mask;
      for (int j = 0; j < n2; ++j) colsum[j] += (mask >> j) & 1;
      rec(row + 1, ci);
      for (int j = 0; j < n2; ++j) colsum[j] -= (mask >> j) & 1;
      rowmask[row] = 0;
    }
  }
};

}  // namespace

std::vector<Graph> enumerate_semiregular_bipartite(int n1, int n2, int r1, int r2) {
  if (n1 < 1 || n2 < 1)
    throw std::invalid_argument("enumerate_semiregular_bipartite: part sizes must be >= 1");
  if (n1 < n2)
    throw std::invalid_argument("enumerate_semiregular_bipartite: requires n1 >= n2");
  if (n2 > 20)
    throw std::invalid_argument("enumerate_semiregular_bipartite: n2 too large");
  if (r1 < 0 || r2 < 0 || r1 > n2 || r2 > n1) return {};
  if (static_cast<long long>(n1) * r1 != static_cast<long long>(n2) * r2)
    throw std::invalid_argument("enumerate_semiregular_bipartite: n1*r1 must equal n2*r2");

  BipartiteSearch s;
  s.n1 = n1;
  s.n2 = n2;
  s.r1 = r1;
  s.r2 = r2;
  s.rowmask.assign(n1, 0);
  s.colsum.assign(n2, 0);
  for (int mask = (1 << n2) - 1; mask >= 0; --mask)
    if (__builtin_popcount(static_cast<unsigned>(mask)) == r1)
      s.row_choices.push_back(mask);
  std::vector<Graph> out;
  std::set<std::string> seen;
  s.out = &out;
  s.seen = &seen;
  s.rec(0, 0);
  return out;
}

// ---------------------------------------------------------------------------
// classify
// ---------------------------------------------------------------------------

namespace {

std::optional<SrgParams> detect_srg(const Graph& g) {
  const int n = g.n();
  if (n < 2) return std::nullopt;
  const int r = g.degree(0);
  for (int i = 1; i < n; ++i)
    if (g.degree(i) != r) return std::nullopt;
  const int q = g.edge_count();
  if (q == 0 || q == n * (n - 1) / 2) return std::nullopt;  // e or f undefined
  int e = -1, f = -1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int common = 0;
      for (int w = 0; w < n; ++w)
        if (w != i && w != j && g.edge(i, w) && g.edge(j, w)) ++common;
      if (g.edge(i, j)) {
        if (e == -1) e = common;
        if (common != e) return std::nullopt;
      } else {
        if (f == -1) f = common;
        if (common != f) return std::nullopt;
      }
    }
  return SrgParams{n, r, e, f};
}

std::optional<BipartiteParams> detect_semiregular(const Graph& g) {
  const int n = g.n();
  if (n == 0) return std::nullopt;
  for (int i = 0; i < n; ++i)
    if (g.degree(i) == 0) return std::nullopt;  // isolated vertices break part degrees

  // 2-colour each component; record (size, degree) of both sides.
  std::vector<int> side(n, -1), comp(n, -1);
  struct CompInfo {
    int sizeA = 0, sizeB = 0, dA = -1, dB = -1;
  };
  std::vector<CompInfo> comps;
  for (int s = 0; s < n; ++s) {
    if (side[s] != -1) continue;
    CompInfo info;
    std::vector<int> stack{s};
    side[s] = 0;
    comp[s] = static_cast<int>(comps.size());
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      const int d = g.degree(u);
      int& part_deg = (side[u] == 0) ? info.dA : info.dB;
      int& part_size = (side[u] == 0) ? info.sizeA : info.sizeB;
      if (part_deg == -1) part_deg = d;
      if (part_deg != d) return std::nullopt;
      ++part_size;
      for (int v = 0; v < n; ++v) {
        if (v == u || !g.edge(u, v)) continue;
        if (side[v] == -1) {
          side[v] = 1 - side[u];
          comp[v] = comp[u];
          stack.push_back(v);
        } else if (side[v] == side[u]) {
          return std::nullopt;  // odd cycle
        }
      }
    }
    comps.push_back(info);
  }

  // Every component offers its (dA, dB) in either orientation; all must agree
  // on one global pair.
  auto try_global = [&](int r1, int r2) -> std::optional<BipartiteParams> {
    int n1 = 0, n2 = 0;
    for (const auto& c : comps) {
      if (c.dA == r1 && c.dB == r2) {
        n1 += c.sizeA;
        n2 += c.sizeB;
      } else if (c.dA == r2 && c.dB == r1) {
        n1 += c.sizeB;
        n2 += c.sizeA;
      } else {
        return std::nullopt;
      }
    }
    if (n1 < n2) {
      std::swap(n1, n2);
      std::swap(r1, r2);
    }
    return BipartiteParams{n1, n2, r1, r2};
  };
  if (auto p = try_global(comps[0].dA, comps[0].dB)) return p;
  if (comps[0].dA != comps[0].dB)
    if (auto p = try_global(comps[0].dB, comps[0].dA)) return p;
  return std::nullopt;
}

}  // namespace

Classification classify(const Graph& g) {
  require_loops_off(g, "classify");
  Classification c;
  if (g.n() > 0) {
    const int r = g.degree(0);
    bool reg = true;
    for (int i = 1; i < g.n(); ++i)
      if (g.degree(i) != r) {
        reg = false;
        break;
      }
    if (reg) c.regular = r;
  }
  c.srg = detect_srg(g);
  c.semiregular_bipartite = detect_semiregular(g);
  return c;
}

// ---------------------------------------------------------------------------
// Stock graphs
// ---------------------------------------------------------------------------

Graph empty_graph(int n) { return Graph(n); }

Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle_graph: needs n >= 3");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path_graph: needs n >= 1");
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph complete_bipartite(int p, int q) {
  if (p < 0 || q < 0) throw std::invalid_argument("complete_bipartite: negative part");
  Graph g(p + q);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) g.add_edge(i, p + j);
  return g;
}

Graph petersen_graph() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer pentagon
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    g.add_edge(i, 5 + i);                // spokes
  }
  return g;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  if (g.loops() != h.loops())
    throw std::invalid_argument("disjoint_union: loop flags differ");
  Graph out(g.n() + h.n(), g.loops());
  for (const auto& [i, j] : g.edges()) out.add_edge(i, j);
  for (const auto& [i, j] : h.edges()) out.add_edge(g.n() + i, g.n() + j);
  return out;
}

Spectrum graph_spectrum(const Graph& g, bool want_vectors) {
  return eigen_decompose(g.adjacency(), want_vectors);
}

}  // namespace l3lab
