#pragma once

#include <complex>
#include <string>
#include <vector>

#include "l3lab/graphs.hpp"
#include "l3lab/util.hpp"

namespace l3lab {

// Direct product of cyclic groups Z_{d1} x ... x Z_{dm}. Elements are indexed
// 0..order-1 in mixed radix; tuples are the coordinate form.
class FiniteAbelianGroup {
 public:
  explicit FiniteAbelianGroup(std::vector<int> factors);

  int order() const { return order_; }
  const std::vector<int>& factors() const { return factors_; }
  int add(int a, int b) const;
  int neg(int a) const;
  std::vector<int> tuple(int a) const;
  int index(const std::vector<int>& t) const;  // coordinates reduced mod d_j
  // chi_t(a) = exp(2*pi*i * sum_j t_j a_j / d_j)
  std::complex<double> character(int t, int a) const;

 private:
  std::vector<int> factors_;
  int order_ = 1;
};

// Throws unless the set omits the identity and is closed under inverses.
void check_symmetric_connection_set(const FiniteAbelianGroup& g,
                                    const std::vector<int>& s, const char* role);

Graph cayley_graph(const FiniteAbelianGroup& g, const std::vector<int>& s);

// One eigenvalue per character, descending. The imaginary residue of each
// character sum must stay below 1e-9 or a runtime_error flags the bug.
std::vector<double> cayley_spectrum(const FiniteAbelianGroup& g,
                                    const std::vector<int>& s);

struct Lambda3Verdict {
  double lambda3 = 0;
  int n = 0;
  bool ok = false;  // lambda3 <= n/3 + 1e-9
};

Lambda3Verdict verify_cayley_lambda3(const FiniteAbelianGroup& g,
                                     const std::vector<int>& s);

// Two-layer construction on 2|Γ| vertices: layer 0 wired by R, layer 1 by S,
// cross edges (h,0) ~ (g,1) whenever g - h lies in T (T need not be
// inverse-closed).
Graph semi_cayley_graph(const FiniteAbelianGroup& g, const std::vector<int>& r,
                        const std::vector<int>& s, const std::vector<int>& t);

// Per character: (L_R + L_S +- sqrt((L_R - L_S)^2 + 4|L_T|^2)) / 2.
std::vector<double> semi_cayley_spectrum(const FiniteAbelianGroup& g,
                                         const std::vector<int>& r,
                                         const std::vector<int>& s,
                                         const std::vector<int>& t);

// Cayley graph of the dihedral group of order 2n with connection set
// {r^i : i in rotation_part} u {s r^i : i in reflection_part}. Built from the
// group multiplication table and cross-checked spectrally against the
// two-layer encoding above; a mismatch throws.
Graph dihedral_cayley(int n, const std::vector<int>& rotation_part,
                      const std::vector<int>& reflection_part);

// Same for the dicyclic group of order 4n over Z_{2n}. The reflection part
// must satisfy B = B + n (mod 2n) so the connection set is inverse-closed.
Graph dicyclic_cayley(int n, const std::vector<int>& rotation_part,
                      const std::vector<int>& reflection_part);

// Scaling argument: blowing a vertex-transitive G up to group_order vertices
// by independent sets leaves lambda3/n unchanged when lambda3 >= 0 (and the
// target bound holds vacuously when lambda3 < 0).
bool vertex_transitive_reduction_check(const Graph& g, int group_order);

// Quadratic residues mod a prime q = 1 (mod 4); the Paley connection set.
std::vector<int> paley_residues(int q);

// Each inverse pair {x, -x} joins with probability 1/2; identity never.
std::vector<int> random_symmetric_connection_set(const FiniteAbelianGroup& g, Rng& rng);
// Arbitrary subset, each element with probability 1/2 (for cross sets).
std::vector<int> random_subset(const FiniteAbelianGroup& g, Rng& rng);

struct GroupSpec {
  enum class Kind { abelian, dihedral, dicyclic };
  Kind kind = Kind::abelian;
  std::vector<int> factors;  // abelian only
  int n = 0;                 // dihedral: order 2n; dicyclic: order 4n
};

// "Z6", "Z2xZ4", "D10" (dihedral of order 10), "Q12" (dicyclic of order 12).
GroupSpec parse_group_spec(const std::string& text);

// "1,5" over a rank-1 group, or "(1,0),(0,1)" over higher rank; "" is empty.
std::vector<int> parse_elements(const FiniteAbelianGroup& g, const std::string& text);

}  // namespace l3lab
