#pragma once

#include <vector>

#include "l3lab/graphs.hpp"
#include "l3lab/linalg.hpp"

namespace l3lab {

// H family: six cliques of sizes a,b,a,b,a,b laid around a hexagon, adjacent
// cliques fully joined. Vertices are numbered clique by clique in cycle order
// so isomorphism tests are reproducible.
Graph build_H(int a, int b);

// Spectrum of A(H_{a,b}) + I as a descending multiset:
//   (s + d)/2, s, s, 0^(3s-4), (s - d)/2   with s = a+b, d = sqrt(a^2+14ab+b^2).
// The s = 1 graph is three isolated vertices, handled directly.
std::vector<double> H_spectrum_closed_form(int a, int b);

// Symmetrised quotient of the six-clique partition of A(H_{a,b}) + I:
// entry sqrt(s_i s_j) when classes i, j coincide or are hexagon-adjacent.
// Shares its nonzero spectrum with A + I.
SymMatrix h_quotient_matrix(int a, int b);

// Circulant on Z_n connecting +-1 .. +-floor(n/4).
Graph build_pivalous(int n);

// Eigenvalues of the pivalous circulant for 4 | n, descending. With loops,
// the t = 0 value is n/2 + 1 and the others follow the residue of t mod 4:
// +1, +cot(t*pi/n), -1, -cot(t*pi/n). Without loops every value drops by 1.
std::vector<double> pivalous_spectrum_closed_form(int n, bool with_loops);

// The fixed 11x11 0/1 pattern whose vertex multiplications realise the
// complements of the H family. Row/column 11 is identically zero.
SymMatrix T_matrix();

struct SrgSpectrum {
  double r = 0;       // top eigenvalue (the degree)
  double lambda = 0;  // larger root
  double mu = 0;      // smaller root
  int k = 0;          // multiplicity of lambda
  int l = 0;          // multiplicity of mu
  bool feasible = false;  // n <= min{k(k+3)/2, l(l+3)/2}
};

SrgSpectrum srg_spectrum(const SrgParams& p);

// Six eigenvalues of the hexagonal morphing graphon at parameter p, descending:
// (p+2)/6, (1 + sqrt(p^2-p+1))/6 twice, (1 - sqrt(p^2-p+1))/6 twice, -p/6.
std::vector<double> morph_graphon_spectrum(double p);

// The 6x6 step-function kernel behind that spectrum: (1/6)(I + W) where W has
// weight 1 on the matched hexagon edges and weight p on the alternating ones.
SymMatrix morph_graphon_block(double p);

}  // namespace l3lab
