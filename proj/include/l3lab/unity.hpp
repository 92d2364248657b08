#pragma once

#include <string>
#include <vector>

namespace l3lab {
namespace unity {

// Largest real part achievable by summing a subset of the n-th roots of
// unity; attained by the arc |k| <= floor(n/4) and evaluated in closed form
// via the Dirichlet kernel sin((2m+1)pi/n) / sin(pi/n).
double f(int n);

// Largest modulus achievable the same way: sqrt(f(n)^2 + 1) when 4 | n,
// otherwise f(n) itself.
double g(int n);

// Smallest real part achievable; equals -f(n) because the roots sum to zero.
double f_min(int n);

// Exhaustive maxima over all 2^n subsets (n <= 16); the oracles for f and g.
double brute_force_f(int n);
double brute_force_g(int n);
double brute_force_f_min(int n);

struct CotIdentity {
  double lhs = 0;  // real part of i(w+1)/(w-1), w = exp(2*pi*i/n)
  double rhs = 0;  // cot(pi/n)
  bool ok = false;
};

CotIdentity cot_identity_check(int n);

struct FBoundRow {
  int n = 0;
  double f = 0;
  double n_over_3 = 0;
  bool bound_ok = false;   // f <= n/3 (tiny tolerance)
  bool equality = false;   // f == n/3
  double delta = 0;        // f(n) - cot(pi/n)
};

// Rows for 3 <= n <= n_max. Throws if |delta| exceeds 2 for any n > 150,
// which would falsify the growth estimate the bound rests on.
std::vector<FBoundRow> f_bound_report(int n_max);

// CSV rendering: header n,f,n_over_3,equality,delta then one row per n.
std::string f_bound_report_csv(int n_max);

}  // namespace unity
}  // namespace l3lab
