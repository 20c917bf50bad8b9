#ifndef POSBASIS_BERNSTEIN_HPP
#define POSBASIS_BERNSTEIN_HPP

#include <vector>

#include "posbasis/polynomial.hpp"

namespace posbasis {

inline constexpr int kDefaultLorentzCap = 256;

// (1 - x)^k (1 + x)^(N - k), the degree-N family on [-1, 1].
Polynomial bernstein_basis_poly(int N, int k);

// Coefficients a_0..a_N with p = sum a_k (1-x)^k (1+x)^(N-k), computed by
// direct basis substitution (not elevation). Exact and unique.
std::vector<Rational> to_bernstein(const Polynomial& p, int N);

// sum a_k (1-x)^k (1+x)^(N-k) for N = coeffs.size() - 1.
Polynomial from_bernstein(const std::vector<Rational>& coeffs);

// Re-express the same polynomial one degree higher: b_j = (a_j + a_{j-1})/2.
// Maps nonnegative vectors to nonnegative vectors.
std::vector<Rational> degree_elevate(const std::vector<Rational>& coeffs);

struct LorentzScan {
  bool capped;  // scan stopped at the cap without finding nonnegative coefficients
  int degree;   // the Lorentz degree when !capped, otherwise the cap
};

// Smallest N >= deg p whose degree-N coefficients are all nonnegative,
// scanning upward by elevation. Requires p > 0 on (-1, 1); roots at the
// endpoints are allowed. Throws NotAdmissible otherwise (then no finite N
// exists).
LorentzScan lorentz_degree(const Polynomial& p, int cap = kDefaultLorentzCap);

// p positive on [-1, 1] and free of roots in the closed unit disk; when true,
// the Lorentz degree equals deg p.
bool lorentz_theorem_applies(const Polynomial& p);

}  // namespace posbasis

#endif
