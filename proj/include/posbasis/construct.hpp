#ifndef POSBASIS_CONSTRUCT_HPP
#define POSBASIS_CONSTRUCT_HPP

#include <vector>

#include "posbasis/compact_set.hpp"
#include "posbasis/node_system.hpp"
#include "posbasis/omega.hpp"
#include "posbasis/polynomial.hpp"

namespace posbasis {

// A minimal-degree polynomial for the type w over the nodes t: vanishes at
// every node, is nonnegative on every 1-gap, and has degree exactly tau(w).
// Product of linear factors with roots among the nodes only.
FactoredPoly extremal_poly(const OmegaSeq& w, const NodeSystem& t);

enum class DnTag {
  SMALL_N,           // n <= 2
  FINITE,            // finite set, 3 <= n <= #set
  INTERVAL,          // lambda = 0
  LAMBDA_SMALL,      // 1 <= lambda <= n/2 - 1
  LAMBDA_HALF_ODD,   // lambda = floor(n/2), n odd
  LAMBDA_HALF_EVEN,  // lambda = n/2, n even
  LAMBDA_LARGE,      // lambda > n/2
};

struct DnBranch {
  DnTag tag;
  int degree;
};

// Least m such that some n-dimensional subspace of degree-<=m polynomials on
// omega has a positive basis.
DnBranch dn(const CompactSet& omega, int n);

// Largest dimension of a subspace of degree-<=m polynomials on an infinite
// omega with a positive basis; equals max{ n : dn(omega, n).degree <= m }.
int max_dim(const CompactSet& omega, int m);

// n factored polynomials over a shared node system, forming a positive basis
// of their span on omega_set.
struct BasisFamily {
  CompactSet omega_set;
  NodeSystem nodes;
  std::vector<FactoredPoly> polys;
  int max_degree;
  int sigma;  // least achievable maximal degree for these nodes
};

enum class IntervalVariant {
  STANDARD,        // both endpoints anchored; works for every m
  LEFT_ANCHORED,   // even m only
  RIGHT_ANCHORED,  // even m only
  UNANCHORED,      // even m only
};

// The maximal-dimension family on [a, b] for degree cap m, with n =
// floor((m+3)/2) equally spaced nodes.
BasisFamily interval_basis(const Rational& a, const Rational& b, int m,
                           IntervalVariant variant = IntervalVariant::STANDARD);

// Deterministic node placement achieving sigma(omega_type(omega, t)) equal to
// dn(omega, n).
NodeSystem optimal_nodes(const CompactSet& omega, int n);

// b_j = extremal_poly(contract(w, j), t without t_j), sign-normalized so that
// b_j(t_j) > 0; the maximal degree is sigma(omega_type(omega, t)).
BasisFamily basis_for_nodes(const CompactSet& omega, const NodeSystem& t);

}  // namespace posbasis

#endif
