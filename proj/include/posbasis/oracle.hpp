#ifndef POSBASIS_ORACLE_HPP
#define POSBASIS_ORACLE_HPP

#include <optional>
#include <vector>

#include "posbasis/compact_set.hpp"
#include "posbasis/node_system.hpp"
#include "posbasis/omega.hpp"
#include "posbasis/polynomial.hpp"

namespace posbasis {

// Exact primal simplex with Bland's rule: maximize c.x subject to A x = b,
// x >= 0. Returns nullopt when infeasible; throws on an unbounded program.
std::optional<Rational> simplex_maximize(const std::vector<Rational>& c,
                                         const std::vector<std::vector<Rational>>& A,
                                         const std::vector<Rational>& b);

// Homogeneous feasibility: is there q != 0 with row.q >= 0 for every row?
// Decided exactly: a rank-deficient row system has a nontrivial null vector;
// otherwise the box LP maximize sum_j row_j.q over [-1,1]^dim has a positive
// optimum iff the cone is nontrivial.
struct ConeProblem {
  int dim;
  std::vector<std::vector<Rational>> rows;
};
bool cone_nontrivial(const ConeProblem& problem);

// Independent minimal-degree search: smallest D >= n such that some nonzero
// p of degree <= D vanishes at every node and is nonnegative at the witness
// of every 1-gap. Searches the full coefficient space via cone feasibility;
// never assumes the closed-form structure it is checking.
int tau_oracle(const OmegaSeq& w, const NodeSystem& t, const Witnesses& x);

// Witnesses for a bare node system: midpoints of interior 1-gaps, one unit
// beyond the extreme nodes for the outer gaps.
Witnesses canonical_abstract_witnesses(const OmegaSeq& w, const NodeSystem& t);

// Exhaustive minimum of the achievable maximal basis degree over all
// combinatorially distinct n-node placements in omega. Desk scale only.
int dn_oracle(const CompactSet& omega, int n);

// All degree-N coefficients of p nonnegative, by direct conversion at N.
bool lorentz_oracle(const Polynomial& p, int N);

}  // namespace posbasis

#endif
