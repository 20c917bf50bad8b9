#ifndef POSBASIS_VERIFY_HPP
#define POSBASIS_VERIFY_HPP

#include <optional>
#include <vector>

#include "posbasis/compact_set.hpp"
#include "posbasis/polynomial.hpp"
#include "posbasis/sign_analysis.hpp"

namespace posbasis {

enum class VerifyReason {
  OK,
  NOT_NONNEGATIVE,  // some member is negative somewhere on the set
  NO_EXACT_NODE,    // some member has no point of the set that is exclusively its own
  NOT_INDEPENDENT,  // coefficient matrix is rank deficient
};

struct PolyCheck {
  bool nonneg = false;
  std::optional<Rational> negativity_witness;
  std::optional<RootLoc> node;  // a k-node when one exists
};

struct VerifyReport {
  std::vector<PolyCheck> polys;
  bool independent = false;
  bool accept = false;
  VerifyReason reason = VerifyReason::OK;
};

// The finite-dimensional node criterion, decided exactly: each polynomial
// must be nonnegative on the set, must own a point of the set where all the
// others vanish and it does not, and the family must be linearly independent.
VerifyReport verify_positive_basis(const CompactSet& omega,
                                   const std::vector<Polynomial>& polys);

const char* to_string(VerifyReason r);

}  // namespace posbasis

#endif
