#ifndef POSBASIS_SCHUR_COHN_HPP
#define POSBASIS_SCHUR_COHN_HPP

#include "posbasis/polynomial.hpp"

namespace posbasis {

// True iff p has a complex root z with |z| <= 1. Exact Schur-Cohn recursion
// over the rationals; boundary roots |z| = 1 count as inside.
bool schur_cohn_has_root_in_closed_unit_disk(const Polynomial& p);

}  // namespace posbasis

#endif
