#ifndef POSBASIS_LINALG_HPP
#define POSBASIS_LINALG_HPP

#include <vector>

#include "posbasis/rational.hpp"

namespace posbasis {

// Rank over the rationals by Gaussian elimination; rows may have differing
// lengths (short rows are zero-padded).
int matrix_rank(std::vector<std::vector<Rational>> rows);

}  // namespace posbasis

#endif
