#pragma once

#include <vector>

#include "curvezeta/numeric.hpp"

namespace curvezeta {

using Mat = std::vector<std::vector<Rat>>;

// Determinant by fraction-free (Bareiss) elimination after clearing row
// denominators.
Rat exact_det(const Mat& m);

// Solves M x = rhs exactly; throws SingularMatrix.
std::vector<Rat> exact_solve(const Mat& m, const std::vector<Rat>& rhs);

} // namespace curvezeta
