#pragma once

#include <vector>

#include "bochnerlab/rational.hpp"

namespace bochnerlab {

using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;  // row-major

// Basis of the right nullspace of a (possibly non-square) matrix, exact
// Gauss-Jordan elimination. Each basis vector has a unit pivot in one of the
// free columns.
std::vector<RatVec> nullspace(RatMat m, std::size_t cols);

}  // namespace bochnerlab
