#pragma once

#include <cstdint>

#include "levar/array.hpp"

namespace levar {

// Elementwise sum at any level; ShapeMismatch unless shapes agree.
Array<std::int64_t> plus(const Array<std::int64_t>& a, const Array<std::int64_t>& b);

// Matrix product of an m*p and a p*n level-2 array. LevelMismatch when an
// argument is not level 2, DimMismatch on rank != 2 or inner-dimension
// disagreement.
Array<std::int64_t> matmul(const Array<std::int64_t>& a, const Array<std::int64_t>& b);

// 2x2 average pooling of a (2m)x(2n) matrix, index arithmetic formulation:
// out[i,j] = (sum of the 2x2 block at (2i, 2j)) / 4, truncating division.
// OddExtent unless both extents are even.
Array<std::int64_t> avgp_direct(const Array<std::int64_t>& a);

// Same pooling via the ranked operator: reshape to the level-3 shape whose
// shape-of-shape is the 2x2 matrix [m 2; n 2], nest with the (slot 1,
// split 1) cut, average each 2x2 block, reshape the outer result to m*n.
// Agrees with avgp_direct elementwise.
Array<std::int64_t> avgp_nested(const Array<std::int64_t>& a);

} // namespace levar
