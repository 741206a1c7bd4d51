#pragma once

#include <vector>

#include "core/error.hpp"
#include "core/rational.hpp"

namespace bccst {

using RatMatrix = std::vector<std::vector<Rat>>;

RatMatrix rat_identity(size_t n);

// Exact Gauss-Jordan inverse; throws invalid_arg on a singular input.
RatMatrix rat_invert(RatMatrix a);

// Determinant by fraction-preserving elimination with row pivoting.
Rat rat_determinant(RatMatrix a);

// Solves a x = b for square nonsingular a.
std::vector<Rat> rat_solve(RatMatrix a, std::vector<Rat> b);

}  // namespace bccst
