#pragma once

#include "toric/matrix.hpp"

namespace toric {

// Exact feasibility of { x >= 0 : a x = b } over the rationals. Two
// independent routes are provided; cone membership picks one by size.

/// Phase-one simplex with Bland's rule, exact pivots.
bool has_nonnegative_solution_simplex(const RatMatrix& a, const RatVector& b);

/// Gaussian elimination of the equalities followed by Fourier-Motzkin
/// elimination of the remaining free variables.
bool has_nonnegative_solution_fm(const RatMatrix& a, const RatVector& b);

enum class FeasibilityMethod { automatic, fourier_motzkin, simplex };

/// Generator count up to which `automatic` uses Fourier-Motzkin.
inline constexpr std::size_t kFourierMotzkinLimit = 8;

/// Is `target` a nonnegative rational combination of `generators`?
/// All vectors must share one length. An empty generator list spans {0}.
bool in_cone(const std::vector<IntVector>& generators, const IntVector& target,
             FeasibilityMethod method = FeasibilityMethod::automatic);

}  // namespace toric
