#pragma once

#include "toric/matrix.hpp"

namespace toric {

/// u * m * v == d, with u and v unimodular and d diagonal (nonnegative),
/// d(0,0) | d(1,1) | ...
struct SmithForm {
  IntMatrix u;
  IntMatrix d;
  IntMatrix v;

  /// Diagonal entries d(i,i) for i < min(rows, cols).
  IntVector invariant_factors() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Row-style Hermite normal form: h == t * m with t unimodular, h in row
/// echelon form, pivots positive, entries above each pivot reduced into
/// [0, pivot). Zero rows sink to the bottom.
struct HermiteForm {
  IntMatrix h;
  IntMatrix t;
  std::size_t rank = 0;
};

HermiteForm hermite_normal_form(const IntMatrix& m);

}  // namespace toric
