#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "toric/fan.hpp"

namespace toric {

/// Integer matrix with determinant +-1 carrying the rays and cones of one fan
/// onto another. ray_permutation[i] is the target index of source ray i.
struct UnimodularMap {
  IntMatrix matrix;
  std::vector<std::size_t> ray_permutation;
};

/// Cheap isomorphism invariant. Equal fingerprints are necessary, not
/// sufficient, for isomorphism.
struct FanFingerprint {
  // (m, ascending coefficients, degree) per primitive relation
  using RelationShape = std::tuple<std::size_t, IntVector, Integer>;

  std::size_t dim = 0;
  std::size_t rays = 0;
  std::size_t cones = 0;
  std::vector<RelationShape> relations;  // sorted

  bool operator==(const FanFingerprint&) const = default;
};

FanFingerprint fingerprint(const Fan& fan);
std::string to_string(const FanFingerprint& fp);

/// Exhaustive search: one maximal cone of `a` is anchored and matched, in
/// every ray order, against every maximal cone of `b`.
std::optional<UnimodularMap> find_isomorphism(const Fan& a, const Fan& b);

/// Checks that `map` really is an isomorphism a -> b.
bool is_valid_isomorphism(const Fan& a, const Fan& b, const UnimodularMap& map);

}  // namespace toric
