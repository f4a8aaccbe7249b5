#pragma once

#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

#include "toric/matrix.hpp"

namespace toric {

/// Sorted set of indices into a fan's ray list.
using Cone = std::vector<std::size_t>;

/// Bitmask over ray indices; fans are limited to 64 rays.
using RayMask = std::uint64_t;
inline constexpr std::size_t kMaxRays = 64;

RayMask to_mask(const std::vector<std::size_t>& indices);
std::vector<std::size_t> from_mask(RayMask mask);

/// A complete-or-not simplicial fan whose maximal cones are all
/// full-dimensional. Immutable once built; construct with make_fan().
class Fan {
 public:
  std::size_t dim() const { return dim_; }
  std::size_t ray_count() const { return rays_.size(); }
  const std::vector<IntVector>& rays() const { return rays_; }
  const IntVector& ray(std::size_t i) const { return rays_[i]; }
  const std::vector<Cone>& max_cones() const { return cones_; }

  /// adj * R == det * I where R holds the cone's rays as columns, so row i
  /// of adj is det times the dual functional of the i-th cone ray.
  const IntMatrix& cone_adjugate(std::size_t c) const { return adjugates_[c]; }
  const Integer& cone_determinant(std::size_t c) const { return dets_[c]; }

  RayMask cone_mask(std::size_t c) const { return masks_[c]; }

  /// True when the indexed rays span a cone of the fan.
  bool is_face(RayMask mask) const { return faces_.count(mask) != 0; }
  bool is_face(const std::vector<std::size_t>& indices) const { return is_face(to_mask(indices)); }
  /// All cones of the fan (faces of maximal cones, including {0}).
  const std::unordered_set<RayMask>& faces() const { return faces_; }

  /// Coordinates of `point` in the basis of maximal cone c's rays.
  RatVector cone_coordinates(std::size_t c, const IntVector& point) const;

  std::optional<std::size_t> find_ray(const IntVector& v) const;

  /// Exact equality of the stored representation (ray order matters).
  bool operator==(const Fan& other) const {
    return dim_ == other.dim_ && rays_ == other.rays_ && cones_ == other.cones_;
  }

 private:
  friend Fan make_fan(std::size_t, std::vector<IntVector>, std::vector<Cone>);
  friend Fan canonical_form(const Fan&);
  friend Fan reorder_rays(const Fan&, const std::vector<std::size_t>&);
  static Fan assemble(std::size_t dim, std::vector<IntVector> rays, std::vector<Cone> cones);

  std::size_t dim_ = 0;
  std::vector<IntVector> rays_;
  std::vector<Cone> cones_;
  std::vector<IntMatrix> adjugates_;
  std::vector<Integer> dets_;
  std::vector<RayMask> masks_;
  std::unordered_set<RayMask> faces_;
};

/// Validates and builds a fan. Cone index lists are sorted on input; the
/// order of rays is kept as given.
///
/// Throws DomainError for: empty ray list, wrong ray length, zero or
/// non-primitive ray, duplicate ray, cone of wrong size, repeated or
/// out-of-range index, duplicate cone, lower-dimensional cone, unused ray,
/// and cones meeting outside a common face.
Fan make_fan(std::size_t dim, std::vector<IntVector> rays, std::vector<Cone> max_cones);

/// Every maximal cone's rays form a lattice basis.
bool is_smooth(const Fan& fan);

/// Support is all of R^d: ridge pairing, connected cone adjacency, and a
/// seeded random-point containment guard.
bool is_complete(const Fan& fan);

/// Rays sorted lexicographically, cones re-indexed and sorted.
Fan canonical_form(const Fan& fan);

/// Equality up to reordering of rays.
bool same_fan(const Fan& a, const Fan& b);

/// Same fan with rays listed in a new order: new ray k is old ray order[k].
Fan reorder_rays(const Fan& fan, const std::vector<std::size_t>& order);

/// Lexicographic comparison used for canonical ordering.
bool lex_less(const IntVector& a, const IntVector& b);

}  // namespace toric
