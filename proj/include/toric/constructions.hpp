#pragma once

#include <vector>

#include "toric/fan.hpp"
#include "toric/primitive.hpp"

namespace toric {

/// D = sum_x a_x D_x over the rays of a fan.
struct TorusDivisor {
  IntVector coeffs;
};

/// Prime divisor D_x.
TorusDivisor prime_divisor(const Fan& fan, std::size_t ray);

/// P^d: rays e_1..e_d and -(e_1+...+e_d), every d-subset a maximal cone.
Fan projective_space_fan(std::size_t d);

/// Rays of `a` padded with zeros, then rays of `b` shifted past dim(a).
Fan product_fan(const Fan& a, const Fan& b);

/// P(O + O(D_1) + ... + O(D_r)) over a smooth complete base. Rays: each base
/// ray v lifted to (v, a_1(v), ..., a_r(v)), then f_1..f_r = e_{d+1..d+r},
/// then f_0 = -(f_1+...+f_r). Maximal cones are a lifted base cone plus r of
/// the r+1 fiber rays.
Fan projectivize_split(const Fan& base, const std::vector<TorusDivisor>& twists);

/// The toric bundle fan that the H-construction blows down: base rays
/// zero-extended into dimension d+p-1, then z_i = e_{d+i} (i < p) and
/// z_p = x - (z_1+...+z_{p-1}); maximal cones are a base cone plus p-1 of the
/// z's. Carries the extremal relation z_1+...+z_p = x.
Fan h_bundle_fan(const Fan& fan, std::size_t x, std::size_t p);

/// Contracts a divisorial extremal relation z_1+...+z_p = x (single sigma ray,
/// unit coefficient): ray x is dropped and every maximal cone {x} + S becomes
/// S + {z_j} for the one z missing from S. Throws DomainError for the wrong
/// shape, a non-extremal relation, or an invalid result.
Fan blow_down(const Fan& fan, const PrimitiveRelation& rel);

/// H_(x,p)(X). Rays: the rays other than x (original order, zero-extended),
/// then z_1..z_p as in h_bundle_fan. Maximal cones: sigma + (p-1 z's) for
/// x not in sigma, (sigma - x) + all z's for x in sigma.
Fan h_construction(const Fan& fan, std::size_t x, std::size_t p);

/// Index of ray `old_index` of the input fan inside h_construction(fan, x, p);
/// the z's are at ray_count-1 .. ray_count+p-2.
std::size_t h_ray_index(std::size_t old_index, std::size_t x);

/// Relations predicted for h_construction(fan, x, p) from those of `fan`:
/// x on the left becomes z_1+...+z_p, b*x on the right becomes
/// b*z_1+...+b*z_p, everything else is carried over. Sorted.
std::vector<RelationSpec> transform_relations(const Fan& fan, std::size_t x, std::size_t p);

/// Splitting fan with the given pairwise-disjoint primitive relations on
/// dim + relations.size() rays. The last ray of each collection is solved
/// from its relation, the remaining rays get e_1, e_2, ... in index order.
/// Throws DomainError for overlapping collections, circular dependencies,
/// or when the built fan's relations differ from the request.
Fan direct_fan_from_relations(std::size_t dim, const std::vector<RelationSpec>& relations);

}  // namespace toric
