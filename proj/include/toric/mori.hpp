#pragma once

#include <string>
#include <vector>

#include "toric/fan.hpp"
#include "toric/linear_feasibility.hpp"
#include "toric/primitive.hpp"

namespace toric {

/// A divisor class in Pic(X) = Z^rays / M, written in a fixed basis.
///
/// The rows of `basis_witness` are a basis of the curve lattice
/// { c in Z^rays : sum_x c_x x = 0 } in Hermite normal form; `coords` are
/// the intersection numbers of the divisor with those rows. For smooth
/// complete fans this identifies Pic(X) with Z^(rays - dim).
struct PicClass {
  IntVector coords;
  IntMatrix basis_witness;
};

/// Relation classes r(P), one per primitive collection, in collection order.
std::vector<IntVector> mori_cone_generators(const Fan& fan);

/// r(P) spans an extreme ray of the cone generated by all relation classes.
bool is_extremal(const Fan& fan, const PrimitiveCollection& p,
                 FeasibilityMethod method = FeasibilityMethod::automatic);

/// Extremality flag for each relation, aligned with `relations`.
std::vector<bool> extremal_flags(const std::vector<PrimitiveRelation>& relations,
                                 FeasibilityMethod method = FeasibilityMethod::automatic);

/// deg P > 0 for every primitive collection.
bool is_fano(const Fan& fan);

PicClass picard_class(const Fan& fan, const IntVector& divisor);

/// Class of the sum of all torus-invariant prime divisors.
PicClass anticanonical_class(const Fan& fan);

/// Largest m with -K = mH. Throws DomainError when the fan is not Fano.
Integer fano_index(const Fan& fan);

std::size_t picard_rank(const Fan& fan);

enum class RelationTag { t1, t2, t3, t4, t5, t6, t7, t8, other };

struct RelationType {
  RelationTag tag = RelationTag::other;
  std::size_t arity = 0;     // m
  IntVector coefficients;    // b's, ascending
};

/// Matches (m, coefficient multiset) against the eight extremal shapes
/// available to index-two Fano 5-folds.
RelationType classify_relation_type(const PrimitiveRelation& rel);

std::string to_string(RelationTag tag);

}  // namespace toric
