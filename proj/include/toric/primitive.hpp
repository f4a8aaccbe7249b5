#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "toric/fan.hpp"

namespace toric {

/// Minimal set of rays that does not span a cone of the fan.
struct PrimitiveCollection {
  std::vector<std::size_t> rays;  // sorted

  bool operator==(const PrimitiveCollection&) const = default;
  bool operator<(const PrimitiveCollection& o) const { return rays < o.rays; }
};

/// x_1 + ... + x_m = b_1 y_1 + ... + b_n y_n, with the y's generating the
/// cone whose relative interior contains the left-hand sum.
struct PrimitiveRelation {
  PrimitiveCollection collection;
  std::vector<std::size_t> sigma;  // generators of sigma(P), sorted
  IntVector coefficients;          // b_j > 0, aligned with sigma
  Integer degree;                  // m - sum b_j
  IntVector relation_class;        // +1 on P, -b_j on sigma(P), 0 elsewhere
};

/// Ray-index form of a relation, used for comparisons, predicted relations
/// and fan specifications. Right-hand side entries are (ray, coefficient).
struct RelationSpec {
  std::vector<std::size_t> collection;
  std::vector<std::pair<std::size_t, Integer>> rhs;

  bool operator==(const RelationSpec& o) const {
    return collection == o.collection && rhs == o.rhs;
  }
  bool operator<(const RelationSpec& o) const {
    if (collection != o.collection) return collection < o.collection;
    return rhs < o.rhs;
  }
};

inline constexpr std::size_t kDefaultCollectionRayCap = 16;

bool is_primitive_collection(const Fan& fan, const PrimitiveCollection& p);

/// All primitive collections, sorted lexicographically. Throws DomainError
/// when the fan has more rays than `ray_cap`.
std::vector<PrimitiveCollection> primitive_collections(const Fan& fan,
                                                       std::size_t ray_cap = kDefaultCollectionRayCap);

/// Requires a complete fan. Throws DomainError if `p` is not primitive or
/// no cone contains the sum, InvariantError if the coefficients come out
/// non-integral or the containing cone is not unique.
PrimitiveRelation primitive_relation(const Fan& fan, const PrimitiveCollection& p);

/// One relation per primitive collection, in collection order.
std::vector<PrimitiveRelation> all_primitive_relations(const Fan& fan);

RelationSpec to_spec(const PrimitiveRelation& rel);
std::vector<RelationSpec> sorted_specs(const std::vector<PrimitiveRelation>& rels);

/// x1, x2, ... (1-based).
std::vector<std::string> default_labels(std::size_t n);

/// "x1+x3 = x2", "x1+x4 = 0", "x1+x2+x3+x4+x5 = 3*x6". Terms appear in ray
/// index order. `labels` defaults to x1, x2, ...
std::string format_relation(const RelationSpec& rel, const std::vector<std::string>& labels = {});
std::string format_relation(const PrimitiveRelation& rel, const std::vector<std::string>& labels = {});

/// Inverse of format_relation. Accepts "2*x4", "2x4", optional spaces and
/// "0" for an empty side; labels default to x1, x2, ... Throws DomainError
/// on malformed text.
RelationSpec parse_relation(std::string_view text, const std::vector<std::string>& labels = {});

}  // namespace toric
