#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toric/fan.hpp"
#include "toric/primitive.hpp"

namespace toric {

struct CatalogExpectation {
  std::size_t dim = 5;
  Integer index = 2;
  std::size_t picard_rank = 0;
  std::vector<std::string> relations;  // "x1+x2+x3 = x4", empty when not listed
};

struct CatalogEntry {
  int id = 0;  // 1..10
  std::string name;
  Fan fan;
  CatalogExpectation expected;
};

/// The ten smooth toric Fano 5-folds of index 2, in their usual numbering.
std::vector<CatalogEntry> catalog_fano5_index2();

/// Rays (1,0),(1,1),(0,1),(-1,0),(0,-1), cones between neighbours.
Fan del_pezzo_degree7();

/// A fan with a display name for each ray.
struct LabeledFan {
  Fan fan;
  std::vector<std::string> labels;
};

/// The del Pezzo surface of degree 7 followed by H_(x5,2), then H_(x4,2),
/// ..., H_(x1,2). Stage k has the new rays of the k-th step appended as
/// xi and xi'. Six stages.
std::vector<LabeledFan> seven_fold_tower();

/// Last stage of the tower with rays reordered x1, x1', x2, x2', ..., x5, x5'.
LabeledFan example_seven_fold_labeled();
Fan example_seven_fold();

/// All primitive collections pairwise disjoint.
bool is_splitting_fan(const Fan& fan);

/// Primitive collections with relation sum = 0 that meet no other primitive
/// collection. Each one exhibits the fan as a toric projective-space bundle.
std::vector<PrimitiveCollection> split_bundle_relations(const Fan& fan);

/// Smooth complete Fano fans in dimension 2 with rays in [-bound, bound]^2,
/// one representative per isomorphism class, in discovery order.
std::vector<Fan> enumerate_smooth_fano_surfaces(int bound = 3);

}  // namespace toric
