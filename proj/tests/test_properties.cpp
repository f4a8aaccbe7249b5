#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "support.hpp"
#include "toric/constructions.hpp"
#include "toric/fan_io.hpp"
#include "toric/isomorphism.hpp"
#include "toric/mori.hpp"

using namespace toric;
using namespace fixtures;
using namespace oracles;

namespace {

// Random smooth complete fan built from a small seed by products, split
// projectivizations and H-constructions. Stays within dim 5 and 11 rays.
Fan random_fan() {
  Fan f;
  switch (uniform(0, 4)) {
    case 0: f = p1(); break;
    case 1: f = p2(); break;
    case 2: f = hirzebruch(uniform(0, 2)); break;
    case 3: f = dp7(); break;
    default: f = dp6();
  }
  const long steps = uniform(0, 2);
  for (long s = 0; s < steps; ++s) {
    const std::size_t room = 5 - f.dim();
    if (room == 0 || f.ray_count() + 2 > 11) break;
    switch (uniform(0, 2)) {
      case 0: f = product_fan(f, uniform(0, 1) || room < 2 ? p1() : p2()); break;
      case 1: {
        TorusDivisor d{IntVector(f.ray_count())};
        for (auto& a : d.coeffs) a = uniform(-1, 2);
        f = projectivize_split(f, {d});
        break;
      }
      default: {
        const auto x = static_cast<std::size_t>(uniform(0, static_cast<long>(f.ray_count()) - 1));
        const std::size_t p = room >= 2 && uniform(0, 1) ? 3 : 2;
        f = h_construction(f, x, p);
      }
    }
  }
  return random_copy(f);
}

constexpr int kTrials = 40;

}  // namespace

TEST_CASE("generated fans are smooth and complete") {
  for (int t = 0; t < kTrials; ++t) {
    const Fan f = random_fan();
    CHECK(is_smooth(f));
    CHECK(is_complete(f));
    CHECK(picard_rank(f) + f.dim() == f.ray_count());
  }
}

TEST_CASE("primitive collections match the subset oracle") {
  for (int t = 0; t < kTrials; ++t) {
    const Fan f = random_fan();
    CHECK(primitive_collections(f) == brute_force_collections(f));
  }
}

TEST_CASE("primitive relations match the elimination oracle") {
  for (int t = 0; t < kTrials; ++t) {
    const Fan f = random_fan();
    for (const auto& rel : all_primitive_relations(f)) CHECK(to_spec(rel) == oracle_relation(f, rel.collection));
  }
}

TEST_CASE("extremality routes agree and the Mori cone is pointed") {
  for (int t = 0; t < kTrials; ++t) {
    const Fan f = random_fan();
    const auto rels = all_primitive_relations(f);
    const auto fm = extremal_flags(rels, FeasibilityMethod::fourier_motzkin);
    CHECK(fm == extremal_flags(rels, FeasibilityMethod::simplex));
    // a projective toric variety has at least one extremal class
    if (is_fano(f)) CHECK(std::count(fm.begin(), fm.end(), true) >= 1);
  }
}

TEST_CASE("Fano index matches the modular oracle") {
  int fano_seen = 0;
  for (int t = 0; t < kTrials; ++t) {
    const Fan f = random_fan();
    if (!is_fano(f) || f.dim() > 4) continue;
    ++fano_seen;
    CHECK(fano_index(f) == index_oracle(f, static_cast<long>(f.dim()) + 2));
  }
  CHECK(fano_seen > 0);
}

TEST_CASE("Fano index divides every relation degree") {
  for (int t = 0; t < kTrials; ++t) {
    const Fan f = random_fan();
    if (!is_fano(f)) continue;
    const Integer i = fano_index(f);
    CHECK(i >= 1);
    CHECK(i <= static_cast<long>(f.dim()) + 1);
    for (const auto& rel : all_primitive_relations(f)) CHECK(rel.degree % i == 0);
  }
}

TEST_CASE("invariants survive lattice automorphisms and relabelling") {
  for (int t = 0; t < kTrials / 2; ++t) {
    const Fan f = random_fan();
    const IntMatrix m = random_unimodular(f.dim());
    const auto order = random_permutation(f.ray_count());
    const Fan g = transformed(f, m, order);
    std::vector<std::size_t> where(order.size());
    for (std::size_t k = 0; k < order.size(); ++k) where[order[k]] = k;
    CHECK(relabel(sorted_specs(all_primitive_relations(f)), where) == sorted_specs(all_primitive_relations(g)));
    CHECK(fingerprint(f) == fingerprint(g));
    CHECK(is_fano(f) == is_fano(g));
    if (is_fano(f)) CHECK(fano_index(f) == fano_index(g));
    const auto map = find_isomorphism(f, g);
    REQUIRE(map);
    CHECK(is_valid_isomorphism(f, g, *map));
  }
}

TEST_CASE("H-construction round trip and transformation law") {
  for (int t = 0; t < kTrials / 2; ++t) {
    const Fan f = random_fan();
    if (f.dim() > 4) continue;
    const auto x = static_cast<std::size_t>(uniform(0, static_cast<long>(f.ray_count()) - 1));
    const Fan bundle = h_bundle_fan(f, x, 2);
    PrimitiveCollection zs{{f.ray_count(), f.ray_count() + 1}};
    const Fan down = blow_down(bundle, primitive_relation(bundle, zs));
    const Fan h = h_construction(f, x, 2);
    CHECK(canonical_form(down) == canonical_form(h));
    CHECK(picard_rank(h) == picard_rank(f));
    if (is_fano(f)) CHECK(sorted_specs(all_primitive_relations(h)) == transform_relations(f, x, 2));
  }
}

TEST_CASE("JSON serialization is canonical and lossless") {
  for (int t = 0; t < kTrials / 2; ++t) {
    const Fan f = random_fan();
    const std::string text = fan_to_json(f);
    const Fan back = parse_fan_json(text);
    CHECK(same_fan(back, f));
    CHECK(fan_to_json(back) == text);
    const Fan shuffled = reorder_rays(f, random_permutation(f.ray_count()));
    CHECK(fan_to_json(shuffled) == text);
  }
}
