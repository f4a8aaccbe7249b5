#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "support.hpp"
#include "toric/constructions.hpp"
#include "toric/isomorphism.hpp"
#include "toric/mori.hpp"

using namespace toric;
using namespace fixtures;

namespace {

std::vector<std::string> rendered(const Fan& f) {
  std::vector<std::string> out;
  for (const auto& r : all_primitive_relations(f)) out.push_back(format_relation(r));
  return out;
}

TorusDivisor last_ray_divisor(const Fan& f, long k) {
  TorusDivisor t{IntVector(f.ray_count())};
  t.coeffs.back() = k;
  return t;
}

// Relation z_1+...+z_p = x of an H-bundle fan.
PrimitiveRelation bundle_relation(const Fan& bundle, std::size_t base_rays, std::size_t p) {
  PrimitiveCollection zs;
  for (std::size_t k = 0; k < p; ++k) zs.rays.push_back(base_rays + k);
  return primitive_relation(bundle, zs);
}

std::vector<Fan> smooth_complete_samples() {
  return {p1(), p2(), p1xp1(), hirzebruch(1), hirzebruch(2), dp7(), dp6(), blowup_p3_point()};
}

}  // namespace

TEST_CASE("projective spaces") {
  for (std::size_t d = 1; d <= 5; ++d) {
    const Fan f = projective_space_fan(d);
    CHECK(f.ray_count() == d + 1);
    CHECK(f.max_cones().size() == d + 1);
    CHECK(is_smooth(f));
    CHECK(is_complete(f));
    CHECK(primitive_collections(f).size() == 1);
  }
  CHECK(same_fan(projective_space_fan(2), p2()));
  CHECK(same_fan(projective_space_fan(1), p1()));
  CHECK_THROWS_AS(projective_space_fan(0), DomainError);
}

TEST_CASE("products") {
  const Fan f = product_fan(p1(), p1());
  CHECK(f.ray_count() == 4);
  CHECK(f.max_cones().size() == 4);
  CHECK(primitive_collections(f).size() == 2);
  CHECK(same_fan(f, p1xp1()));
  const Fan g = product_fan(p2(), dp7());
  CHECK(g.dim() == 4);
  CHECK(is_complete(g));
  CHECK(picard_rank(g) == 4);
  // relations of a product are the relations of the factors
  CHECK(rendered(g) == std::vector<std::string>{"x1+x2+x3 = 0", "x4+x6 = x5", "x4+x7 = 0", "x5+x7 = x6",
                                                "x5+x8 = x4", "x6+x8 = 0"});
}

TEST_CASE("projectivized split bundles") {
  const Fan p4 = projective_space_fan(4);
  const Fan e2 = projectivize_split(p4, {last_ray_divisor(p4, 1)});
  CHECK(e2.rays() == std::vector<IntVector>{iv({1, 0, 0, 0, 0}), iv({0, 1, 0, 0, 0}), iv({0, 0, 1, 0, 0}),
                                            iv({0, 0, 0, 1, 0}), iv({-1, -1, -1, -1, 1}), iv({0, 0, 0, 0, 1}),
                                            iv({0, 0, 0, 0, -1})});
  CHECK(rendered(e2) == std::vector<std::string>{"x1+x2+x3+x4+x5 = x6", "x6+x7 = 0"});
  const auto rels = all_primitive_relations(e2);
  CHECK(rels[0].degree == 4);
  CHECK(rels[1].degree == 2);

  const Fan e3 = projectivize_split(p4, {last_ray_divisor(p4, 3)});
  CHECK(rendered(e3) == std::vector<std::string>{"x1+x2+x3+x4+x5 = 3*x6", "x6+x7 = 0"});

  // over P^1 with one twist: F_1
  const Fan f1 = projectivize_split(p1(), {last_ray_divisor(p1(), 1)});
  CHECK(rendered(f1) == std::vector<std::string>{"x1+x2 = x3", "x3+x4 = 0"});
  CHECK(find_isomorphism(f1, hirzebruch(1)));

  // trivial twists give a product
  const Fan flat = projectivize_split(p2(), {TorusDivisor{IntVector(3)}, TorusDivisor{IntVector(3)}});
  CHECK(same_fan(flat, product_fan(p2(), projective_space_fan(2))));

  CHECK_THROWS_AS(projectivize_split(p2(), {}), DomainError);
  CHECK_THROWS_AS(projectivize_split(p2(), {TorusDivisor{IntVector(2)}}), DomainError);
  const Fan quadrant = make_fan(2, {iv({1, 0}), iv({0, 1})}, {{0, 1}});
  CHECK_THROWS_AS(projectivize_split(quadrant, {TorusDivisor{IntVector(2)}}), DomainError);
}

TEST_CASE("H-construction small cases") {
  const Fan h = h_construction(p1(), 0, 2);
  CHECK(h.rays() == std::vector<IntVector>{iv({-1, 0}), iv({0, 1}), iv({1, -1})});
  CHECK(find_isomorphism(h, p2()));

  const Fan p4 = projective_space_fan(4);
  for (std::size_t x = 0; x < 5; ++x) {
    const Fan h5 = h_construction(p4, x, 2);
    CHECK(h5.ray_count() == 6);
    CHECK(picard_rank(h5) == 1);
    CHECK(find_isomorphism(h5, projective_space_fan(5)));
  }
  CHECK_THROWS_AS(h_construction(p2(), 3, 2), DomainError);
  CHECK_THROWS_AS(h_construction(p2(), 0, 1), DomainError);
}

TEST_CASE("H-construction: blow-down of the bundle fan") {
  for (const auto& f : smooth_complete_samples())
    for (std::size_t x = 0; x < f.ray_count(); ++x)
      for (std::size_t p : {2, 3}) {
        const Fan bundle = h_bundle_fan(f, x, p);
        CHECK(is_smooth(bundle));
        CHECK(is_complete(bundle));
        const PrimitiveRelation rel = bundle_relation(bundle, f.ray_count(), p);
        REQUIRE(rel.sigma == std::vector<std::size_t>{x});
        CHECK(is_extremal(bundle, rel.collection));
        const Fan down = blow_down(bundle, rel);
        const Fan h = h_construction(f, x, p);
        CHECK(canonical_form(down) == canonical_form(h));
        CHECK(h.dim() == f.dim() + p - 1);
        CHECK(h.ray_count() == f.ray_count() - 1 + p);
        CHECK(picard_rank(h) == picard_rank(f));
        CHECK(is_smooth(h));
        CHECK(is_complete(h));
      }
}

TEST_CASE("H-bundle fan over P^1 is the projectivized bundle") {
  for (std::size_t x = 0; x < 2; ++x) {
    TorusDivisor d{IntVector(2)};
    d.coeffs[x] = 1;
    CHECK(find_isomorphism(h_bundle_fan(p1(), x, 2), projectivize_split(p1(), {d})));
  }
}

TEST_CASE("transformation law on Fano fans") {
  for (const auto& f : {p1(), p2(), p1xp1(), hirzebruch(1), dp7(), dp6(), blowup_p3_point()})
    for (std::size_t x = 0; x < f.ray_count(); ++x)
      for (std::size_t p : {2, 3}) {
        const Fan h = h_construction(f, x, p);
        CHECK(sorted_specs(all_primitive_relations(h)) == transform_relations(f, x, p));
      }
}

TEST_CASE("transformation law examples") {
  // x = x1: x1+x4 = 0 becomes z1+z2+x4 = 0; here x4 is ray 2 after x1 leaves
  const auto at_x1 = transform_relations(dp7(), 0, 2);
  std::vector<std::string> text;
  for (const auto& s : at_x1) text.push_back(format_relation(s));
  CHECK(std::find(text.begin(), text.end(), "x3+x5+x6 = 0") != text.end());
  // x = x2 on the right: x1+x3 = x2 becomes x1+x2 = x5+x6 in the new numbering
  std::vector<std::string> text2;
  for (const auto& s : transform_relations(dp7(), 1, 2)) text2.push_back(format_relation(s));
  CHECK(std::find(text2.begin(), text2.end(), "x1+x2 = x5+x6") != text2.end());
}

TEST_CASE("blow-down") {
  // P^2 blown up at a torus fixed point
  const Fan bl = make_fan(2, {iv({1, 0}), iv({0, 1}), iv({1, 1}), iv({-1, -1})}, {{0, 2}, {1, 2}, {0, 3}, {1, 3}});
  const Fan down = blow_down(bl, primitive_relation(bl, {{0, 1}}));
  CHECK(same_fan(down, p2()));
  // wrong shapes
  CHECK_THROWS_AS(blow_down(bl, primitive_relation(bl, {{2, 3}})), DomainError);
  CHECK_THROWS_AS(blow_down(hirzebruch(2), primitive_relation(hirzebruch(2), {{0, 2}})), DomainError);
  CHECK_THROWS_AS(blow_down(dp7(), primitive_relation(dp7(), {{0, 3}})), DomainError);
}

TEST_CASE("blow-down rejects a non-extremal relation") {
  // P^3 blown up along the line {x1,x2} and then along the strict transform
  // of {x1,x3}; the first exceptional relation x1+x2 = x5 is no longer extremal.
  const Fan g = make_fan(3,
                         {iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1}), iv({-1, -1, -1}), iv({1, 1, 0}), iv({1, 0, 1})},
                         {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {0, 3, 4}, {2, 3, 5}, {0, 3, 5}, {2, 4, 5}, {0, 4, 5}});
  REQUIRE(is_smooth(g));
  REQUIRE(is_complete(g));
  const PrimitiveRelation rel = primitive_relation(g, {{0, 1}});
  CHECK(format_relation(rel) == "x1+x2 = x5");
  CHECK_FALSE(is_extremal(g, rel.collection));
  CHECK_THROWS_AS(blow_down(g, rel), DomainError);
  // the second blow-up can be undone
  const Fan once = blow_down(g, primitive_relation(g, {{0, 2}}));
  CHECK(picard_rank(once) == 2);
}

TEST_CASE("fans from relations") {
  const Fan f7 = direct_fan_from_relations(
      5, {parse_relation("x1+x2+x3 = x7"), parse_relation("x4+x5+x6 = x7"), parse_relation("x7+x8 = 0")});
  CHECK(f7.rays() == std::vector<IntVector>{iv({1, 0, 0, 0, 0}), iv({0, 1, 0, 0, 0}), iv({-1, -1, 0, 0, 1}),
                                            iv({0, 0, 1, 0, 0}), iv({0, 0, 0, 1, 0}), iv({0, 0, -1, -1, 1}),
                                            iv({0, 0, 0, 0, 1}), iv({0, 0, 0, 0, -1})});
  CHECK(f7.max_cones().size() == 18);
  CHECK(rendered(f7) == std::vector<std::string>{"x1+x2+x3 = x7", "x4+x5+x6 = x7", "x7+x8 = 0"});

  const Fan f6 = direct_fan_from_relations(
      5, {parse_relation("x1+x2+x3 = x4"), parse_relation("x4+x5+x6 = x7"), parse_relation("x7+x8 = 0")});
  CHECK(is_fano(f6));
  CHECK(fano_index(f6) == 2);

  // the relation order in the input does not matter up to isomorphism
  const Fan f6b = direct_fan_from_relations(
      5, {parse_relation("x7+x8 = 0"), parse_relation("x4+x5+x6 = x7"), parse_relation("x1+x2+x3 = x4")});
  CHECK(find_isomorphism(f6, f6b));

  CHECK(same_fan(direct_fan_from_relations(2, {parse_relation("x1+x2+x3 = 0")}), p2()));
  CHECK_THROWS_AS(direct_fan_from_relations(3, {parse_relation("x1+x2 = 0"), parse_relation("x2+x3 = 0")}),
                  DomainError);
  CHECK_THROWS_AS(direct_fan_from_relations(2, {parse_relation("x1+x2 = x4"), parse_relation("x3+x4 = x2")}),
                  DomainError);
  CHECK_THROWS_AS(direct_fan_from_relations(1, {parse_relation("x1+x5 = 0")}), DomainError);
  CHECK_THROWS_AS(direct_fan_from_relations(3, {parse_relation("x1+x2 = x3+x4")}), DomainError);
  CHECK_THROWS_AS(direct_fan_from_relations(2, {}), DomainError);
}
