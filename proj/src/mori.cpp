#include "toric/mori.hpp"

#include <algorithm>

#include "toric/normal_form.hpp"

namespace toric {

std::vector<IntVector> mori_cone_generators(const Fan& fan) {
  std::vector<IntVector> out;
  for (const auto& rel : all_primitive_relations(fan)) out.push_back(rel.relation_class);
  return out;
}

namespace {

// g == t * r for some rational t > 0
bool positively_proportional(const IntVector& g, const IntVector& r) {
  std::size_t i = 0;
  while (i < r.size() && r[i] == 0) ++i;
  if (i == r.size()) return is_zero(g);
  Rational t(g[i], r[i]);
  t.canonicalize();
  if (t <= 0) return false;
  for (std::size_t j = 0; j < r.size(); ++j)
    if (Rational(g[j]) != t * r[j]) return false;
  return true;
}

bool extremal_among(const std::vector<IntVector>& classes, std::size_t k, FeasibilityMethod method) {
  std::vector<IntVector> others;
  for (std::size_t j = 0; j < classes.size(); ++j)
    if (!positively_proportional(classes[j], classes[k])) others.push_back(classes[j]);
  return !in_cone(others, classes[k], method);
}

}  // namespace

bool is_extremal(const Fan& fan, const PrimitiveCollection& p, FeasibilityMethod method) {
  if (!is_primitive_collection(fan, p)) throw DomainError("not a primitive collection of the fan");
  const auto relations = all_primitive_relations(fan);
  std::vector<IntVector> classes;
  std::size_t k = relations.size();
  for (std::size_t j = 0; j < relations.size(); ++j) {
    classes.push_back(relations[j].relation_class);
    if (relations[j].collection == p) k = j;
  }
  return extremal_among(classes, k, method);
}

std::vector<bool> extremal_flags(const std::vector<PrimitiveRelation>& relations, FeasibilityMethod method) {
  std::vector<IntVector> classes;
  for (const auto& r : relations) classes.push_back(r.relation_class);
  std::vector<bool> flags;
  for (std::size_t k = 0; k < classes.size(); ++k) flags.push_back(extremal_among(classes, k, method));
  return flags;
}

bool is_fano(const Fan& fan) {
  const auto relations = all_primitive_relations(fan);
  return std::all_of(relations.begin(), relations.end(), [](const PrimitiveRelation& r) { return r.degree > 0; });
}

PicClass picard_class(const Fan& fan, const IntVector& divisor) {
  const std::size_t n = fan.ray_count();
  const std::size_t d = fan.dim();
  if (divisor.size() != n) throw DomainError("divisor length must equal the number of rays");

  // M -> Z^rays, m |-> (<m, x>)_x
  IntMatrix pairing(n, d);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t i = 0; i < d; ++i) pairing(x, i) = fan.ray(x)[i];
  SmithForm snf = smith_normal_form(pairing);
  for (const auto& f : snf.invariant_factors())
    if (f != 1) throw InvariantError("Picard group has torsion; rays do not span the lattice");

  // Rows d.. of u annihilate the image of M: they are a basis of the curve lattice.
  IntMatrix curves(n - d, n);
  for (std::size_t k = d; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j) curves(k - d, j) = snf.u(k, j);
  HermiteForm hnf = hermite_normal_form(curves);

  PicClass cls;
  cls.basis_witness = hnf.h;
  cls.coords = hnf.h * divisor;
  return cls;
}

PicClass anticanonical_class(const Fan& fan) {
  return picard_class(fan, IntVector(fan.ray_count(), Integer(1)));
}

Integer fano_index(const Fan& fan) {
  if (!is_fano(fan)) throw DomainError("Fano index is only defined for Fano fans");
  return gcd_of(anticanonical_class(fan).coords);
}

std::size_t picard_rank(const Fan& fan) { return fan.ray_count() - fan.dim(); }

RelationType classify_relation_type(const PrimitiveRelation& rel) {
  RelationType t;
  t.arity = rel.collection.rays.size();
  t.coefficients = rel.coefficients;
  std::sort(t.coefficients.begin(), t.coefficients.end());
  const auto& b = t.coefficients;
  auto is = [&](std::size_t m, std::initializer_list<long> coeffs) {
    return t.arity == m && b == int_vector(coeffs);
  };
  if (is(6, {}))
    t.tag = RelationTag::t1;
  else if (is(5, {1}))
    t.tag = RelationTag::t2;
  else if (is(5, {3}))
    t.tag = RelationTag::t3;
  else if (is(4, {}))
    t.tag = RelationTag::t4;
  else if (is(4, {2}))
    t.tag = RelationTag::t5;
  else if (is(4, {1, 1}))
    t.tag = RelationTag::t6;
  else if (is(3, {1}))
    t.tag = RelationTag::t7;
  else if (is(2, {}))
    t.tag = RelationTag::t8;
  return t;
}

std::string to_string(RelationTag tag) {
  switch (tag) {
    case RelationTag::t1: return "T1";
    case RelationTag::t2: return "T2";
    case RelationTag::t3: return "T3";
    case RelationTag::t4: return "T4";
    case RelationTag::t5: return "T5";
    case RelationTag::t6: return "T6";
    case RelationTag::t7: return "T7";
    case RelationTag::t8: return "T8";
    case RelationTag::other: break;
  }
  return "OTHER";
}

}  // namespace toric
