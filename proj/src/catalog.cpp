#include "toric/catalog.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "toric/constructions.hpp"
#include "toric/isomorphism.hpp"
#include "toric/mori.hpp"

namespace toric {

namespace {

Fan p(std::size_t d) { return projective_space_fan(d); }

// O(k) on P^d, written as k times the divisor of the last ray.
TorusDivisor hyperplane(const Fan& pd, long k) {
  TorusDivisor t = prime_divisor(pd, pd.ray_count() - 1);
  t.coeffs.back() = k;
  return t;
}

TorusDivisor trivial(const Fan& base) { return TorusDivisor{IntVector(base.ray_count())}; }

Fan from_relations(std::initializer_list<const char*> rels) {
  std::vector<RelationSpec> spec;
  for (const char* r : rels) spec.push_back(parse_relation(r));
  return direct_fan_from_relations(5, spec);
}

CatalogEntry entry(int id, std::string name, Fan fan, std::size_t rank, std::vector<std::string> rels = {}) {
  CatalogEntry e{id, std::move(name), std::move(fan), {}};
  e.expected.picard_rank = rank;
  e.expected.relations = std::move(rels);
  return e;
}

}  // namespace

std::vector<CatalogEntry> catalog_fano5_index2() {
  const Fan p1 = p(1), p2 = p(2), p3 = p(3), p4 = p(4);
  std::vector<CatalogEntry> out;
  out.push_back(entry(1, "P_{P^2}(O+O+O+O(1))",
                      projectivize_split(p2, {trivial(p2), trivial(p2), hyperplane(p2, 1)}), 2));
  out.push_back(entry(2, "P_{P^4}(O+O(1))", projectivize_split(p4, {hyperplane(p4, 1)}), 2));
  out.push_back(entry(3, "P_{P^4}(O+O(3))", projectivize_split(p4, {hyperplane(p4, 3)}), 2));
  out.push_back(entry(4, "P^1 x P^1 x P^3", product_fan(product_fan(p1, p1), p3), 3));
  out.push_back(entry(5, "P^1 x P_{P^3}(O+O(2))", product_fan(p1, projectivize_split(p3, {hyperplane(p3, 2)})), 3));
  out.push_back(entry(6, "P^1-bundle over P_{P^2}(O+O+O(2))",
                      from_relations({"x1+x2+x3 = x4", "x4+x5+x6 = x7", "x7+x8 = 0"}), 3,
                      {"x1+x2+x3 = x4", "x4+x5+x6 = x7", "x7+x8 = 0"}));
  out.push_back(entry(7, "P^1-bundle over P^2 x P^2 (7)",
                      from_relations({"x1+x2+x3 = x7", "x4+x5+x6 = x7", "x7+x8 = 0"}), 3,
                      {"x1+x2+x3 = x7", "x4+x5+x6 = x7", "x7+x8 = 0"}));
  out.push_back(entry(8, "P^1-bundle over P^2 x P^2 (8)",
                      from_relations({"x1+x2+x3 = x7", "x4+x5+x6 = x8", "x7+x8 = 0"}), 3,
                      {"x1+x2+x3 = x7", "x4+x5+x6 = x8", "x7+x8 = 0"}));
  out.push_back(entry(9, "P^1 x P^1 x P_{P^2}(O+O(1))",
                      product_fan(product_fan(p1, p1), projectivize_split(p2, {hyperplane(p2, 1)})), 4));
  Fan five = p1;
  for (int i = 0; i < 4; ++i) five = product_fan(five, p1);
  out.push_back(entry(10, "P^1 x P^1 x P^1 x P^1 x P^1", std::move(five), 5));
  return out;
}

Fan del_pezzo_degree7() {
  return make_fan(2, {int_vector({1, 0}), int_vector({1, 1}), int_vector({0, 1}), int_vector({-1, 0}), int_vector({0, -1})},
                  {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
}

std::vector<LabeledFan> seven_fold_tower() {
  std::vector<LabeledFan> tower{{del_pezzo_degree7(), default_labels(5)}};
  for (const char* name : {"x5", "x4", "x3", "x2", "x1"}) {
    const LabeledFan& prev = tower.back();
    const auto it = std::find(prev.labels.begin(), prev.labels.end(), name);
    const auto x = static_cast<std::size_t>(it - prev.labels.begin());
    LabeledFan next{h_construction(prev.fan, x, 2), {}};
    for (const auto& l : prev.labels)
      if (l != name) next.labels.push_back(l);
    next.labels.push_back(name);
    next.labels.push_back(std::string(name) + "'");
    tower.push_back(std::move(next));
  }
  return tower;
}

LabeledFan example_seven_fold_labeled() {
  const LabeledFan top = seven_fold_tower().back();
  std::vector<std::size_t> order;
  LabeledFan out;
  for (int i = 1; i <= 5; ++i)
    for (const std::string suffix : {"", "'"}) {
      const std::string name = "x" + std::to_string(i) + suffix;
      const auto it = std::find(top.labels.begin(), top.labels.end(), name);
      order.push_back(static_cast<std::size_t>(it - top.labels.begin()));
      out.labels.push_back(name);
    }
  out.fan = reorder_rays(top.fan, order);
  return out;
}

Fan example_seven_fold() { return example_seven_fold_labeled().fan; }

bool is_splitting_fan(const Fan& fan) {
  const auto cols = primitive_collections(fan);
  RayMask seen = 0;
  for (const auto& c : cols) {
    const RayMask m = to_mask(c.rays);
    if (seen & m) return false;
    seen |= m;
  }
  return true;
}

std::vector<PrimitiveCollection> split_bundle_relations(const Fan& fan) {
  const auto rels = all_primitive_relations(fan);
  std::vector<PrimitiveCollection> out;
  for (std::size_t i = 0; i < rels.size(); ++i) {
    if (!rels[i].sigma.empty()) continue;
    const RayMask m = to_mask(rels[i].collection.rays);
    bool disjoint = true;
    for (std::size_t j = 0; j < rels.size(); ++j)
      if (j != i && (to_mask(rels[j].collection.rays) & m)) disjoint = false;
    if (disjoint) out.push_back(rels[i].collection);
  }
  return out;
}

namespace {

long det2(const IntVector& a, const IntVector& b) {
  return a[0].get_si() * b[1].get_si() - a[1].get_si() * b[0].get_si();
}

// Half-plane then cross product: a total angular order starting at angle -pi.
bool angle_less(const IntVector& a, const IntVector& b) {
  auto upper = [](const IntVector& v) { return v[1] > 0 || (v[1] == 0 && v[0] > 0); };
  const bool ua = upper(a), ub = upper(b);
  if (ua != ub) return !ua;
  return det2(a, b) > 0;
}

struct SurfaceSearch {
  std::vector<IntVector> vecs;
  std::vector<std::vector<std::size_t>> cycles;
  std::vector<std::size_t> path;

  // u + w == a v with a >= 2 makes {u, w} a primitive collection of degree <= 0
  static bool bad_corner(const IntVector& u, const IntVector& v, const IntVector& w) {
    const IntVector s = u + w;
    const long a = v[0] != 0 ? s[0].get_si() / v[0].get_si() : s[1].get_si() / v[1].get_si();
    return a >= 2 && s == Integer(a) * v;
  }

  void extend() {
    const std::size_t last = path.back();
    const IntVector& v0 = vecs[path.front()];
    const std::size_t k = path.size();
    if (k >= 3 && det2(vecs[last], v0) == 1) {
      const IntVector& v1 = vecs[path[1]];
      if (!bad_corner(vecs[path[k - 2]], vecs[last], v0) && !bad_corner(vecs[last], v0, v1)) cycles.push_back(path);
    }
    for (std::size_t j = last + 1; j < vecs.size(); ++j) {
      if (det2(vecs[last], vecs[j]) != 1) continue;
      if (k >= 2 && bad_corner(vecs[path[k - 2]], vecs[last], vecs[j])) continue;
      path.push_back(j);
      extend();
      path.pop_back();
    }
  }
};

}  // namespace

std::vector<Fan> enumerate_smooth_fano_surfaces(int bound) {
  if (bound < 1) throw DomainError("coordinate bound must be at least 1");
  SurfaceSearch s;
  for (long x = -bound; x <= bound; ++x)
    for (long y = -bound; y <= bound; ++y)
      if (std::gcd(x, y) == 1) s.vecs.push_back(int_vector({x, y}));
  std::sort(s.vecs.begin(), s.vecs.end(), angle_less);
  for (std::size_t start = 0; start < s.vecs.size(); ++start) {
    s.path = {start};
    s.extend();
  }

  // Small coordinates first so each class is represented by its tidiest fan.
  auto spread = [&](const std::vector<std::size_t>& cyc) {
    long m = 0;
    for (auto i : cyc) m = std::max({m, std::abs(s.vecs[i][0].get_si()), std::abs(s.vecs[i][1].get_si())});
    return m;
  };
  std::stable_sort(s.cycles.begin(), s.cycles.end(),
                   [&](const auto& a, const auto& b) { return spread(a) < spread(b); });

  std::vector<Fan> reps;
  std::vector<FanFingerprint> prints;
  for (const auto& cyc : s.cycles) {
    std::vector<IntVector> rays;
    std::vector<Cone> cones;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      rays.push_back(s.vecs[cyc[i]]);
      cones.push_back({i, (i + 1) % cyc.size()});
    }
    Fan f = make_fan(2, std::move(rays), std::move(cones));
    if (!is_fano(f)) continue;
    FanFingerprint fp = fingerprint(f);
    bool fresh = true;
    for (std::size_t r = 0; r < reps.size() && fresh; ++r)
      if (prints[r] == fp && find_isomorphism(f, reps[r])) fresh = false;
    if (fresh) {
      reps.push_back(std::move(f));
      prints.push_back(std::move(fp));
    }
  }
  return reps;
}

}  // namespace toric
