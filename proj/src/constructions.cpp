#include "toric/constructions.hpp"

#include <algorithm>
#include <set>

#include "toric/mori.hpp"

namespace toric {

namespace {

IntVector unit(std::size_t dim, std::size_t i) {
  IntVector v(dim);
  v[i] = 1;
  return v;
}

IntVector zero_extend(const IntVector& v, std::size_t dim) {
  IntVector out = v;
  out.resize(dim);
  return out;
}

void require_smooth_complete(const Fan& fan, const char* what) {
  if (!is_smooth(fan) || !is_complete(fan))
    throw DomainError(std::string(what) + ": input fan must be smooth and complete");
}

// Every k-subset of {0..n-1}, as sorted index lists.
std::vector<std::vector<std::size_t>> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
  do {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (pick[i]) s.push_back(i);
    out.push_back(std::move(s));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

void check_h_args(const Fan& fan, std::size_t x, std::size_t p) {
  if (x >= fan.ray_count()) throw DomainError("ray index out of range");
  if (p < 2) throw DomainError("H-construction needs p >= 2");
}

// z_1..z_p in dimension d+p-1
std::vector<IntVector> z_rays(const IntVector& x, std::size_t d, std::size_t p) {
  const std::size_t dim = d + p - 1;
  std::vector<IntVector> z;
  IntVector last = zero_extend(x, dim);
  for (std::size_t i = 0; i + 1 < p; ++i) {
    z.push_back(unit(dim, d + i));
    last[d + i] = -1;
  }
  z.push_back(std::move(last));
  return z;
}

}  // namespace

TorusDivisor prime_divisor(const Fan& fan, std::size_t ray) {
  if (ray >= fan.ray_count()) throw DomainError("ray index out of range");
  TorusDivisor d{IntVector(fan.ray_count())};
  d.coeffs[ray] = 1;
  return d;
}

Fan projective_space_fan(std::size_t d) {
  if (d == 0) throw DomainError("projective space needs d >= 1");
  std::vector<IntVector> rays;
  IntVector last(d);
  for (std::size_t i = 0; i < d; ++i) {
    rays.push_back(unit(d, i));
    last[i] = -1;
  }
  rays.push_back(last);
  return make_fan(d, std::move(rays), subsets_of_size(d + 1, d));
}

Fan product_fan(const Fan& a, const Fan& b) {
  const std::size_t dim = a.dim() + b.dim();
  std::vector<IntVector> rays;
  for (const auto& r : a.rays()) rays.push_back(zero_extend(r, dim));
  for (const auto& r : b.rays()) {
    IntVector v(dim);
    std::copy(r.begin(), r.end(), v.begin() + static_cast<long>(a.dim()));
    rays.push_back(std::move(v));
  }
  std::vector<Cone> cones;
  for (const auto& ca : a.max_cones())
    for (const auto& cb : b.max_cones()) {
      Cone c = ca;
      for (auto i : cb) c.push_back(i + a.ray_count());
      cones.push_back(std::move(c));
    }
  return make_fan(dim, std::move(rays), std::move(cones));
}

Fan projectivize_split(const Fan& base, const std::vector<TorusDivisor>& twists) {
  require_smooth_complete(base, "projectivize_split");
  const std::size_t d = base.dim();
  const std::size_t r = twists.size();
  if (r == 0) throw DomainError("projectivize_split needs at least one twist (rank >= 2)");
  for (const auto& t : twists)
    if (t.coeffs.size() != base.ray_count()) throw DomainError("twist length must equal the base ray count");

  const std::size_t dim = d + r;
  const std::size_t n = base.ray_count();
  std::vector<IntVector> rays;
  for (std::size_t v = 0; v < n; ++v) {
    IntVector lifted = zero_extend(base.ray(v), dim);
    for (std::size_t j = 0; j < r; ++j) lifted[d + j] = twists[j].coeffs[v];
    rays.push_back(std::move(lifted));
  }
  IntVector f0(dim);
  for (std::size_t j = 0; j < r; ++j) {
    rays.push_back(unit(dim, d + j));
    f0[d + j] = -1;
  }
  rays.push_back(std::move(f0));

  std::vector<Cone> cones;
  for (const auto& bc : base.max_cones())
    for (const auto& fibre : subsets_of_size(r + 1, r)) {
      Cone c = bc;
      for (auto k : fibre) c.push_back(n + k);
      cones.push_back(std::move(c));
    }
  return make_fan(dim, std::move(rays), std::move(cones));
}

Fan h_bundle_fan(const Fan& fan, std::size_t x, std::size_t p) {
  check_h_args(fan, x, p);
  const std::size_t d = fan.dim();
  const std::size_t dim = d + p - 1;
  const std::size_t n = fan.ray_count();
  std::vector<IntVector> rays;
  for (const auto& v : fan.rays()) rays.push_back(zero_extend(v, dim));
  for (auto& z : z_rays(fan.ray(x), d, p)) rays.push_back(std::move(z));

  std::vector<Cone> cones;
  for (const auto& sigma : fan.max_cones())
    for (const auto& zs : subsets_of_size(p, p - 1)) {
      Cone c = sigma;
      for (auto k : zs) c.push_back(n + k);
      cones.push_back(std::move(c));
    }
  return make_fan(dim, std::move(rays), std::move(cones));
}

Fan blow_down(const Fan& fan, const PrimitiveRelation& rel) {
  if (rel.sigma.size() != 1 || rel.coefficients.size() != 1 || rel.coefficients[0] != 1)
    throw DomainError("blow-down needs a relation z_1+...+z_p = x with a single unit-coefficient ray");
  if (!is_extremal(fan, rel.collection)) throw DomainError("blow-down relation is not extremal");
  const std::size_t x = rel.sigma[0];
  const auto& zs = rel.collection.rays;

  std::set<Cone> cones;
  for (const auto& c : fan.max_cones()) {
    if (!std::binary_search(c.begin(), c.end(), x)) {
      cones.insert(c);
      continue;
    }
    Cone s;
    for (auto i : c)
      if (i != x) s.push_back(i);
    std::vector<std::size_t> missing;
    for (auto z : zs)
      if (!std::binary_search(s.begin(), s.end(), z)) missing.push_back(z);
    if (missing.size() != 1)
      throw DomainError("cone containing the exceptional ray does not miss exactly one collection ray");
    s.push_back(missing[0]);
    std::sort(s.begin(), s.end());
    cones.insert(std::move(s));
  }

  std::vector<IntVector> rays;
  for (std::size_t i = 0; i < fan.ray_count(); ++i)
    if (i != x) rays.push_back(fan.ray(i));
  std::vector<Cone> reindexed;
  for (const auto& c : cones) {
    Cone nc;
    for (auto i : c) nc.push_back(i > x ? i - 1 : i);
    reindexed.push_back(std::move(nc));
  }
  Fan out = make_fan(fan.dim(), std::move(rays), std::move(reindexed));
  if (!is_smooth(out) || !is_complete(out)) throw DomainError("blow-down result is not smooth and complete");
  return out;
}

std::size_t h_ray_index(std::size_t old_index, std::size_t x) { return old_index > x ? old_index - 1 : old_index; }

Fan h_construction(const Fan& fan, std::size_t x, std::size_t p) {
  check_h_args(fan, x, p);
  const std::size_t d = fan.dim();
  const std::size_t dim = d + p - 1;
  const std::size_t n = fan.ray_count();
  std::vector<IntVector> rays;
  for (std::size_t i = 0; i < n; ++i)
    if (i != x) rays.push_back(zero_extend(fan.ray(i), dim));
  for (auto& z : z_rays(fan.ray(x), d, p)) rays.push_back(std::move(z));

  const std::size_t z0 = n - 1;
  std::set<Cone> cones;
  for (const auto& sigma : fan.max_cones()) {
    Cone base;
    for (auto i : sigma)
      if (i != x) base.push_back(h_ray_index(i, x));
    if (base.size() == sigma.size()) {
      for (const auto& zs : subsets_of_size(p, p - 1)) {
        Cone c = base;
        for (auto k : zs) c.push_back(z0 + k);
        cones.insert(std::move(c));
      }
    } else {
      Cone c = base;
      for (std::size_t k = 0; k < p; ++k) c.push_back(z0 + k);
      cones.insert(std::move(c));
    }
  }
  return make_fan(dim, std::move(rays), std::vector<Cone>(cones.begin(), cones.end()));
}

std::vector<RelationSpec> transform_relations(const Fan& fan, std::size_t x, std::size_t p) {
  check_h_args(fan, x, p);
  const std::size_t z0 = fan.ray_count() - 1;
  std::vector<RelationSpec> out;
  for (const auto& rel : all_primitive_relations(fan)) {
    RelationSpec s;
    for (auto i : rel.collection.rays) {
      if (i == x) {
        for (std::size_t k = 0; k < p; ++k) s.collection.push_back(z0 + k);
      } else {
        s.collection.push_back(h_ray_index(i, x));
      }
    }
    for (std::size_t j = 0; j < rel.sigma.size(); ++j) {
      if (rel.sigma[j] == x) {
        for (std::size_t k = 0; k < p; ++k) s.rhs.emplace_back(z0 + k, rel.coefficients[j]);
      } else {
        s.rhs.emplace_back(h_ray_index(rel.sigma[j], x), rel.coefficients[j]);
      }
    }
    std::sort(s.collection.begin(), s.collection.end());
    std::sort(s.rhs.begin(), s.rhs.end());
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Fan direct_fan_from_relations(std::size_t dim, const std::vector<RelationSpec>& relations) {
  if (relations.empty()) throw DomainError("need at least one relation");
  const std::size_t n = dim + relations.size();
  std::vector<RelationSpec> spec = relations;
  std::vector<int> owner(n, -1);
  for (std::size_t r = 0; r < spec.size(); ++r) {
    auto& s = spec[r];
    std::sort(s.collection.begin(), s.collection.end());
    std::sort(s.rhs.begin(), s.rhs.end());
    if (s.collection.size() < 2) throw DomainError("a primitive collection has at least two rays");
    for (auto i : s.collection) {
      if (i >= n) throw DomainError("ray label beyond dim + number of relations");
      if (owner[i] != -1) throw DomainError("collections must be pairwise disjoint");
      owner[i] = static_cast<int>(r);
    }
    for (const auto& [i, b] : s.rhs) {
      if (i >= n) throw DomainError("ray label beyond dim + number of relations");
      if (b <= 0) throw DomainError("relation coefficients must be positive");
    }
  }

  std::vector<bool> dependent(n, false);
  for (const auto& s : spec) dependent[s.collection.back()] = true;
  std::vector<std::optional<IntVector>> rays(n);
  std::size_t next_basis = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (!dependent[i]) rays[i] = unit(dim, next_basis++);

  std::vector<bool> solved(spec.size(), false);
  for (std::size_t done = 0; done < spec.size();) {
    bool progress = false;
    for (std::size_t r = 0; r < spec.size(); ++r) {
      if (solved[r]) continue;
      const auto& s = spec[r];
      const std::size_t target = s.collection.back();
      bool ready = true;
      for (auto i : s.collection)
        if (i != target && !rays[i]) ready = false;
      for (const auto& [i, b] : s.rhs)
        if (!rays[i]) ready = false;
      if (!ready) continue;
      IntVector v(dim);
      for (const auto& [i, b] : s.rhs) v = v + b * *rays[i];
      for (auto i : s.collection)
        if (i != target) v = v - *rays[i];
      rays[target] = std::move(v);
      solved[r] = true;
      ++done;
      progress = true;
    }
    if (!progress) throw DomainError("relations have a circular dependency; cannot solve rays");
  }

  // Maximal cones omit exactly one ray from each collection.
  std::vector<Cone> cones{{}};
  std::vector<std::size_t> free_rays;
  for (std::size_t i = 0; i < n; ++i)
    if (owner[i] == -1) free_rays.push_back(i);
  for (const auto& s : spec) {
    std::vector<Cone> next;
    for (const auto& partial : cones)
      for (auto omit : s.collection) {
        Cone c = partial;
        for (auto i : s.collection)
          if (i != omit) c.push_back(i);
        next.push_back(std::move(c));
      }
    cones = std::move(next);
  }
  for (auto& c : cones) c.insert(c.end(), free_rays.begin(), free_rays.end());

  std::vector<IntVector> ray_list;
  for (auto& r : rays) ray_list.push_back(std::move(*r));
  Fan fan = make_fan(dim, std::move(ray_list), std::move(cones));
  if (!is_smooth(fan) || !is_complete(fan)) throw DomainError("relations do not define a smooth complete fan");

  std::sort(spec.begin(), spec.end());
  if (sorted_specs(all_primitive_relations(fan)) != spec)
    throw DomainError("built fan's primitive relations differ from the requested ones");
  return fan;
}

}  // namespace toric
