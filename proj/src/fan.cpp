#include "toric/fan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "toric/linear_feasibility.hpp"

namespace toric {

RayMask to_mask(const std::vector<std::size_t>& indices) {
  RayMask m = 0;
  for (auto i : indices) {
    if (i >= kMaxRays) throw DomainError("ray index exceeds the 64-ray limit");
    m |= RayMask{1} << i;
  }
  return m;
}

std::vector<std::size_t> from_mask(RayMask mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; mask; ++i, mask >>= 1)
    if (mask & 1) out.push_back(i);
  return out;
}

bool lex_less(const IntVector& a, const IntVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Fan Fan::assemble(std::size_t dim, std::vector<IntVector> rays, std::vector<Cone> cones) {
  Fan f;
  f.dim_ = dim;
  f.rays_ = std::move(rays);
  f.cones_ = std::move(cones);
  for (const auto& cone : f.cones_) {
    std::vector<IntVector> cols;
    for (auto i : cone) cols.push_back(f.rays_[i]);
    IntMatrix r = IntMatrix::from_columns(cols, dim);
    f.dets_.push_back(determinant(r));
    f.adjugates_.push_back(adjugate(r));
    RayMask m = to_mask(cone);
    f.masks_.push_back(m);
    // every subset of a simplicial cone is a face
    for (RayMask s = m;; s = (s - 1) & m) {
      f.faces_.insert(s);
      if (s == 0) break;
    }
  }
  return f;
}

RatVector Fan::cone_coordinates(std::size_t c, const IntVector& point) const {
  IntVector scaled = adjugates_[c] * point;
  RatVector out(scaled.size());
  for (std::size_t i = 0; i < scaled.size(); ++i) {
    out[i] = Rational(scaled[i], dets_[c]);
    out[i].canonicalize();
  }
  return out;
}

std::optional<std::size_t> Fan::find_ray(const IntVector& v) const {
  for (std::size_t i = 0; i < rays_.size(); ++i)
    if (rays_[i] == v) return i;
  return std::nullopt;
}

namespace {

std::string cone_str(const Cone& c) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << '}';
  return os.str();
}

int sign(const Integer& x) { return sgn(x); }

// Dual functional of ray `i` of cone c, oriented to be positive on that ray.
IntVector facet_normal(const Fan& f, std::size_t c, std::size_t i) {
  IntVector u = f.cone_adjugate(c).row(i);
  if (f.cone_determinant(c) < 0)
    for (auto& x : u) x = -x;
  return u;
}

// Some facet hyperplane of cone c1 weakly separates cone c2 and cuts it
// exactly in the shared rays, which forces c1 and c2 to meet in that face.
bool separated_by_facet(const Fan& f, std::size_t c1, std::size_t c2, RayMask shared) {
  const Cone& a = f.max_cones()[c1];
  const Cone& b = f.max_cones()[c2];
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (shared & (RayMask{1} << a[i])) continue;
    IntVector u = facet_normal(f, c1, i);
    bool ok = true;
    RayMask on_plane = 0;
    for (auto r : b) {
      int s = sign(dot(u, f.ray(r)));
      if (s > 0) {
        ok = false;
        break;
      }
      if (s == 0) on_plane |= RayMask{1} << r;
    }
    if (ok && on_plane == shared) return true;
  }
  return false;
}

// Exact test for a point of c1 outside the shared face lying in c2.
bool overlap_beyond_face(const Fan& f, std::size_t c1, std::size_t c2, RayMask shared) {
  const Cone& a = f.max_cones()[c1];
  const Cone& b = f.max_cones()[c2];
  const std::size_t d = f.dim();
  RatMatrix m(d + 1, 2 * d);
  RatVector rhs(d + 1);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) {
      m(i, j) = f.ray(a[j])[i];
      m(i, d + j) = -f.ray(b[j])[i];
    }
  for (std::size_t j = 0; j < d; ++j)
    if (!(shared & (RayMask{1} << a[j]))) m(d, j) = 1;
  rhs[d] = 1;
  return has_nonnegative_solution_simplex(m, rhs);
}

void check_proper_intersections(const Fan& f) {
  const auto& cones = f.max_cones();
  const std::size_t d = f.dim();
  for (std::size_t c1 = 0; c1 < cones.size(); ++c1)
    for (std::size_t c2 = c1 + 1; c2 < cones.size(); ++c2) {
      RayMask shared = f.cone_mask(c1) & f.cone_mask(c2);
      const std::size_t nshared = static_cast<std::size_t>(__builtin_popcountll(shared));
      bool proper;
      if (nshared + 1 == d) {
        // Adjacent: opposite rays must lie strictly on opposite sides.
        std::size_t i = 0;
        while (shared & (RayMask{1} << cones[c1][i])) ++i;
        std::size_t other = 0;
        for (auto r : cones[c2])
          if (!(shared & (RayMask{1} << r))) other = r;
        proper = sign(dot(facet_normal(f, c1, i), f.ray(other))) < 0;
      } else {
        proper = separated_by_facet(f, c1, c2, shared) || separated_by_facet(f, c2, c1, shared) ||
                 !overlap_beyond_face(f, c1, c2, shared);
      }
      if (!proper)
        throw DomainError("maximal cones " + cone_str(cones[c1]) + " and " + cone_str(cones[c2]) +
                          " overlap outside a common face");
    }
}

}  // namespace

Fan make_fan(std::size_t dim, std::vector<IntVector> rays, std::vector<Cone> max_cones) {
  if (dim == 0) throw DomainError("fan dimension must be positive");
  if (rays.empty()) throw DomainError("fan has no rays");
  if (rays.size() > kMaxRays) throw DomainError("fans are limited to 64 rays");
  if (max_cones.empty()) throw DomainError("fan has no maximal cones");
  for (std::size_t i = 0; i < rays.size(); ++i) {
    const auto& r = rays[i];
    if (r.size() != dim) throw DomainError("ray " + std::to_string(i) + " has wrong length");
    if (is_zero(r)) throw DomainError("ray " + std::to_string(i) + " is zero");
    if (gcd_of(r) != 1) throw DomainError("non-primitive ray " + to_string(r));
  }
  {
    std::set<IntVector, decltype(&lex_less)> seen(&lex_less);
    for (const auto& r : rays)
      if (!seen.insert(r).second) throw DomainError("duplicate ray " + to_string(r));
  }
  std::vector<bool> used(rays.size(), false);
  for (auto& cone : max_cones) {
    if (cone.size() != dim)
      throw DomainError("cone " + cone_str(cone) + " does not have " + std::to_string(dim) + " rays");
    std::sort(cone.begin(), cone.end());
    if (std::adjacent_find(cone.begin(), cone.end()) != cone.end())
      throw DomainError("cone " + cone_str(cone) + " repeats a ray index");
    for (auto i : cone) {
      if (i >= rays.size()) throw DomainError("cone " + cone_str(cone) + " has an out-of-range index");
      used[i] = true;
    }
  }
  {
    std::set<Cone> seen;
    for (const auto& c : max_cones)
      if (!seen.insert(c).second) throw DomainError("duplicate cone " + cone_str(c));
  }
  for (std::size_t i = 0; i < rays.size(); ++i)
    if (!used[i]) throw DomainError("ray " + std::to_string(i) + " lies in no maximal cone");

  Fan f = Fan::assemble(dim, std::move(rays), std::move(max_cones));
  for (std::size_t c = 0; c < f.max_cones().size(); ++c)
    if (f.cone_determinant(c) == 0)
      throw DomainError("cone " + cone_str(f.max_cones()[c]) + " is not full-dimensional");
  check_proper_intersections(f);
  return f;
}

bool is_smooth(const Fan& fan) {
  for (std::size_t c = 0; c < fan.max_cones().size(); ++c)
    if (abs(fan.cone_determinant(c)) != 1) return false;
  return true;
}

bool is_complete(const Fan& fan) {
  const auto& cones = fan.max_cones();
  const std::size_t n = cones.size();

  // Each ridge lies in exactly two maximal cones.
  std::map<RayMask, std::vector<std::size_t>> ridges;
  for (std::size_t c = 0; c < n; ++c)
    for (auto r : cones[c]) ridges[fan.cone_mask(c) & ~(RayMask{1} << r)].push_back(c);
  for (const auto& [mask, owners] : ridges)
    if (owners.size() != 2) return false;

  // Adjacency graph is connected.
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [mask, owners] : ridges) parent[find(owners[0])] = find(owners[1]);
  for (std::size_t c = 1; c < n; ++c)
    if (find(c) != find(0)) return false;

  // Guard: generic random points lie in exactly one cone interior.
  std::mt19937_64 rng(0x5eed'f00dULL);
  std::uniform_int_distribution<long> coord(-(1L << 20), 1L << 20);
  int accepted = 0;
  for (int attempt = 0; accepted < 32 && attempt < 1000; ++attempt) {
    IntVector p(fan.dim());
    for (auto& x : p) x = coord(rng);
    int interior = 0;
    bool boundary = false;
    for (std::size_t c = 0; c < n && !boundary; ++c) {
      RatVector lam = fan.cone_coordinates(c, p);
      bool nonneg = std::all_of(lam.begin(), lam.end(), [](const Rational& x) { return x >= 0; });
      if (!nonneg) continue;
      if (std::any_of(lam.begin(), lam.end(), [](const Rational& x) { return x == 0; }))
        boundary = true;
      else
        ++interior;
    }
    if (boundary) continue;
    ++accepted;
    if (interior != 1) return false;
  }
  return accepted == 32;
}

Fan canonical_form(const Fan& fan) {
  std::vector<std::size_t> order(fan.ray_count());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return lex_less(fan.ray(a), fan.ray(b)); });
  return reorder_rays(fan, order);
}

Fan reorder_rays(const Fan& fan, const std::vector<std::size_t>& order) {
  if (order.size() != fan.ray_count()) throw DomainError("reorder_rays: permutation has wrong length");
  std::vector<std::size_t> new_index(fan.ray_count(), fan.ray_count());
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (order[k] >= fan.ray_count() || new_index[order[k]] != fan.ray_count())
      throw DomainError("reorder_rays: not a permutation");
    new_index[order[k]] = k;
  }
  std::vector<IntVector> rays;
  for (std::size_t k = 0; k < order.size(); ++k) {
    rays.push_back(fan.ray(order[k]));
  }
  std::vector<Cone> cones;
  for (const auto& c : fan.max_cones()) {
    Cone nc;
    for (auto i : c) nc.push_back(new_index[i]);
    std::sort(nc.begin(), nc.end());
    cones.push_back(std::move(nc));
  }
  std::sort(cones.begin(), cones.end());
  return Fan::assemble(fan.dim(), std::move(rays), std::move(cones));
}

bool same_fan(const Fan& a, const Fan& b) { return canonical_form(a) == canonical_form(b); }

}  // namespace toric
