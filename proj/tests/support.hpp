#pragma once

// Shared fixtures and hand-rolled generators for the test binaries.

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "toric/fan.hpp"
#include "toric/primitive.hpp"

namespace fixtures {

using namespace toric;

inline IntVector iv(std::initializer_list<long> v) { return int_vector(v); }

// Fans written out by hand, independent of the constructions module.
inline Fan p1() { return make_fan(1, {iv({1}), iv({-1})}, {{0}, {1}}); }

inline Fan p2() { return make_fan(2, {iv({1, 0}), iv({0, 1}), iv({-1, -1})}, {{0, 1}, {1, 2}, {0, 2}}); }

inline Fan p1xp1() {
  return make_fan(2, {iv({1, 0}), iv({0, 1}), iv({-1, 0}), iv({0, -1})}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

// Hirzebruch surface F_a: rays (1,0), (0,1), (-1,a), (0,-1).
inline Fan hirzebruch(long a) {
  return make_fan(2, {iv({1, 0}), iv({0, 1}), iv({-1, a}), iv({0, -1})}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

inline Fan dp7() {
  return make_fan(2, {iv({1, 0}), iv({1, 1}), iv({0, 1}), iv({-1, 0}), iv({0, -1})},
                  {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
}

inline Fan dp6() {
  return make_fan(2, {iv({1, 0}), iv({1, 1}), iv({0, 1}), iv({-1, 0}), iv({-1, -1}), iv({0, -1})},
                  {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
}

// Blow-up of P^3 at a torus-fixed point, written out directly.
inline Fan blowup_p3_point() {
  std::vector<IntVector> rays{iv({1, 0, 0}), iv({0, 1, 0}), iv({0, 0, 1}), iv({-1, -1, -1}), iv({1, 1, 1})};
  // The cone {e1,e2,e3} is split into three.
  std::vector<Cone> cones{{0, 1, 3}, {0, 2, 3}, {1, 2, 3}, {0, 1, 4}, {0, 2, 4}, {1, 2, 4}};
  return make_fan(3, rays, cones);
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 g(20240611);
  return g;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

// Product of random elementary operations: unimodular by construction.
inline IntMatrix random_unimodular(std::size_t d, int steps = 12) {
  IntMatrix m = IntMatrix::identity(d);
  if (d == 1) {
    if (uniform(0, 1)) m(0, 0) = -1;
    return m;
  }
  for (int s = 0; s < steps; ++s) {
    const auto i = static_cast<std::size_t>(uniform(0, static_cast<long>(d) - 1));
    auto j = static_cast<std::size_t>(uniform(0, static_cast<long>(d) - 2));
    if (j >= i) ++j;
    switch (uniform(0, 2)) {
      case 0: {  // row_i += k row_j
        const long k = uniform(-2, 2);
        for (std::size_t c = 0; c < d; ++c) m(i, c) += k * m(j, c);
        break;
      }
      case 1: m.swap_rows(i, j); break;
      default:
        for (std::size_t c = 0; c < d; ++c) m(i, c) = -m(i, c);
    }
  }
  return m;
}

inline std::vector<std::size_t> random_permutation(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng());
  return p;
}

// Image of a fan under a lattice automorphism, rays listed in a shuffled order.
inline Fan transformed(const Fan& f, const IntMatrix& m, const std::vector<std::size_t>& order) {
  std::vector<IntVector> rays;
  std::vector<std::size_t> where(f.ray_count());
  for (std::size_t k = 0; k < order.size(); ++k) {
    rays.push_back(m * f.ray(order[k]));
    where[order[k]] = k;
  }
  std::vector<Cone> cones;
  for (const auto& c : f.max_cones()) {
    Cone nc;
    for (auto i : c) nc.push_back(where[i]);
    cones.push_back(nc);
  }
  return make_fan(f.dim(), rays, cones);
}

inline Fan random_copy(const Fan& f) { return transformed(f, random_unimodular(f.dim()), random_permutation(f.ray_count())); }

// Relations carried to a new ray numbering: new index of old ray i is where[i].
inline std::vector<RelationSpec> relabel(const std::vector<RelationSpec>& specs, const std::vector<std::size_t>& where) {
  std::vector<RelationSpec> out;
  for (const auto& s : specs) {
    RelationSpec t;
    for (auto i : s.collection) t.collection.push_back(where[i]);
    for (const auto& [i, b] : s.rhs) t.rhs.emplace_back(where[i], b);
    std::sort(t.collection.begin(), t.collection.end());
    std::sort(t.rhs.begin(), t.rhs.end());
    out.push_back(t);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fixtures
