#include "toric/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "toric/primitive.hpp"

namespace toric {

FanFingerprint fingerprint(const Fan& fan) {
  FanFingerprint fp;
  fp.dim = fan.dim();
  fp.rays = fan.ray_count();
  fp.cones = fan.max_cones().size();
  for (const auto& rel : all_primitive_relations(fan)) {
    IntVector b = rel.coefficients;
    std::sort(b.begin(), b.end());
    fp.relations.emplace_back(rel.collection.rays.size(), std::move(b), rel.degree);
  }
  std::sort(fp.relations.begin(), fp.relations.end());
  return fp;
}

std::string to_string(const FanFingerprint& fp) {
  std::ostringstream os;
  os << "(" << fp.dim << ", " << fp.rays << ", " << fp.cones << ", {";
  for (std::size_t i = 0; i < fp.relations.size(); ++i) {
    const auto& [m, b, deg] = fp.relations[i];
    os << (i ? ", " : "") << "(" << m << ", " << to_string(b) << ", " << deg.get_str() << ")";
  }
  os << "})";
  return os.str();
}

namespace {

// Lexicographic order on cones by their ray vectors.
bool cone_less(const Fan& f, const Cone& x, const Cone& y) {
  std::vector<IntVector> vx, vy;
  for (auto i : x) vx.push_back(f.ray(i));
  for (auto i : y) vy.push_back(f.ray(i));
  std::sort(vx.begin(), vx.end(), lex_less);
  std::sort(vy.begin(), vy.end(), lex_less);
  return std::lexicographical_compare(vx.begin(), vx.end(), vy.begin(), vy.end(), lex_less);
}

// Applies m to every ray of a and checks the result against b.
std::optional<std::vector<std::size_t>> induced_permutation(const Fan& a, const Fan& b, const IntMatrix& m,
                                                            const std::set<RayMask>& b_cones) {
  std::vector<std::size_t> perm(a.ray_count());
  std::vector<bool> hit(b.ray_count(), false);
  for (std::size_t i = 0; i < a.ray_count(); ++i) {
    auto j = b.find_ray(m * a.ray(i));
    if (!j || hit[*j]) return std::nullopt;
    hit[*j] = true;
    perm[i] = *j;
  }
  for (const auto& c : a.max_cones()) {
    RayMask image = 0;
    for (auto i : c) image |= RayMask{1} << perm[i];
    if (!b_cones.count(image)) return std::nullopt;
  }
  return perm;
}

}  // namespace

std::optional<UnimodularMap> find_isomorphism(const Fan& a, const Fan& b) {
  if (a.dim() != b.dim() || a.ray_count() != b.ray_count() || a.max_cones().size() != b.max_cones().size())
    return std::nullopt;
  const std::size_t d = a.dim();

  const auto& cones = a.max_cones();
  const Cone anchor = *std::min_element(cones.begin(), cones.end(),
                                        [&](const Cone& x, const Cone& y) { return cone_less(a, x, y); });
  std::vector<IntVector> anchor_rays;
  for (auto i : anchor) anchor_rays.push_back(a.ray(i));
  const auto a_inv = inverse(to_rational(IntMatrix::from_columns(anchor_rays, d)));
  if (!a_inv) throw InvariantError("maximal cone is not full-dimensional");

  std::set<RayMask> b_cones;
  for (std::size_t c = 0; c < b.max_cones().size(); ++c) b_cones.insert(b.cone_mask(c));

  for (const auto& target : b.max_cones()) {
    std::vector<std::size_t> order(d);
    std::iota(order.begin(), order.end(), 0);
    do {
      std::vector<IntVector> cols;
      for (auto k : order) cols.push_back(b.ray(target[k]));
      const RatMatrix m = to_rational(IntMatrix::from_columns(cols, d)) * *a_inv;
      IntMatrix mi(d, d);
      bool integral = true;
      for (std::size_t r = 0; r < d && integral; ++r)
        for (std::size_t c = 0; c < d && integral; ++c) {
          if (m(r, c).get_den() != 1) integral = false;
          else mi(r, c) = m(r, c).get_num();
        }
      if (!integral) continue;
      const Integer det = determinant(mi);
      if (det != 1 && det != -1) continue;
      if (auto perm = induced_permutation(a, b, mi, b_cones)) return UnimodularMap{mi, std::move(*perm)};
    } while (std::next_permutation(order.begin(), order.end()));
  }
  return std::nullopt;
}

bool is_valid_isomorphism(const Fan& a, const Fan& b, const UnimodularMap& map) {
  if (a.dim() != b.dim() || map.matrix.rows() != a.dim() || map.matrix.cols() != a.dim()) return false;
  const Integer det = determinant(map.matrix);
  if (det != 1 && det != -1) return false;
  if (a.ray_count() != b.ray_count() || a.max_cones().size() != b.max_cones().size()) return false;
  std::set<RayMask> b_cones;
  for (std::size_t c = 0; c < b.max_cones().size(); ++c) b_cones.insert(b.cone_mask(c));
  auto perm = induced_permutation(a, b, map.matrix, b_cones);
  return perm && *perm == map.ray_permutation;
}

}  // namespace toric
