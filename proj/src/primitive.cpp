#include "toric/primitive.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace toric {

bool is_primitive_collection(const Fan& fan, const PrimitiveCollection& p) {
  if (p.rays.size() < 2) return false;
  for (auto i : p.rays)
    if (i >= fan.ray_count()) return false;
  const RayMask mask = to_mask(p.rays);
  if (static_cast<std::size_t>(__builtin_popcountll(mask)) != p.rays.size()) return false;
  if (fan.is_face(mask)) return false;
  for (auto i : p.rays)
    if (!fan.is_face(mask & ~(RayMask{1} << i))) return false;
  return true;
}

std::vector<PrimitiveCollection> primitive_collections(const Fan& fan, std::size_t ray_cap) {
  const std::size_t n = fan.ray_count();
  if (n > ray_cap)
    throw DomainError("primitive collection search capped at " + std::to_string(ray_cap) + " rays, fan has " +
                      std::to_string(n));
  // Every primitive collection P arises exactly once as S + {r} with S the
  // face P minus its largest ray r.
  std::vector<PrimitiveCollection> out;
  for (RayMask face : fan.faces()) {
    std::size_t start = face == 0 ? 0 : 64 - static_cast<std::size_t>(__builtin_clzll(face));
    if (face == 0) continue;  // single rays are always faces
    for (std::size_t r = start; r < n; ++r) {
      RayMask cand = face | (RayMask{1} << r);
      if (fan.is_face(cand)) continue;
      bool minimal = true;
      for (RayMask rest = face; rest && minimal; rest &= rest - 1) {
        RayMask low = rest & (~rest + 1);
        if (!fan.is_face(cand & ~low)) minimal = false;
      }
      if (minimal) out.push_back({from_mask(cand)});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

PrimitiveRelation primitive_relation(const Fan& fan, const PrimitiveCollection& p) {
  if (!is_primitive_collection(fan, p)) throw DomainError("not a primitive collection of the fan");
  IntVector sum(fan.dim());
  for (auto i : p.rays) sum = sum + fan.ray(i);

  bool found = false;
  PrimitiveRelation rel;
  rel.collection = p;
  for (std::size_t c = 0; c < fan.max_cones().size(); ++c) {
    RatVector lam = fan.cone_coordinates(c, sum);
    if (std::any_of(lam.begin(), lam.end(), [](const Rational& x) { return x < 0; })) continue;
    std::vector<std::size_t> sigma;
    IntVector coeffs;
    std::vector<std::pair<std::size_t, Integer>> terms;
    const Cone& cone = fan.max_cones()[c];
    for (std::size_t j = 0; j < cone.size(); ++j) {
      if (lam[j] == 0) continue;
      if (lam[j].get_den() != 1)
        throw InvariantError("non-integral coefficient in primitive relation; fan is not smooth");
      terms.emplace_back(cone[j], lam[j].get_num());
    }
    std::sort(terms.begin(), terms.end());
    for (auto& [idx, b] : terms) {
      sigma.push_back(idx);
      coeffs.push_back(b);
    }
    if (!found) {
      rel.sigma = std::move(sigma);
      rel.coefficients = std::move(coeffs);
      found = true;
    } else if (sigma != rel.sigma || coeffs != rel.coefficients) {
      throw InvariantError("sum of a primitive collection lies in two cone interiors");
    }
  }
  if (!found) throw DomainError("no cone contains the sum of the collection; fan is not complete");

  for (auto y : rel.sigma)
    if (std::binary_search(p.rays.begin(), p.rays.end(), y))
      throw InvariantError("sigma(P) meets the primitive collection");

  rel.degree = static_cast<long>(p.rays.size());
  for (const auto& b : rel.coefficients) rel.degree -= b;
  rel.relation_class.assign(fan.ray_count(), 0);
  for (auto i : p.rays) rel.relation_class[i] = 1;
  for (std::size_t j = 0; j < rel.sigma.size(); ++j) rel.relation_class[rel.sigma[j]] = -rel.coefficients[j];
  return rel;
}

std::vector<PrimitiveRelation> all_primitive_relations(const Fan& fan) {
  std::vector<PrimitiveRelation> out;
  for (const auto& p : primitive_collections(fan)) out.push_back(primitive_relation(fan, p));
  return out;
}

RelationSpec to_spec(const PrimitiveRelation& rel) {
  RelationSpec s;
  s.collection = rel.collection.rays;
  for (std::size_t j = 0; j < rel.sigma.size(); ++j) s.rhs.emplace_back(rel.sigma[j], rel.coefficients[j]);
  return s;
}

std::vector<RelationSpec> sorted_specs(const std::vector<PrimitiveRelation>& rels) {
  std::vector<RelationSpec> out;
  for (const auto& r : rels) out.push_back(to_spec(r));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i + 1));
  return labels;
}

namespace {

std::string label_of(std::size_t i, const std::vector<std::string>& labels) {
  if (labels.empty()) return "x" + std::to_string(i + 1);
  if (i >= labels.size()) throw DomainError("no label for ray " + std::to_string(i));
  return labels[i];
}

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::size_t lookup_label(const std::string& label, const std::vector<std::string>& labels) {
  if (labels.empty()) {
    if (label.size() < 2 || label[0] != 'x' ||
        !std::all_of(label.begin() + 1, label.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw DomainError("bad ray label \"" + label + "\"");
    const unsigned long k = std::stoul(label.substr(1));
    if (k == 0) throw DomainError("ray labels are 1-based");
    return k - 1;
  }
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw DomainError("unknown ray label \"" + label + "\"");
  return static_cast<std::size_t>(it - labels.begin());
}

std::vector<std::pair<std::size_t, Integer>> parse_side(const std::string& side,
                                                       const std::vector<std::string>& labels) {
  std::vector<std::pair<std::size_t, Integer>> terms;
  if (trim(side) == "0") return terms;
  std::stringstream ss(side);
  std::string term;
  while (std::getline(ss, term, '+')) {
    term = trim(term);
    if (term.empty()) throw DomainError("empty term in relation");
    std::size_t k = 0;
    while (k < term.size() && std::isdigit(static_cast<unsigned char>(term[k]))) ++k;
    Integer coeff = 1;
    if (k > 0) {
      coeff = Integer(term.substr(0, k));
      if (k < term.size() && term[k] == '*') ++k;
    }
    std::string label = trim(term.substr(k));
    if (coeff <= 0) throw DomainError("relation coefficients must be positive");
    terms.emplace_back(lookup_label(label, labels), coeff);
  }
  std::sort(terms.begin(), terms.end());
  for (std::size_t i = 1; i < terms.size(); ++i)
    if (terms[i].first == terms[i - 1].first) throw DomainError("ray repeated within a relation side");
  return terms;
}

}  // namespace

std::string format_relation(const RelationSpec& rel, const std::vector<std::string>& labels) {
  std::ostringstream os;
  for (std::size_t i = 0; i < rel.collection.size(); ++i)
    os << (i ? "+" : "") << label_of(rel.collection[i], labels);
  os << " = ";
  if (rel.rhs.empty()) os << '0';
  for (std::size_t j = 0; j < rel.rhs.size(); ++j) {
    if (j) os << '+';
    if (rel.rhs[j].second != 1) os << rel.rhs[j].second.get_str() << '*';
    os << label_of(rel.rhs[j].first, labels);
  }
  return os.str();
}

std::string format_relation(const PrimitiveRelation& rel, const std::vector<std::string>& labels) {
  return format_relation(to_spec(rel), labels);
}

RelationSpec parse_relation(std::string_view text, const std::vector<std::string>& labels) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos || text.find('=', eq + 1) != std::string_view::npos)
    throw DomainError("relation must contain exactly one '='");
  RelationSpec s;
  for (auto& [idx, b] : parse_side(std::string(text.substr(0, eq)), labels)) {
    if (b != 1) throw DomainError("left-hand side of a primitive relation has unit coefficients");
    s.collection.push_back(idx);
  }
  if (s.collection.empty()) throw DomainError("relation has an empty left-hand side");
  s.rhs = parse_side(std::string(text.substr(eq + 1)), labels);
  for (const auto& [idx, b] : s.rhs)
    if (std::binary_search(s.collection.begin(), s.collection.end(), idx))
      throw DomainError("ray appears on both sides of a relation");
  return s;
}

}  // namespace toric
