#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <functional>
#include <json.hpp>
#include <ostream>
#include <sstream>

#include "toric/catalog.hpp"
#include "toric/constructions.hpp"
#include "toric/fan_io.hpp"
#include "toric/isomorphism.hpp"
#include "toric/mori.hpp"

namespace toric::cli {

namespace {

using json = nlohmann::ordered_json;

json to_json(const Integer& v) {
  if (v.fits_slong_p()) return v.get_si();
  return v.get_str();
}

json to_json(const IntVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

json fan_json(const Fan& fan) { return json::parse(fan_to_json(fan)); }

// Every command works on the canonical ray order, so ray labels x1, x2, ...
// and 1-based indices mean the same thing everywhere.
Fan load(const std::string& path) {
  try {
    return canonical_form(load_fan(path));
  } catch (const DomainError& e) {
    throw ParseError(path + ": invalid fan: " + e.what());
  }
}

std::vector<std::size_t> parse_index_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      const long k = std::stol(item, &pos);
      if (pos != item.size() || k < 1) throw std::invalid_argument(item);
      out.push_back(static_cast<std::size_t>(k - 1));
    } catch (const std::logic_error&) {
      throw DomainError("bad 1-based index list \"" + text + "\"");
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

IntVector parse_int_list(const std::string& text) {
  IntVector out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    Integer v;
    if (v.set_str(item, 10) != 0) throw DomainError("bad integer list \"" + text + "\"");
    out.push_back(v);
  }
  return out;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// ---- relations and verify ----

json relations_json(const Fan& fan, const std::vector<PrimitiveRelation>& rels) {
  (void)fan;
  const auto flags = extremal_flags(rels);
  json a = json::array();
  for (std::size_t i = 0; i < rels.size(); ++i) {
    json r;
    r["relation"] = format_relation(rels[i]);
    r["degree"] = to_json(rels[i].degree);
    r["extremal"] = static_cast<bool>(flags[i]);
    r["type"] = to_string(classify_relation_type(rels[i]).tag);
    a.push_back(std::move(r));
  }
  return a;
}

void print_relations(std::ostream& out, const std::vector<PrimitiveRelation>& rels) {
  const auto flags = extremal_flags(rels);
  for (std::size_t i = 0; i < rels.size(); ++i)
    out << "  " << format_relation(rels[i]) << "  degree " << rels[i].degree.get_str()
        << (flags[i] ? "  extremal " : "  ") << to_string(classify_relation_type(rels[i]).tag) << "\n";
}

int cmd_verify(const std::string& path, bool as_json, bool quiet, std::ostream& out) {
  const Fan fan = load(path);
  const bool smooth = is_smooth(fan);
  const bool complete = is_complete(fan);
  json report;
  report["smooth"] = smooth;
  report["complete"] = complete;
  report["dim"] = fan.dim();
  report["rays"] = fan.ray_count();
  if (!smooth || !complete) {
    if (as_json)
      out << report.dump() << "\n";
    else if (!quiet)
      out << "dim: " << fan.dim() << "\nrays: " << fan.ray_count() << "\nsmooth: " << yes_no(smooth)
          << "\ncomplete: " << yes_no(complete) << "\n";
    return 2;
  }
  const auto rels = all_primitive_relations(fan);
  const bool fano = std::all_of(rels.begin(), rels.end(), [](const PrimitiveRelation& r) { return r.degree > 0; });
  const PicClass k = anticanonical_class(fan);
  report["fano"] = fano;
  report["picard_rank"] = picard_rank(fan);
  report["anticanonical_class"] = to_json(k.coords);
  if (fano) report["index"] = to_json(fano_index(fan));
  report["relations"] = relations_json(fan, rels);
  if (as_json) {
    out << report.dump() << "\n";
  } else if (!quiet) {
    out << "dim: " << fan.dim() << "\nrays: " << fan.ray_count() << "\nsmooth: yes\ncomplete: yes\n"
        << "picard_rank: " << picard_rank(fan) << "\nfano: " << yes_no(fano) << "\n"
        << "anticanonical class: " << to_string(k.coords);
    if (fano) out << "  index = " << fano_index(fan).get_str();
    out << "\nrelations:\n";
    print_relations(out, rels);
  }
  return 0;
}

int cmd_relations(const std::string& path, bool as_json, std::ostream& out) {
  const Fan fan = load(path);
  if (!is_smooth(fan) || !is_complete(fan)) throw DomainError("relations need a smooth complete fan");
  const auto rels = all_primitive_relations(fan);
  if (as_json)
    out << relations_json(fan, rels).dump() << "\n";
  else
    print_relations(out, rels);
  return 0;
}

int cmd_iso(const std::string& a_path, const std::string& b_path, bool as_json, std::ostream& out) {
  const Fan a = load(a_path);
  const Fan b = load(b_path);
  for (const Fan* f : {&a, &b})
    if (!is_smooth(*f) || !is_complete(*f)) throw DomainError("isomorphism test needs smooth complete fans");
  const auto map = find_isomorphism(a, b);
  if (as_json) {
    json r;
    r["isomorphic"] = map.has_value();
    if (map) {
      json m = json::array();
      for (std::size_t i = 0; i < map->matrix.rows(); ++i) m.push_back(to_json(map->matrix.row(i)));
      r["matrix"] = m;
      json perm = json::array();
      for (auto j : map->ray_permutation) perm.push_back(j + 1);
      r["ray_permutation"] = perm;
    }
    out << r.dump() << "\n";
  } else if (map) {
    out << to_string(map->matrix) << "\n";
  } else {
    out << "not isomorphic\n";
  }
  return 0;
}

// ---- classify-check ----

struct Check {
  std::string name;
  bool pass = true;
  std::string detail;
};

using CheckBody = std::function<void(Check&)>;

void run_check(std::vector<Check>& checks, const std::string& name, const CheckBody& body) {
  Check c{name, true, ""};
  try {
    body(c);
  } catch (const std::exception& e) {
    c.pass = false;
    c.detail = e.what();
  }
  checks.push_back(std::move(c));
}

void fail(Check& c, const std::string& why) {
  if (c.pass) c.detail = why;
  c.pass = false;
}

std::vector<std::string> rendered(const Fan& fan, const std::vector<std::string>& labels = {}) {
  std::vector<std::string> out;
  for (const auto& r : all_primitive_relations(fan)) out.push_back(format_relation(r, labels));
  return out;
}

std::vector<Check> classify_checks(int corrupt) {
  std::vector<Check> checks;
  std::vector<CatalogEntry> cat;
  run_check(checks, "catalog-build", [&](Check& c) {
    cat = catalog_fano5_index2();
    if (corrupt >= 1 && corrupt <= static_cast<int>(cat.size())) cat[corrupt - 1].fan = projective_space_fan(5);
    if (cat.size() != 10) fail(c, "expected 10 entries");
  });
  auto each = [&](const std::string& name, const std::function<std::string(const CatalogEntry&)>& test) {
    run_check(checks, name, [&](Check& c) {
      if (cat.size() != 10) fail(c, "catalog unavailable");
      for (const auto& e : cat) {
        const std::string why = test(e);
        if (!why.empty()) fail(c, "entry " + std::to_string(e.id) + ": " + why);
      }
    });
  };
  each("smooth-complete", [](const CatalogEntry& e) {
    return is_smooth(e.fan) && is_complete(e.fan) ? "" : "not smooth and complete";
  });
  each("dimension-5", [](const CatalogEntry& e) {
    return e.fan.dim() == 5 ? "" : "dimension " + std::to_string(e.fan.dim());
  });
  each("fano", [](const CatalogEntry& e) { return is_fano(e.fan) ? "" : "not Fano"; });
  each("index-2", [](const CatalogEntry& e) {
    const Integer i = fano_index(e.fan);
    return i == 2 ? "" : "index " + i.get_str();
  });
  each("picard-rank", [](const CatalogEntry& e) {
    return picard_rank(e.fan) == e.expected.picard_rank ? "" : "Picard rank " + std::to_string(picard_rank(e.fan));
  });
  each("even-degrees", [](const CatalogEntry& e) -> std::string {
    for (const auto& r : all_primitive_relations(e.fan))
      if (r.degree % 2 != 0) return format_relation(r) + " has odd degree";
    return "";
  });
  each("extremal-types", [](const CatalogEntry& e) -> std::string {
    const auto rels = all_primitive_relations(e.fan);
    const auto flags = extremal_flags(rels);
    for (std::size_t i = 0; i < rels.size(); ++i) {
      if (!flags[i]) continue;
      const auto tag = classify_relation_type(rels[i]).tag;
      if (tag == RelationTag::t1 || tag == RelationTag::other)
        return format_relation(rels[i]) + " is " + to_string(tag);
    }
    return "";
  });
  each("splitting-fan", [](const CatalogEntry& e) { return is_splitting_fan(e.fan) ? "" : "collections overlap"; });
  each("listed-relations", [](const CatalogEntry& e) -> std::string {
    if (e.expected.relations.empty()) return "";
    return rendered(e.fan) == e.expected.relations ? "" : "relations differ from the listed ones";
  });
  run_check(checks, "pairwise-non-isomorphic", [&](Check& c) {
    for (std::size_t i = 0; i < cat.size(); ++i)
      for (std::size_t j = i + 1; j < cat.size(); ++j)
        if (find_isomorphism(cat[i].fan, cat[j].fan))
          fail(c, "entries " + std::to_string(cat[i].id) + " and " + std::to_string(cat[j].id) + " are isomorphic");
  });
  run_check(checks, "del-pezzo-7-relations", [](Check& c) {
    const std::vector<std::string> want{"x1+x3 = x2", "x1+x4 = 0", "x2+x4 = x3", "x2+x5 = x1", "x3+x5 = 0"};
    if (rendered(del_pezzo_degree7()) != want) fail(c, "relations differ");
  });
  run_check(checks, "seven-fold-relations", [](Check& c) {
    const std::vector<std::string> want{"x1+x1'+x3+x3' = x2+x2'", "x1+x1'+x4+x4' = 0", "x2+x2'+x4+x4' = x3+x3'",
                                        "x2+x2'+x5+x5' = x1+x1'", "x3+x3'+x5+x5' = 0"};
    const LabeledFan y = example_seven_fold_labeled();
    if (rendered(y.fan, y.labels) != want) fail(c, "relations differ");
  });
  run_check(checks, "seven-fold-invariants", [](Check& c) {
    const Fan y = example_seven_fold();
    if (y.dim() != 7) fail(c, "dimension " + std::to_string(y.dim()));
    if (!is_smooth(y) || !is_complete(y) || !is_fano(y)) fail(c, "not a smooth complete Fano fan");
    else if (fano_index(y) != 2) fail(c, "index " + fano_index(y).get_str());
    if (picard_rank(y) != 3) fail(c, "Picard rank " + std::to_string(picard_rank(y)));
    if (!split_bundle_relations(y).empty()) fail(c, "has a toric projective-space bundle structure");
  });
  return checks;
}

int cmd_classify_check(int corrupt, bool as_json, bool quiet, std::ostream& out) {
  const auto checks = classify_checks(corrupt);
  const bool ok = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
  if (as_json) {
    json a = json::array();
    for (const auto& c : checks) {
      json j;
      j["check"] = c.name;
      j["pass"] = c.pass;
      if (!c.detail.empty()) j["detail"] = c.detail;
      a.push_back(std::move(j));
    }
    json r;
    r["pass"] = ok;
    r["checks"] = a;
    out << r.dump() << "\n";
  } else {
    for (const auto& c : checks) {
      if (quiet && c.pass) continue;
      out << (c.pass ? "PASS " : "FAIL ") << c.name;
      if (!c.detail.empty()) out << ": " << c.detail;
      out << "\n";
    }
  }
  return ok ? 0 : 1;
}

// ---- catalog and enumerate ----

int cmd_catalog(bool list, int emit, bool as_json, std::ostream& out) {
  const auto cat = catalog_fano5_index2();
  if (emit != 0) {
    if (emit < 1 || emit > static_cast<int>(cat.size())) throw DomainError("catalog ids run from 1 to 10");
    out << fan_to_json(cat[emit - 1].fan);
    return 0;
  }
  (void)list;
  if (as_json) {
    json a = json::array();
    for (const auto& e : cat) {
      json j;
      j["id"] = e.id;
      j["name"] = e.name;
      j["rays"] = e.fan.ray_count();
      j["picard_rank"] = picard_rank(e.fan);
      a.push_back(std::move(j));
    }
    out << a.dump() << "\n";
  } else {
    for (const auto& e : cat)
      out << e.id << "  " << e.name << "  rays " << e.fan.ray_count() << "  picard_rank " << picard_rank(e.fan)
          << "\n";
  }
  return 0;
}

int cmd_enumerate(int bound, int index, bool as_json, std::ostream& out) {
  std::vector<Fan> found;
  for (auto& f : enumerate_smooth_fano_surfaces(bound))
    if (index == 0 || fano_index(f) == index) found.push_back(canonical_form(f));
  if (as_json) {
    json a = json::array();
    for (const auto& f : found) {
      json j;
      j["index"] = to_json(fano_index(f));
      j["fan"] = fan_json(f);
      a.push_back(std::move(j));
    }
    out << a.dump() << "\n";
  } else {
    out << found.size() << " classes\n";
    for (const auto& f : found) out << "index " << fano_index(f).get_str() << "  " << fan_to_json(f);
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact toric geometry: smooth fans, primitive relations, Fano checks"};
  app.name("toricfano");
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false, quiet = false;
  app.add_flag("--json", as_json, "Machine-readable output");
  app.add_flag("--quiet", quiet, "Suppress informational output");

  std::string path, path_b;
  auto* verify = app.add_subcommand("verify", "Check a fan and report its invariants");
  verify->add_option("fan", path, "Fan JSON file, - for stdin")->required();

  auto* relations = app.add_subcommand("relations", "List primitive relations");
  relations->add_option("fan", path, "Fan JSON file, - for stdin")->required();

  auto* iso = app.add_subcommand("iso", "Decide whether two fans are isomorphic");
  iso->add_option("a", path, "First fan")->required();
  iso->add_option("b", path_b, "Second fan")->required();

  bool list = false;
  int emit = 0;
  auto* catalog = app.add_subcommand("catalog", "The ten Fano 5-folds of index 2");
  catalog->add_flag("--list", list, "List entries (default)");
  catalog->add_option("--emit", emit, "Print the fan of entry <id> as JSON");

  int corrupt = 0;
  auto* check = app.add_subcommand("classify-check", "Run the catalog verification suite");
  check->add_option("--corrupt", corrupt, "Replace entry <id> by P^5 to exercise failures");

  int bound = 3, index = 0;
  auto* enumerate = app.add_subcommand("enumerate-surfaces", "Smooth toric del Pezzo surfaces by brute force");
  enumerate->add_option("--bound", bound, "Coordinate bound for rays")->check(CLI::PositiveNumber);
  enumerate->add_option("--index", index, "Keep only classes of this Fano index");

  auto* construct = app.add_subcommand("construct", "Build a fan; ray indices are 1-based in canonical order");
  construct->require_subcommand(1);
  std::vector<std::string> product_inputs;
  auto* c_product = construct->add_subcommand("product", "Product of two or more fans");
  c_product->add_option("fans", product_inputs, "Fan files")->required()->expected(2, 64);

  std::string input;
  std::vector<std::string> twists;
  auto* c_proj = construct->add_subcommand("projectivize", "P(O + O(D_1) + ... + O(D_r))");
  c_proj->add_option("--input", input, "Base fan")->required();
  c_proj->add_option("--twist", twists, "Divisor coefficients per ray, comma separated; repeatable")->required();

  std::size_t ray = 0, p = 2;
  auto* c_h = construct->add_subcommand("h", "H-construction at a ray");
  c_h->add_option("--input", input, "Fan")->required();
  c_h->add_option("--ray", ray, "Ray index")->required()->check(CLI::PositiveNumber);
  c_h->add_option("--p", p, "p >= 2")->required();

  std::string collection;
  auto* c_down = construct->add_subcommand("blowdown", "Contract z_1+...+z_p = x");
  c_down->add_option("--input", input, "Fan")->required();
  c_down->add_option("--collection", collection, "Primitive collection, comma separated")->required();

  std::size_t dim = 0;
  std::vector<std::string> rel_texts;
  auto* c_rel = construct->add_subcommand("from-relations", "Splitting fan from primitive relations");
  c_rel->add_option("--dim", dim, "Dimension")->required();
  c_rel->add_option("--relation", rel_texts, "Relation such as \"x1+x2+x3 = x4\"; repeatable")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*verify) return cmd_verify(path, as_json, quiet, out);
    if (*relations) return cmd_relations(path, as_json, out);
    if (*iso) return cmd_iso(path, path_b, as_json, out);
    if (*catalog) return cmd_catalog(list, emit, as_json, out);
    if (*check) return cmd_classify_check(corrupt, as_json, quiet, out);
    if (*enumerate) return cmd_enumerate(bound, index, as_json, out);

    Fan built;
    if (*c_product) {
      built = load(product_inputs[0]);
      for (std::size_t i = 1; i < product_inputs.size(); ++i) built = product_fan(built, load(product_inputs[i]));
    } else if (*c_proj) {
      const Fan base = load(input);
      std::vector<TorusDivisor> ds;
      for (const auto& t : twists) ds.push_back({parse_int_list(t)});
      built = projectivize_split(base, ds);
    } else if (*c_h) {
      const Fan base = load(input);
      if (!is_smooth(base) || !is_complete(base)) throw DomainError("H-construction needs a smooth complete fan");
      built = h_construction(base, ray - 1, p);
    } else if (*c_down) {
      const Fan f = load(input);
      if (!is_smooth(f) || !is_complete(f)) throw DomainError("blow-down needs a smooth complete fan");
      built = blow_down(f, primitive_relation(f, {parse_index_list(collection)}));
    } else if (*c_rel) {
      std::vector<RelationSpec> spec;
      for (const auto& t : rel_texts) spec.push_back(parse_relation(t));
      built = direct_fan_from_relations(dim, spec);
    }
    out << fan_to_json(built);
    return 0;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace toric::cli
