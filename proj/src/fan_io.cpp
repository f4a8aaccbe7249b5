#include "toric/fan_io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <regex>
#include <sstream>

#include <json.hpp>

namespace toric {

namespace {

// Minimal document tree that keeps integer literals as text so values
// beyond 64 bits survive parsing.
struct Node {
  enum class Kind { null, boolean, integer, real, string, array, object };
  Kind kind = Kind::null;
  std::string text;
  std::vector<Node> items;
  std::vector<std::pair<std::string, Node>> members;
};

class TreeBuilder : public nlohmann::json_sax<nlohmann::json> {
 public:
  Node root;

  bool null() override { return put(Node{}); }
  bool boolean(bool) override { return put(Node{Node::Kind::boolean, {}, {}, {}}); }
  bool number_integer(number_integer_t v) override {
    return put(Node{Node::Kind::integer, std::to_string(v), {}, {}});
  }
  bool number_unsigned(number_unsigned_t v) override {
    return put(Node{Node::Kind::integer, std::to_string(v), {}, {}});
  }
  bool number_float(number_float_t, const string_t& literal) override {
    static const std::regex integral("-?[0-9]+");
    const bool is_int = std::regex_match(literal, integral);
    return put(Node{is_int ? Node::Kind::integer : Node::Kind::real, literal, {}, {}});
  }
  bool string(string_t& s) override { return put(Node{Node::Kind::string, s, {}, {}}); }
  bool binary(binary_t&) override { return put(Node{}); }
  bool start_object(std::size_t) override { return open(Node::Kind::object); }
  bool key(string_t& k) override {
    pending_key_ = k;
    return true;
  }
  bool end_object() override { return close(); }
  bool start_array(std::size_t) override { return open(Node::Kind::array); }
  bool end_array() override { return close(); }
  bool parse_error(std::size_t, const std::string&, const nlohmann::detail::exception& ex) override {
    throw ParseError(std::string("invalid JSON: ") + ex.what());
  }

 private:
  // Only the innermost open node is ever appended to, so pointers to the
  // enclosing nodes stay valid.
  std::vector<Node*> stack_;
  std::string pending_key_;

  Node* put_slot(Node n) {
    if (stack_.empty()) {
      root = std::move(n);
      return &root;
    }
    Node* top = stack_.back();
    if (top->kind == Node::Kind::array) {
      top->items.push_back(std::move(n));
      return &top->items.back();
    }
    top->members.emplace_back(pending_key_, std::move(n));
    return &top->members.back().second;
  }
  bool put(Node n) {
    put_slot(std::move(n));
    return true;
  }
  bool open(Node::Kind k) {
    Node n;
    n.kind = k;
    stack_.push_back(put_slot(std::move(n)));
    return true;
  }
  bool close() {
    stack_.pop_back();
    return true;
  }
};

const Node* member(const Node& obj, const std::string& name) {
  for (const auto& [k, v] : obj.members)
    if (k == name) return &v;
  return nullptr;
}

Integer as_integer(const Node& n, const std::string& where) {
  if (n.kind != Node::Kind::integer) throw ParseError(where + ": expected an integer");
  return Integer(n.text);
}

const Node& as_array(const Node* n, const std::string& where) {
  if (!n) throw ParseError("missing key \"" + where + "\"");
  if (n->kind != Node::Kind::array) throw ParseError(where + ": expected an array");
  return *n;
}

}  // namespace

Fan parse_fan_json(std::string_view text) {
  TreeBuilder builder;
  nlohmann::json::sax_parse(text.begin(), text.end(), &builder);
  const Node& root = builder.root;
  if (root.kind != Node::Kind::object) throw ParseError("fan JSON must be an object");

  const Node* dim_node = member(root, "dim");
  if (!dim_node) throw ParseError("missing key \"dim\"");
  Integer dim = as_integer(*dim_node, "dim");
  if (dim < 1 || dim > 1000) throw ParseError("dim must be a positive integer");

  std::vector<IntVector> rays;
  for (const auto& r : as_array(member(root, "rays"), "rays").items) {
    if (r.kind != Node::Kind::array) throw ParseError("rays: each ray must be an array");
    IntVector v;
    for (const auto& x : r.items) v.push_back(as_integer(x, "rays"));
    rays.push_back(std::move(v));
  }
  std::vector<Cone> cones;
  for (const auto& c : as_array(member(root, "max_cones"), "max_cones").items) {
    if (c.kind != Node::Kind::array) throw ParseError("max_cones: each cone must be an array");
    Cone cone;
    for (const auto& x : c.items) {
      Integer i = as_integer(x, "max_cones");
      if (i < 0 || i >= static_cast<long>(kMaxRays))
        throw DomainError("max_cones: index " + i.get_str() + " out of range");
      cone.push_back(i.get_ui());
    }
    cones.push_back(std::move(cone));
  }
  return make_fan(dim.get_ui(), std::move(rays), std::move(cones));
}

std::string fan_to_json(const Fan& input) {
  Fan fan = canonical_form(input);
  std::ostringstream os;
  os << "{\"dim\":" << fan.dim() << ",\"rays\":[";
  for (std::size_t i = 0; i < fan.ray_count(); ++i) {
    os << (i ? ",[" : "[");
    const auto& r = fan.ray(i);
    for (std::size_t j = 0; j < r.size(); ++j) os << (j ? "," : "") << r[j].get_str();
    os << ']';
  }
  os << "],\"max_cones\":[";
  const auto& cones = fan.max_cones();
  for (std::size_t c = 0; c < cones.size(); ++c) {
    os << (c ? ",[" : "[");
    for (std::size_t j = 0; j < cones[c].size(); ++j) os << (j ? "," : "") << cones[c][j];
    os << ']';
  }
  os << "]}\n";
  return os.str();
}

Fan load_fan(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  }
  return parse_fan_json(text);
}

}  // namespace toric
