#include "kspace/serialize.hpp"

#include "kspace/errors.hpp"

#include <limits>

namespace kspace {

using nlohmann::json;

namespace {

json tree_node(const KnotTree& t);

json tree_list(const std::vector<KnotTree>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(tree_node(x));
  return a;
}

json tree_node(const KnotTree& t) {
  switch (t.kind()) {
    case KnotTree::Kind::Unknot:
      return {{"type", "unknot"}};
    case KnotTree::Kind::Torus:
      return {{"type", "torus"}, {"p", t.torus().p}, {"q", t.torus().q}};
    case KnotTree::Kind::HypKnot: {
      const auto& h = t.hyp();
      return {{"type", "hyp"},
              {"name", h.name},
              {"invertible", h.invertible},
              {"orientation", h.orientation == Orientation::Plus ? "+" : "-"}};
    }
    case KnotTree::Kind::Cable:
      return {{"type", "cable"},
              {"p", t.cable().p},
              {"q", t.cable().q},
              {"companion", tree_node(t.cable().companion)}};
    case KnotTree::Kind::Sum:
      return {{"type", "sum"}, {"summands", tree_list(t.sum().summands)}};
    case KnotTree::Kind::HypSplice:
      return {{"type", "splice"},
              {"kgl", to_json(t.splice().kgl)},
              {"children", tree_list(t.splice().children)},
              {"inverted", t.splice().inverted}};
  }
  return {};
}

[[noreturn]] void schema_fail(const std::string& what) { throw SchemaError(what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object()) schema_fail(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) schema_fail(std::string("missing field '") + key + "'");
  return *it;
}

std::string str_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_string()) schema_fail(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

long long int_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) schema_fail(std::string("field '") + key + "' must be an integer");
  return v.get<long long>();
}

bool bool_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_boolean()) schema_fail(std::string("field '") + key + "' must be a boolean");
  return v.get<bool>();
}

const json& array_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_array()) schema_fail(std::string("field '") + key + "' must be an array");
  return v;
}

void check_schema(const json& doc) {
  if (str_field(doc, "schema") != kSchema) schema_fail("unsupported schema tag");
}

SignedPerm perm_field(const json& j, const char* key, std::size_t n) {
  try {
    return parse_signed_cycles(str_field(j, key), n);
  } catch (const SyntaxError& e) {
    schema_fail(std::string("field '") + key + "': " + e.what());
  }
}

KglDatum kgl_from(const json& j) {
  KglDatum k;
  k.name = str_field(j, "name");
  long long n = int_field(j, "n");
  if (n < 0) schema_fail("KGL n must be non-negative");
  k.n = static_cast<std::size_t>(n);
  k.b_order = int_field(j, "B");
  k.rho_gen = perm_field(j, "rho", k.n);
  if (j.contains("inv")) k.inversion = perm_field(j, "inv", k.n);
  return k;
}

KnotTree node_from(const json& j) {
  std::string type = str_field(j, "type");
  if (type == "unknot") return KnotTree(Unknot{});
  if (type == "torus") return Torus{int_field(j, "p"), int_field(j, "q")};
  if (type == "hyp") {
    HypKnot h;
    h.name = str_field(j, "name");
    h.invertible = bool_field(j, "invertible");
    std::string o = str_field(j, "orientation");
    if (o != "+" && o != "-") schema_fail("orientation must be '+' or '-'");
    h.orientation = o == "+" ? Orientation::Plus : Orientation::Minus;
    return h;
  }
  if (type == "cable")
    return Cable{int_field(j, "p"), int_field(j, "q"), node_from(field(j, "companion"))};
  if (type == "sum") {
    Sum s;
    for (const auto& x : array_field(j, "summands")) s.summands.push_back(node_from(x));
    return s;
  }
  if (type == "splice") {
    HypSplice s;
    s.kgl = kgl_from(field(j, "kgl"));
    for (const auto& x : array_field(j, "children")) s.children.push_back(node_from(x));
    s.inverted = bool_field(j, "inverted");
    return s;
  }
  schema_fail("unknown tree node type '" + type + "'");
}

const char* kind_name(HomotopyExpr::Kind k) {
  switch (k) {
    case HomotopyExpr::Kind::Point:
      return "point";
    case HomotopyExpr::Kind::Circle:
      return "circle";
    case HomotopyExpr::Kind::Product:
      return "product";
    case HomotopyExpr::Kind::Config2ModYoung:
      return "config";
    case HomotopyExpr::Kind::TwistedProduct:
      return "twisted";
  }
  return "";
}

json expr_node(const HomotopyExpr& e) {
  json j{{"kind", kind_name(e.kind())}};
  json kids = json::array();
  for (const auto& c : e.children()) kids.push_back(expr_node(c));
  switch (e.kind()) {
    case HomotopyExpr::Kind::Point:
      break;
    case HomotopyExpr::Kind::Circle:
      j["role"] = role_name(e.role());
      break;
    case HomotopyExpr::Kind::Product:
      j["factors"] = kids;
      break;
    case HomotopyExpr::Kind::Config2ModYoung:
      j["factors"] = kids;
      j["young"] = e.young();
      break;
    case HomotopyExpr::Kind::TwistedProduct:
      j["fibers"] = kids;
      j["order"] = e.group_order();
      j["monodromy"] = e.monodromy().sp.to_string();
      break;
  }
  return j;
}

std::vector<HomotopyExpr> expr_list(const json& a);

HomotopyExpr expr_from(const json& j) {
  std::string kind = str_field(j, "kind");
  if (kind == "point") return HomotopyExpr::point();
  if (kind == "circle") {
    std::string r = str_field(j, "role");
    for (auto role : {CircleRole::Meridian, CircleRole::Cabling, CircleRole::BaseL0, CircleRole::Plain})
      if (r == role_name(role)) return HomotopyExpr::circle(role);
    schema_fail("unknown circle role '" + r + "'");
  }
  if (kind == "product") return HomotopyExpr::product(expr_list(array_field(j, "factors")));
  if (kind == "config") {
    std::vector<std::size_t> young;
    for (const auto& v : array_field(j, "young")) {
      if (!v.is_number_unsigned()) schema_fail("young labels must be non-negative integers");
      young.push_back(v.get<std::size_t>());
    }
    auto factors = expr_list(array_field(j, "factors"));
    if (young.size() != factors.size()) schema_fail("young labels do not match factors");
    try {
      return HomotopyExpr::config(std::move(young), std::move(factors));
    } catch (const SchemaError&) {
      throw;
    } catch (const Error& e) {
      schema_fail(e.what());
    }
  }
  if (kind == "twisted") {
    auto fibers = expr_list(array_field(j, "fibers"));
    SignedPerm sp = perm_field(j, "monodromy", fibers.size());
    try {
      return HomotopyExpr::twisted(int_field(j, "order"), MonodromyDatum(sp), std::move(fibers));
    } catch (const SchemaError&) {
      throw;
    } catch (const Error& e) {
      schema_fail(e.what());
    }
  }
  schema_fail("unknown expression kind '" + kind + "'");
}

std::vector<HomotopyExpr> expr_list(const json& a) {
  std::vector<HomotopyExpr> out;
  for (const auto& x : a) out.push_back(expr_from(x));
  return out;
}

const char* ext_kind(ExtensionTree::Kind k) {
  switch (k) {
    case ExtensionTree::Kind::Trivial:
      return "trivial";
    case ExtensionTree::Kind::Z:
      return "Z";
    case ExtensionTree::Kind::Direct:
      return "direct";
    case ExtensionTree::Kind::SemidirectZ:
      return "semidirect";
    case ExtensionTree::Kind::BraidExtension:
      return "braid_extension";
  }
  return "";
}

json ext_node(const ExtensionTree& t) {
  json j{{"kind", ext_kind(t.kind)}};
  json kids = json::array();
  for (const auto& c : t.children) kids.push_back(ext_node(c));
  switch (t.kind) {
    case ExtensionTree::Kind::Trivial:
      break;
    case ExtensionTree::Kind::Z:
      j["role"] = role_name(t.role);
      break;
    case ExtensionTree::Kind::Direct:
      j["factors"] = kids;
      break;
    case ExtensionTree::Kind::SemidirectZ:
      j["kernel"] = kids.at(0);
      j["monodromy"] = t.monodromy.to_string();
      j["order"] = t.order;
      break;
    case ExtensionTree::Kind::BraidExtension:
      j["kernel"] = kids.at(0);
      j["young"] = t.young;
      break;
  }
  return j;
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return static_cast<long long>(v);
  return v.str();
}

json to_json(const KglDatum& k) {
  json j{{"name", k.name}, {"n", k.n}, {"B", k.b_order}, {"rho", k.rho_gen.to_string()}};
  if (k.inversion) j["inv"] = k.inversion->to_string();
  return j;
}

json to_json(const KnotTree& t) { return {{"schema", kSchema}, {"tree", tree_node(t)}}; }

json to_json(const HomotopyExpr& e) { return {{"schema", kSchema}, {"expr", expr_node(e)}}; }

json to_json(const H1Result& h) {
  json tors = json::array();
  for (const auto& d : h.torsion) tors.push_back(integer_json(d));
  return {{"rank", h.free_rank}, {"torsion", tors}};
}

json to_json(const ValidationReport& r) {
  json a = json::array();
  for (const auto& v : r)
    a.push_back({{"path", v.path}, {"message", v.message}, {"flattening", v.flattening}});
  return {{"schema", kSchema}, {"violations", a}};
}

json to_json(const ExtensionTree& t) { return {{"schema", kSchema}, {"pi1", ext_node(t)}}; }

KnotTree tree_from_json(const json& doc) {
  check_schema(doc);
  return node_from(field(doc, "tree"));
}

HomotopyExpr expr_from_json(const json& doc) {
  check_schema(doc);
  return expr_from(field(doc, "expr"));
}

H1Result h1_from_json(const json& doc) {
  H1Result h;
  const json& rank = field(doc, "rank");
  if (!rank.is_number_unsigned()) schema_fail("rank must be a non-negative integer");
  h.free_rank = rank.get<std::size_t>();
  for (const auto& d : array_field(doc, "torsion")) {
    if (d.is_number_integer())
      h.torsion.push_back(Integer(d.get<long long>()));
    else if (d.is_string())
      h.torsion.push_back(Integer(d.get<std::string>()));
    else
      schema_fail("torsion entries must be integers");
  }
  if (!h.divisibility_chain()) schema_fail("torsion is not a divisibility chain of factors >= 2");
  h.basis_tags.assign(h.free_rank, "other");
  return h;
}

std::string serialize(const KnotTree& t) { return to_json(t).dump(); }
std::string serialize(const HomotopyExpr& e) { return to_json(e).dump(); }
std::string serialize(const H1Result& h) { return to_json(h).dump(); }
std::string serialize(const ValidationReport& r) { return to_json(r).dump(); }

KnotTree deserialize_tree(const std::string& text) { return tree_from_json(parse_text(text)); }
HomotopyExpr deserialize_expr(const std::string& text) { return expr_from_json(parse_text(text)); }
H1Result deserialize_h1(const std::string& text) { return h1_from_json(parse_text(text)); }

}  // namespace kspace
