#pragma once

#include "kspace/fp_group.hpp"
#include "kspace/homotopy_expr.hpp"
#include "kspace/knot_tree.hpp"
#include "kspace/pi1.hpp"

#include <json.hpp>

#include <string>

namespace kspace {

inline constexpr const char* kSchema = "kspace-v1";

// Documents carry "schema": "kspace-v1" except H1 results, which are the
// bare {"rank": r, "torsion": [...]} object. Keys are sorted, so dump() is
// byte-stable.
nlohmann::json to_json(const KnotTree& t);
nlohmann::json to_json(const HomotopyExpr& e);
nlohmann::json to_json(const H1Result& h);
nlohmann::json to_json(const ValidationReport& r);
nlohmann::json to_json(const ExtensionTree& t);
nlohmann::json to_json(const KglDatum& k);
nlohmann::json integer_json(const Integer& v);

// Throw SchemaError on missing fields, wrong types or a foreign schema tag.
KnotTree tree_from_json(const nlohmann::json& doc);
HomotopyExpr expr_from_json(const nlohmann::json& doc);
H1Result h1_from_json(const nlohmann::json& doc);

std::string serialize(const KnotTree& t);
std::string serialize(const HomotopyExpr& e);
std::string serialize(const H1Result& h);
std::string serialize(const ValidationReport& r);

KnotTree deserialize_tree(const std::string& text);
HomotopyExpr deserialize_expr(const std::string& text);
H1Result deserialize_h1(const std::string& text);

}  // namespace kspace
