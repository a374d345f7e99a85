#include "hfsurg/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace hfsurg {

namespace {

using nlohmann::ordered_json;

void reject_unknown(const ordered_json& obj, const std::set<std::string>& allowed,
                    const std::string& where) {
  for (auto& [k, v] : obj.items())
    if (!allowed.count(k)) throw ParseError("unknown key '" + k + "' in " + where);
}

int require_int(const ordered_json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key)) throw ParseError("missing key '" + key + "' in " + where);
  if (!obj[key].is_number_integer()) throw ParseError("'" + key + "' must be an integer in " + where);
  return obj[key].get<int>();
}

std::string require_str(const ordered_json& obj, const std::string& key, const std::string& where) {
  if (!obj.contains(key)) throw ParseError("missing key '" + key + "' in " + where);
  if (!obj[key].is_string()) throw ParseError("'" + key + "' must be a string in " + where);
  return obj[key].get<std::string>();
}

}  // namespace

KnotComplex parse_knot_complex(const std::string& json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("top level must be an object");
  reject_unknown(j, {"name", "generators", "differential", "involution"}, "top level");

  KnotComplex c;
  c.name = require_str(j, "name", "top level");
  if (!j.contains("generators") || !j["generators"].is_array())
    throw ParseError("'generators' must be an array");
  for (auto& g : j["generators"]) {
    if (!g.is_object()) throw ParseError("generator entries must be objects");
    reject_unknown(g, {"name", "alexander", "maslov"}, "generator");
    c.generators.push_back({require_str(g, "name", "generator"),
                            require_int(g, "alexander", "generator"),
                            require_int(g, "maslov", "generator")});
  }
  if (!j.contains("differential") || !j["differential"].is_array())
    throw ParseError("'differential' must be an array");
  for (auto& a : j["differential"]) {
    if (!a.is_object()) throw ParseError("differential entries must be objects");
    reject_unknown(a, {"from", "to", "u_power"}, "differential entry");
    c.arrows.push_back({require_str(a, "from", "differential entry"),
                        require_str(a, "to", "differential entry"),
                        require_int(a, "u_power", "differential entry")});
  }
  if (j.contains("involution")) {
    if (!j["involution"].is_object()) throw ParseError("'involution' must be an object");
    for (auto& [k, v] : j["involution"].items()) {
      if (!v.is_string()) throw ParseError("involution values must be strings");
      c.involution[k] = v.get<std::string>();
    }
  }
  require_valid(c);
  return c;
}

KnotComplex load_knot_complex(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_knot_complex(ss.str());
}

std::string serialize_knot_complex(const KnotComplex& c) {
  ordered_json j;
  j["name"] = c.name;
  j["generators"] = ordered_json::array();
  for (auto& g : c.generators)
    j["generators"].push_back({{"name", g.label}, {"alexander", g.alexander}, {"maslov", g.maslov}});
  j["differential"] = ordered_json::array();
  for (auto& a : c.arrows)
    j["differential"].push_back({{"from", a.from}, {"to", a.to}, {"u_power", a.u_power}});
  if (c.has_involution()) {
    ordered_json inv = ordered_json::object();
    for (auto& [k, v] : c.involution) inv[k] = v;
    j["involution"] = inv;
  }
  return j.dump(2) + "\n";
}

}  // namespace hfsurg
