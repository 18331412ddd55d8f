#include "hkpow/ringspec.hpp"

#include <algorithm>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "hkpow/error.hpp"

namespace hkpow {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& j,
                         const std::vector<std::string>& allowed) {
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw input_error("ring spec: unknown key \"" + key + "\"");
    }
  }
}

std::vector<std::string> string_list(const json& j, const std::string& key) {
  if (!j.is_array()) throw input_error("ring spec: \"" + key + "\" must be an array");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) {
      throw input_error("ring spec: entries of \"" + key + "\" must be strings");
    }
    out.push_back(e.get<std::string>());
  }
  return out;
}

}  // namespace

RingSpec RingSpec::from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& ex) {
    throw input_error(std::string("ring spec: invalid JSON: ") + ex.what());
  }
  if (!j.is_object()) throw input_error("ring spec: top level must be an object");
  reject_unknown_keys(j, {"char", "vars", "relations", "assert_cm",
                          "assert_reduced", "ideals", "test_ideal",
                          "reduction"});
  RingSpec spec;
  if (!j.contains("char") || !j["char"].is_number_integer()) {
    throw input_error("ring spec: \"char\" (prime integer) is required");
  }
  spec.p = j["char"].get<std::int64_t>();
  if (!j.contains("vars")) throw input_error("ring spec: \"vars\" is required");
  spec.vars = string_list(j["vars"], "vars");
  if (j.contains("relations")) {
    spec.relations = string_list(j["relations"], "relations");
  }
  if (j.contains("assert_cm")) {
    if (!j["assert_cm"].is_boolean()) {
      throw input_error("ring spec: \"assert_cm\" must be a boolean");
    }
    spec.assert_cm = j["assert_cm"].get<bool>();
  }
  if (j.contains("assert_reduced")) {
    if (!j["assert_reduced"].is_boolean()) {
      throw input_error("ring spec: \"assert_reduced\" must be a boolean");
    }
    spec.assert_reduced = j["assert_reduced"].get<bool>();
  }
  if (j.contains("ideals")) {
    if (!j["ideals"].is_object()) {
      throw input_error("ring spec: \"ideals\" must be an object of name -> generator list");
    }
    for (const auto& [name, gens] : j["ideals"].items()) {
      spec.ideals[name] = string_list(gens, "ideals." + name);
    }
  }
  auto name_field = [&](const char* key) -> std::optional<std::string> {
    if (!j.contains(key)) return std::nullopt;
    if (!j[key].is_string()) {
      throw input_error(std::string("ring spec: \"") + key + "\" must be an ideal name");
    }
    std::string name = j[key].get<std::string>();
    if (!spec.ideals.count(name)) {
      throw input_error(std::string("ring spec: \"") + key + "\" names unknown ideal \"" +
                        name + "\"");
    }
    return name;
  };
  spec.test_ideal = name_field("test_ideal");
  spec.reduction = name_field("reduction");
  return spec;
}

RingSpec RingSpec::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("ring spec: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json_text(buf.str());
}

QuotientRingPtr RingSpec::build_ring(std::int64_t degree_cap) const {
  return QuotientRing::make(p, vars, relations, assert_cm, assert_reduced,
                            degree_cap);
}

Ideal RingSpec::build_ideal(const QuotientRingPtr& ring,
                            const std::string& name) const {
  auto it = ideals.find(name);
  if (it == ideals.end()) {
    throw input_error("ring spec: no ideal named \"" + name + "\"");
  }
  return Ideal::parse(ring, it->second);
}

}  // namespace hkpow
