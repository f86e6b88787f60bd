#pragma once

// Minimal structural validator for the subset of JSON Schema the report
// schema uses: type, enum, oneOf, required, properties, items,
// additionalProperties (boolean), and $ref into #/$defs. Test-only.

#include <string>

#include "json.hpp"

namespace schema_check {

using nlohmann::json;

inline bool validate_node(const json& root, const json& node, const json& value,
                          std::string* err, const std::string& path) {
  const auto fail = [&](const std::string& why) {
    if (err) *err = path + ": " + why;
    return false;
  };

  if (node.contains("$ref")) {
    const std::string ref = node["$ref"].get<std::string>();
    const std::string prefix = "#/$defs/";
    if (ref.rfind(prefix, 0) != 0) return fail("unsupported $ref " + ref);
    const std::string name = ref.substr(prefix.size());
    if (!root.contains("$defs") || !root["$defs"].contains(name))
      return fail("unresolved $ref " + ref);
    return validate_node(root, root["$defs"][name], value, err, path);
  }

  if (node.contains("oneOf")) {
    std::size_t matches = 0;
    for (const auto& alt : node["oneOf"]) {
      std::string ignored;
      if (validate_node(root, alt, value, &ignored, path)) ++matches;
    }
    if (matches != 1)
      return fail("oneOf matched " + std::to_string(matches) + " alternatives");
    return true;
  }

  if (node.contains("enum")) {
    for (const auto& allowed : node["enum"])
      if (allowed == value) return true;
    return fail("value " + value.dump() + " not in enum");
  }

  if (node.contains("type")) {
    const std::string t = node["type"].get<std::string>();
    if (t == "object" && !value.is_object()) return fail("expected object");
    if (t == "array" && !value.is_array()) return fail("expected array");
    if (t == "string" && !value.is_string()) return fail("expected string");
    if (t == "number" && !value.is_number()) return fail("expected number");
    if (t == "integer" && !value.is_number_integer() &&
        !value.is_number_unsigned())
      return fail("expected integer");
    if (t == "boolean" && !value.is_boolean()) return fail("expected boolean");
  }

  if (value.is_object()) {
    if (node.contains("required"))
      for (const auto& key : node["required"])
        if (!value.contains(key.get<std::string>()))
          return fail("missing required key " + key.get<std::string>());
    const json props =
        node.contains("properties") ? node["properties"] : json::object();
    const bool extra_ok = !node.contains("additionalProperties") ||
                          node["additionalProperties"].get<bool>();
    for (auto it = value.begin(); it != value.end(); ++it) {
      if (props.contains(it.key())) {
        if (!validate_node(root, props[it.key()], it.value(), err,
                           path + "/" + it.key()))
          return false;
      } else if (!extra_ok) {
        return fail("unexpected key " + it.key());
      }
    }
  }

  if (value.is_array() && node.contains("items")) {
    std::size_t i = 0;
    for (const auto& item : value) {
      if (!validate_node(root, node["items"], item, err,
                         path + "/" + std::to_string(i)))
        return false;
      ++i;
    }
  }
  return true;
}

inline bool validate(const json& schema, const json& value, std::string* err) {
  return validate_node(schema, schema, value, err, "$");
}

inline bool validate_ref(const json& schema, const std::string& def,
                         const json& value, std::string* err) {
  json node;
  node["$ref"] = "#/$defs/" + def;
  return validate_node(schema, node, value, err, "$");
}

}  // namespace schema_check
