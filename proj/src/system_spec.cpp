#include "expstab/system_spec.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <stdexcept>

#include "expstab/zoo.hpp"

namespace expstab {

using nlohmann::json;

namespace {

VectorNorm parse_norm(const std::string& s) {
  if (s == "l1") return VectorNorm::L1;
  if (s == "l2") return VectorNorm::L2;
  if (s == "linf") return VectorNorm::Linf;
  throw std::invalid_argument("system spec: field 'norm' must be one of "
                              "\"l1\", \"l2\", \"linf\", got \"" + s + "\"");
}

void reject_unknown(const json& doc, const std::set<std::string>& allowed) {
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    if (!allowed.count(it.key())) {
      std::string list;
      for (const auto& k : allowed) list += (list.empty() ? "" : ", ") + k;
      throw std::invalid_argument("system spec: unknown field '" + it.key() +
                                  "' (allowed here: " + list + ")");
    }
  }
}

double require_number(const json& doc, const char* field) {
  if (!doc.contains(field))
    throw std::invalid_argument(std::string("system spec: missing field '") +
                                field + "'");
  if (!doc[field].is_number())
    throw std::invalid_argument(std::string("system spec: field '") + field +
                                "' must be a number");
  return doc[field].get<double>();
}

}  // namespace

SystemSpec parse_system_spec(const json& doc) {
  if (!doc.is_object())
    throw std::invalid_argument("system spec: document must be a JSON object");
  if (!doc.contains("kind") || !doc["kind"].is_string())
    throw std::invalid_argument("system spec: missing string field 'kind'");
  SystemSpec s;
  s.kind = doc["kind"].get<std::string>();
  if (doc.contains("norm")) {
    if (!doc["norm"].is_string())
      throw std::invalid_argument("system spec: field 'norm' must be a string");
    s.norm = parse_norm(doc["norm"].get<std::string>());
  }
  if (doc.contains("label")) {
    if (!doc["label"].is_string())
      throw std::invalid_argument("system spec: field 'label' must be a string");
    s.label = doc["label"].get<std::string>();
  }
  const std::set<std::string> common = {"kind", "norm", "label"};

  if (s.kind == "paper-example") {
    auto allowed = common;
    allowed.insert("c");
    reject_unknown(doc, allowed);
    s.c = require_number(doc, "c");
    if (s.c < 0.0)
      throw std::invalid_argument("system spec: field 'c' must be >= 0");
  } else if (s.kind == "constant-scalar") {
    auto allowed = common;
    allowed.insert("a");
    reject_unknown(doc, allowed);
    s.a = require_number(doc, "a");
  } else if (s.kind == "diagonal") {
    auto allowed = common;
    allowed.insert("entries");
    reject_unknown(doc, allowed);
    if (!doc.contains("entries") || !doc["entries"].is_array() ||
        doc["entries"].empty())
      throw std::invalid_argument(
          "system spec: field 'entries' must be a nonempty array of numbers");
    for (const auto& v : doc["entries"]) {
      if (!v.is_number())
        throw std::invalid_argument(
            "system spec: field 'entries' must contain numbers only");
      s.entries.push_back(v.get<double>());
    }
  } else if (s.kind == "dense-sequence") {
    auto allowed = common;
    allowed.insert("matrices");
    allowed.insert("periodic");
    reject_unknown(doc, allowed);
    if (!doc.contains("matrices") || !doc["matrices"].is_array() ||
        doc["matrices"].empty())
      throw std::invalid_argument(
          "system spec: field 'matrices' must be a nonempty array");
    std::size_t dim = 0;
    for (const auto& mat : doc["matrices"]) {
      if (!mat.is_array() || mat.empty())
        throw std::invalid_argument(
            "system spec: field 'matrices' must hold arrays of rows");
      std::vector<std::vector<double>> rows;
      for (const auto& row : mat) {
        if (!row.is_array())
          throw std::invalid_argument(
              "system spec: field 'matrices' rows must be arrays");
        std::vector<double> r;
        for (const auto& v : row) {
          if (!v.is_number())
            throw std::invalid_argument(
                "system spec: field 'matrices' entries must be numbers");
          r.push_back(v.get<double>());
        }
        rows.push_back(std::move(r));
      }
      const std::size_t d = rows.size();
      for (const auto& r : rows)
        if (r.size() != d)
          throw std::invalid_argument(
              "system spec: field 'matrices' must hold square matrices");
      if (dim == 0)
        dim = d;
      else if (d != dim)
        throw std::invalid_argument(
            "system spec: field 'matrices' must share one dimension");
      s.matrices.push_back(std::move(rows));
    }
    if (doc.contains("periodic")) {
      if (!doc["periodic"].is_boolean())
        throw std::invalid_argument(
            "system spec: field 'periodic' must be a boolean");
      s.periodic = doc["periodic"].get<bool>();
    }
  } else if (s.kind == "random") {
    auto allowed = common;
    allowed.insert("seed");
    allowed.insert("dimension");
    allowed.insert("radius");
    reject_unknown(doc, allowed);
    if (!doc.contains("seed") || !doc["seed"].is_number_unsigned())
      throw std::invalid_argument(
          "system spec: field 'seed' must be a non-negative integer");
    s.seed = doc["seed"].get<std::uint64_t>();
    if (!doc.contains("dimension") || !doc["dimension"].is_number_unsigned() ||
        doc["dimension"].get<std::uint64_t>() == 0)
      throw std::invalid_argument(
          "system spec: field 'dimension' must be a positive integer");
    s.dimension = doc["dimension"].get<std::size_t>();
    s.radius = require_number(doc, "radius");
    if (!(s.radius > 0.0))
      throw std::invalid_argument("system spec: field 'radius' must be > 0");
  } else if (s.kind == "closed-form") {
    auto allowed = common;
    allowed.insert("form");
    allowed.insert("c");
    reject_unknown(doc, allowed);
    if (!doc.contains("form") || !doc["form"].is_string())
      throw std::invalid_argument(
          "system spec: missing string field 'form'");
    s.form = doc["form"].get<std::string>();
    if (s.form != "paper-example")
      throw std::invalid_argument(
          "system spec: field 'form' supports only \"paper-example\"");
    s.c = require_number(doc, "c");
    if (s.c < 0.0)
      throw std::invalid_argument("system spec: field 'c' must be >= 0");
  } else {
    throw std::invalid_argument(
        "system spec: field 'kind' must be one of \"paper-example\", "
        "\"constant-scalar\", \"diagonal\", \"dense-sequence\", \"random\", "
        "\"closed-form\", got \"" + s.kind + "\"");
  }
  return s;
}

SystemSpec load_system_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::invalid_argument("cannot open system spec file: " + path);
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("system spec is not valid JSON: " +
                                std::string(e.what()));
  }
  return parse_system_spec(doc);
}

json emit_system_spec(const SystemSpec& s) {
  json doc;
  doc["kind"] = s.kind;
  doc["norm"] = to_string(s.norm);
  if (!s.label.empty()) doc["label"] = s.label;
  if (s.kind == "paper-example") doc["c"] = s.c;
  if (s.kind == "constant-scalar") doc["a"] = s.a;
  if (s.kind == "diagonal") doc["entries"] = s.entries;
  if (s.kind == "dense-sequence") {
    doc["matrices"] = s.matrices;
    doc["periodic"] = s.periodic;
  }
  if (s.kind == "random") {
    doc["seed"] = s.seed;
    doc["dimension"] = s.dimension;
    doc["radius"] = s.radius;
  }
  if (s.kind == "closed-form") {
    doc["form"] = s.form;
    doc["c"] = s.c;
  }
  return doc;
}

EvolutionFamily to_family(const SystemSpec& s) {
  if (s.kind == "paper-example") return zoo::paper_example(s.c, s.norm);
  if (s.kind == "constant-scalar") return zoo::constant_scalar(s.a, s.norm);
  if (s.kind == "diagonal") return zoo::diagonal_family(s.entries, s.norm);
  if (s.kind == "dense-sequence") {
    std::vector<Matrix> steps;
    for (const auto& rows : s.matrices) {
      Matrix m(rows.size(), rows.size());
      for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
      steps.push_back(std::move(m));
    }
    return zoo::dense_periodic(std::move(steps), s.periodic, s.norm);
  }
  if (s.kind == "random")
    return zoo::random_family(s.seed, s.dimension, s.radius, s.norm);
  if (s.kind == "closed-form")
    return zoo::paper_example_closed_form(s.c, s.norm);
  throw std::invalid_argument("to_family: unknown kind '" + s.kind + "'");
}

json ext_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

}  // namespace expstab
