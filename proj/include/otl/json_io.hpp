#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "otl/class_expr.hpp"
#include "otl/model.hpp"
#include "otl/parser.hpp"
#include "otl/reasoner.hpp"

namespace otl {

inline constexpr std::string_view kJsonVersion = "otl-json/1";

namespace detail {

using json = nlohmann::json;

inline json opt(const std::optional<std::string>& s) { return s ? json(*s) : json(nullptr); }

inline json value_to_json(const Value& v) {
  if (auto s = std::get_if<std::string>(&v)) return json{{"text", *s}};
  if (auto d = std::get_if<Decimal>(&v)) return json{{"number", d->str()}};
  return json{{"boolean", std::get<bool>(v)}};
}

inline json expr_to_json(const ClassExpr& e) {
  using K = ClassExpr::Kind;
  switch (e.kind) {
    case K::in_concept: return json{{"op", "in"}, {"concept", e.ref}};
    case K::attr_equals: return json{{"op", "eq"}, {"attribute", e.ref}, {"value", value_to_json(e.value)}};
    case K::has_attr: return json{{"op", "has"}, {"attribute", e.ref}};
    case K::conj:
    case K::disj: {
      json args = json::array();
      for (const auto& c : e.children) args.push_back(expr_to_json(c));
      return json{{"op", e.kind == K::conj ? "and" : "or"}, {"args", std::move(args)}};
    }
    case K::negation: return json{{"op", "not"}, {"arg", expr_to_json(e.children.front())}};
  }
  return json();
}

}  // namespace detail

/// Canonical JSON: sorted keys, arrays in declaration order, two-space indent,
/// LF line ends, trailing newline. Includes the derived intension of every concept.
inline std::string to_json(const ValidatedModel& vm) {
  using detail::json;
  using detail::opt;
  const Model& m = vm.model();
  json root = json::object();
  root["version"] = kJsonVersion;

  json diffs = json::array();
  for (const auto& d : m.differences) diffs.push_back({{"id", d.id}, {"label", d.label}, {"axis", opt(d.axis)}});
  root["differences"] = std::move(diffs);

  json axes = json::array();
  for (const auto& a : m.axes) {
    axes.push_back({{"id", a.id},
                    {"label", a.label},
                    {"scope", a.scope},
                    {"members", a.members},
                    {"exclusive", a.exclusive}});
  }
  root["axes"] = std::move(axes);

  json concepts = json::array();
  for (std::size_t i = 0; i < m.concepts.size(); ++i) {
    const Concept& c = m.concepts[i];
    json in = json::array();
    for (const auto& d : intension(vm, c.id)) in.push_back(d);
    concepts.push_back({{"id", c.id},
                        {"label", c.label},
                        {"genus", opt(c.genus)},
                        {"differentiae", c.differentiae},
                        {"intension", std::move(in)}});
  }
  root["concepts"] = std::move(concepts);

  json attrs = json::array();
  for (const auto& a : m.attributes) {
    attrs.push_back({{"id", a.id}, {"label", a.label}, {"domain", a.domain}, {"kind", to_string(a.kind)}});
  }
  root["attributes"] = std::move(attrs);

  json objects = json::array();
  for (const auto& o : m.objects) {
    json values = json::object();
    for (const auto& [k, v] : o.values) values[k] = detail::value_to_json(v);
    objects.push_back({{"id", o.id}, {"label", o.label}, {"concept", o.concept_id}, {"values", std::move(values)}});
  }
  root["objects"] = std::move(objects);

  json parts = json::array();
  for (const auto& p : m.parts) parts.push_back({{"whole", p.whole}, {"part", p.part}, {"note", opt(p.note)}});
  root["parts"] = std::move(parts);

  json links = json::array();
  for (const auto& l : m.links) {
    links.push_back({{"id", l.id}, {"type", to_string(l.type)}, {"source", l.source}, {"target", l.target}});
  }
  root["relations"] = std::move(links);

  json terms = json::array();
  for (const auto& t : m.terms) {
    terms.push_back({{"designation", t.designation},
                     {"language", t.language},
                     {"status", to_string(t.status)},
                     {"concept", t.concept_id},
                     {"definition", opt(t.nl_definition)}});
  }
  root["terms"] = std::move(terms);

  json classes = json::array();
  for (const auto& c : m.classes) classes.push_back({{"id", c.id}, {"expr", detail::expr_to_json(c.expr)}});
  root["classes"] = std::move(classes);

  return root.dump(2, ' ', false, json::error_handler_t::replace) + "\n";
}

namespace detail {

struct SchemaError {
  std::string path;
  std::string message;
};

// Walks a JSON document while tracking the JSON-pointer path of the current node.
class JsonReader {
 public:
  explicit JsonReader(const json& doc) : doc_(doc) {}

  Model read() {
    Model m;
    expect_object(doc_, "");
    const json& version = field(doc_, "", "version");
    if (!version.is_string() || version.get<std::string>() != kJsonVersion) {
      fail("/version", "expected \"" + std::string(kJsonVersion) + "\"");
    }
    each(doc_, "differences", [&](const json& j, const std::string& p) {
      m.differences.push_back({ident(j, p, "id"), text(j, p, "label"), opt_ident(j, p, "axis"), std::nullopt});
    });
    each(doc_, "axes", [&](const json& j, const std::string& p) {
      Axis a{ident(j, p, "id"), text(j, p, "label"), ident(j, p, "scope"), ident_list(j, p, "members"), true,
             std::nullopt};
      const json& ex = field(j, p, "exclusive");
      if (!ex.is_boolean()) fail(p + "/exclusive", "expected boolean");
      a.exclusive = ex.get<bool>();
      m.axes.push_back(std::move(a));
    });
    each(doc_, "concepts", [&](const json& j, const std::string& p) {
      Concept c{ident(j, p, "id"), text(j, p, "label"), opt_ident(j, p, "genus"), ident_list(j, p, "differentiae"),
                std::nullopt};
      ident_list(j, p, "intension");
      m.concepts.push_back(std::move(c));
    });
    each(doc_, "attributes", [&](const json& j, const std::string& p) {
      auto kind = value_kind_from_string(text(j, p, "kind"));
      if (!kind) fail(p + "/kind", "expected text, number or boolean");
      m.attributes.push_back({ident(j, p, "id"), text(j, p, "label"), ident(j, p, "domain"), *kind, std::nullopt});
    });
    each(doc_, "objects", [&](const json& j, const std::string& p) {
      ObjectInstance o{ident(j, p, "id"), text(j, p, "label"), ident(j, p, "concept"), {}, std::nullopt};
      const json& values = field(j, p, "values");
      expect_object(values, p + "/values");
      for (const auto& [k, v] : values.items()) {
        if (!is_valid_identifier(k)) fail(p + "/values", "invalid attribute identifier '" + k + "'");
        o.values.emplace(k, value(v, p + "/values/" + escape(k)));
      }
      m.objects.push_back(std::move(o));
    });
    each(doc_, "parts", [&](const json& j, const std::string& p) {
      m.parts.push_back({ident(j, p, "whole"), ident(j, p, "part"), opt_text(j, p, "note"), std::nullopt});
    });
    each(doc_, "relations", [&](const json& j, const std::string& p) {
      auto type = relation_type_from_string(text(j, p, "type"));
      if (!type) fail(p + "/type", "unknown relation type");
      m.links.push_back({ident(j, p, "id"), *type, ident(j, p, "source"), ident(j, p, "target"), std::nullopt});
    });
    each(doc_, "terms", [&](const json& j, const std::string& p) {
      auto status = term_status_from_string(text(j, p, "status"));
      if (!status) fail(p + "/status", "unknown term status");
      m.terms.push_back({text(j, p, "designation"), ident(j, p, "language"), *status, ident(j, p, "concept"),
                         opt_text(j, p, "definition"), std::nullopt});
    });
    each(doc_, "classes", [&](const json& j, const std::string& p) {
      m.classes.push_back({ident(j, p, "id"), expr(field(j, p, "expr"), p + "/expr", 0), std::nullopt});
    });
    return m;
  }

  [[noreturn]] static void fail(std::string path, std::string message) {
    throw SchemaError{path.empty() ? "/" : std::move(path), std::move(message)};
  }

 private:
  static std::string escape(const std::string& key) {
    std::string out;
    for (char c : key) {
      if (c == '~') out += "~0";
      else if (c == '/') out += "~1";
      else out += c;
    }
    return out;
  }

  static void expect_object(const json& j, const std::string& p) {
    if (!j.is_object()) fail(p, "expected object");
  }

  static const json& field(const json& j, const std::string& p, const std::string& key) {
    expect_object(j, p);
    auto it = j.find(key);
    if (it == j.end()) fail(p + "/" + key, "missing field");
    return *it;
  }

  template <class F>
  void each(const json& j, const std::string& key, F&& f) {
    const json& arr = field(j, "", key);
    if (!arr.is_array()) fail("/" + key, "expected array");
    for (std::size_t i = 0; i < arr.size(); ++i) f(arr[i], "/" + key + "/" + std::to_string(i));
  }

  static std::string text(const json& j, const std::string& p, const std::string& key) {
    const json& v = field(j, p, key);
    if (!v.is_string()) fail(p + "/" + key, "expected string");
    return v.get<std::string>();
  }

  static std::string ident(const json& j, const std::string& p, const std::string& key) {
    std::string s = text(j, p, key);
    if (!is_valid_identifier(s)) fail(p + "/" + key, "invalid identifier '" + s + "'");
    return s;
  }

  static std::optional<std::string> opt_text(const json& j, const std::string& p, const std::string& key) {
    if (field(j, p, key).is_null()) return std::nullopt;
    return text(j, p, key);
  }

  static std::optional<std::string> opt_ident(const json& j, const std::string& p, const std::string& key) {
    if (field(j, p, key).is_null()) return std::nullopt;
    return ident(j, p, key);
  }

  static std::vector<std::string> ident_list(const json& j, const std::string& p, const std::string& key) {
    const json& arr = field(j, p, key);
    if (!arr.is_array()) fail(p + "/" + key, "expected array");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
      std::string path = p + "/" + key + "/" + std::to_string(i);
      if (!arr[i].is_string() || !is_valid_identifier(arr[i].get<std::string>())) fail(path, "expected identifier");
      out.push_back(arr[i].get<std::string>());
    }
    return out;
  }

  static Value value(const json& j, const std::string& p) {
    if (!j.is_object() || j.size() != 1) fail(p, "expected one of {\"text\"}, {\"number\"}, {\"boolean\"}");
    auto it = j.begin();
    if (it.key() == "text" && it->is_string()) return it->get<std::string>();
    if (it.key() == "boolean" && it->is_boolean()) return it->get<bool>();
    if (it.key() == "number" && it->is_string()) {
      if (auto d = Decimal::parse(it->get<std::string>())) return *d;
      fail(p + "/number", "expected decimal literal");
    }
    fail(p, "expected one of {\"text\"}, {\"number\"}, {\"boolean\"}");
  }

  static ClassExpr expr(const json& j, const std::string& p, int depth) {
    if (depth > detail::Parser::kMaxNesting) fail(p, "expression nested too deeply");
    std::string op = text(j, p, "op");
    if (op == "in") return ClassExpr::in(ident(j, p, "concept"));
    if (op == "has") return ClassExpr::has(ident(j, p, "attribute"));
    if (op == "eq") return ClassExpr::equals(ident(j, p, "attribute"), value(field(j, p, "value"), p + "/value"));
    if (op == "not") return ClassExpr::negate(expr(field(j, p, "arg"), p + "/arg", depth + 1));
    if (op == "and" || op == "or") {
      const json& args = field(j, p, "args");
      if (!args.is_array() || args.size() < 2) fail(p + "/args", "expected array of at least two expressions");
      std::vector<ClassExpr> xs;
      for (std::size_t i = 0; i < args.size(); ++i) {
        xs.push_back(expr(args[i], p + "/args/" + std::to_string(i), depth + 1));
      }
      return op == "and" ? ClassExpr::all_of(std::move(xs)) : ClassExpr::any_of(std::move(xs));
    }
    fail(p + "/op", "unknown operator '" + op + "'");
  }

  const json& doc_;
};

}  // namespace detail

/// Loads canonical JSON and validates the result. Schema problems are reported
/// as E_JSON_SCHEMA with a JSON-pointer location; the stored intensions must
/// match the recomputed ones.
inline ValidationResult from_json(std::string_view text) {
  using detail::json;
  ValidationResult result;
  auto schema_error = [&](std::string path, std::string message) {
    result.diagnostics.push_back(
        make_diagnostic(Severity::error, code::json_schema, std::move(message), std::nullopt, std::move(path)));
    return result;
  };

  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    return schema_error("/", e.what());
  }

  Model m;
  try {
    m = detail::JsonReader(doc).read();
  } catch (const detail::SchemaError& e) {
    return schema_error(e.path, e.message);
  }

  result = validate(std::move(m));
  if (!result.model) return result;

  const json& concepts = doc["concepts"];
  for (std::size_t i = 0; i < concepts.size(); ++i) {
    auto stored = concepts[i]["intension"].get<std::vector<std::string>>();
    auto computed = intension(*result.model, concepts[i]["id"].get<std::string>());
    if (std::set<std::string>(stored.begin(), stored.end()) != computed || stored.size() != computed.size()) {
      result.model.reset();
      return schema_error("/concepts/" + std::to_string(i) + "/intension",
                          "stored intension does not match the one derived from genus and differentiae");
    }
  }
  return result;
}

}  // namespace otl
