#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "otl/class_expr.hpp"
#include "otl/diagnostic.hpp"
#include "otl/value.hpp"

namespace otl {

/// Essential characteristic: a unary predicate that a concept's nature requires.
struct Difference {
  std::string id;
  std::string label;
  std::optional<std::string> axis;
  std::optional<SourceSpan> span;
};

/// Subdivision criterion: a group of differences scoped at one concept. When
/// exclusive, no intension may contain two of its members.
struct Axis {
  std::string id;
  std::string label;
  std::string scope;
  std::vector<std::string> members;
  bool exclusive = true;
  std::optional<SourceSpan> span;
};

struct Concept {
  std::string id;
  std::string label;
  std::optional<std::string> genus;
  std::vector<std::string> differentiae;  // declaration order
  std::optional<SourceSpan> span;
};

/// Descriptive characteristic: binary predicate (object, value).
struct AttributeDecl {
  std::string id;
  std::string label;
  std::string domain;
  ValueKind kind = ValueKind::text;
  std::optional<SourceSpan> span;
};

struct ObjectInstance {
  std::string id;
  std::string label;
  std::string concept_id;
  std::map<std::string, Value> values;
  std::optional<SourceSpan> span;
};

/// Whole/part link between concepts. Not an order: no closure is ever taken.
struct PartLink {
  std::string whole;
  std::string part;
  std::optional<std::string> note;
  std::optional<SourceSpan> span;
};

enum class RelationType { associative, sequential, temporal, causal, producer_product };

inline std::string_view to_string(RelationType t) {
  switch (t) {
    case RelationType::associative: return "associative";
    case RelationType::sequential: return "sequential";
    case RelationType::temporal: return "temporal";
    case RelationType::causal: return "causal";
    case RelationType::producer_product: return "producer_product";
  }
  return "associative";
}

/// `cause_effect` is accepted as a spelling of `causal`.
inline std::optional<RelationType> relation_type_from_string(std::string_view s) {
  if (s == "associative") return RelationType::associative;
  if (s == "sequential") return RelationType::sequential;
  if (s == "temporal") return RelationType::temporal;
  if (s == "causal" || s == "cause_effect") return RelationType::causal;
  if (s == "producer_product") return RelationType::producer_product;
  return std::nullopt;
}

inline std::optional<RelationType> relation_parent(RelationType t) {
  switch (t) {
    case RelationType::associative: return std::nullopt;
    case RelationType::causal: return RelationType::sequential;
    default: return RelationType::associative;
  }
}

/// True when `sub` equals `super` or lies below it in the relation-type taxonomy
/// (associative > sequential > causal; associative > temporal, producer_product).
inline bool relation_is_a(RelationType sub, RelationType super) {
  for (std::optional<RelationType> t = sub; t; t = relation_parent(*t)) {
    if (*t == super) return true;
  }
  return false;
}

struct AssociativeLink {
  std::string id;
  RelationType type = RelationType::associative;
  std::string source;
  std::string target;
  std::optional<SourceSpan> span;
};

enum class TermStatus { preferred, admitted, deprecated, standardized };

inline std::string_view to_string(TermStatus s) {
  switch (s) {
    case TermStatus::preferred: return "preferred";
    case TermStatus::admitted: return "admitted";
    case TermStatus::deprecated: return "deprecated";
    case TermStatus::standardized: return "standardized";
  }
  return "preferred";
}

inline std::optional<TermStatus> term_status_from_string(std::string_view s) {
  if (s == "preferred") return TermStatus::preferred;
  if (s == "admitted") return TermStatus::admitted;
  if (s == "deprecated") return TermStatus::deprecated;
  if (s == "standardized") return TermStatus::standardized;
  return std::nullopt;
}

/// Designation linking usage to the conceptual model. The natural-language
/// definition belongs to the term, not to the concept.
struct Term {
  std::string designation;
  std::string language;
  TermStatus status = TermStatus::preferred;
  std::string concept_id;
  std::optional<std::string> nl_definition;
  std::optional<SourceSpan> span;
};

struct ClassDef {
  std::string id;
  ClassExpr expr;
  std::optional<SourceSpan> span;
};

/// The conceptual system as authored. Unvalidated: references are symbolic and
/// may dangle until validate() resolves them.
struct Model {
  std::vector<Difference> differences;
  std::vector<Axis> axes;
  std::vector<Concept> concepts;
  std::vector<AttributeDecl> attributes;
  std::vector<ObjectInstance> objects;
  std::vector<PartLink> parts;
  std::vector<AssociativeLink> links;
  std::vector<Term> terms;
  std::vector<ClassDef> classes;

  template <class T>
  static const T* find_in(const std::vector<T>& xs, std::string_view id) {
    auto it = std::find_if(xs.begin(), xs.end(), [&](const T& x) { return x.id == id; });
    return it == xs.end() ? nullptr : &*it;
  }

  const Concept* find_concept(std::string_view id) const { return find_in(concepts, id); }
  const Difference* find_difference(std::string_view id) const { return find_in(differences, id); }
  const Axis* find_axis(std::string_view id) const { return find_in(axes, id); }
  const AttributeDecl* find_attribute(std::string_view id) const { return find_in(attributes, id); }
  const ObjectInstance* find_object(std::string_view id) const { return find_in(objects, id); }
  const ClassDef* find_class(std::string_view id) const { return find_in(classes, id); }
};

// ---------------------------------------------------------------------------
// Structural equality: same entities with the same content, ignoring source
// spans and the relative order of top-level declarations. Ordered content
// (differentiae, axis members, class expression children) must match exactly.

namespace detail {

inline auto key(const Difference& d) { return std::make_tuple(d.id, d.label, d.axis); }
inline auto key(const Axis& a) { return std::make_tuple(a.id, a.label, a.scope, a.members, a.exclusive); }
inline auto key(const Concept& c) { return std::make_tuple(c.id, c.label, c.genus, c.differentiae); }
inline auto key(const AttributeDecl& a) { return std::make_tuple(a.id, a.label, a.domain, a.kind); }
inline auto key(const PartLink& p) { return std::make_tuple(p.whole, p.part, p.note); }
inline auto key(const AssociativeLink& l) { return std::make_tuple(l.id, l.type, l.source, l.target); }
inline auto key(const Term& t) {
  return std::make_tuple(t.designation, t.language, t.status, t.concept_id, t.nl_definition);
}

template <class T>
bool same_collection(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) return false;
  using K = decltype(key(a.front()));
  std::vector<K> ka, kb;
  for (const auto& x : a) ka.push_back(key(x));
  for (const auto& x : b) kb.push_back(key(x));
  std::sort(ka.begin(), ka.end());
  std::sort(kb.begin(), kb.end());
  return ka == kb;
}

inline bool same_objects(const std::vector<ObjectInstance>& a, const std::vector<ObjectInstance>& b) {
  if (a.size() != b.size()) return false;
  for (const auto& x : a) {
    const ObjectInstance* y = Model::find_in(b, x.id);
    if (!y || y->label != x.label || y->concept_id != x.concept_id || y->values != x.values) return false;
  }
  return true;
}

inline bool same_classes(const std::vector<ClassDef>& a, const std::vector<ClassDef>& b) {
  if (a.size() != b.size()) return false;
  for (const auto& x : a) {
    const ClassDef* y = Model::find_in(b, x.id);
    if (!y || !(y->expr == x.expr)) return false;
  }
  return true;
}

}  // namespace detail

inline bool structurally_equal(const Model& a, const Model& b) {
  return detail::same_collection(a.differences, b.differences) &&
         detail::same_collection(a.axes, b.axes) &&
         detail::same_collection(a.concepts, b.concepts) &&
         detail::same_collection(a.attributes, b.attributes) &&
         detail::same_objects(a.objects, b.objects) &&
         detail::same_collection(a.parts, b.parts) &&
         detail::same_collection(a.links, b.links) &&
         detail::same_collection(a.terms, b.terms) && detail::same_classes(a.classes, b.classes);
}

// ---------------------------------------------------------------------------

enum class EntityKind { concept_entity, difference, axis, attribute, object, class_def };

inline std::string_view to_string(EntityKind k) {
  switch (k) {
    case EntityKind::concept_entity: return "concept";
    case EntityKind::difference: return "difference";
    case EntityKind::axis: return "axis";
    case EntityKind::attribute: return "attribute";
    case EntityKind::object: return "object";
    case EntityKind::class_def: return "class";
  }
  return "concept";
}

struct EntityRef {
  EntityKind kind;
  std::string id;
  std::size_t index;

  friend bool operator==(const EntityRef&, const EntityRef&) = default;
};

/// Looks a name up across concepts, differences, axes, attributes, objects and
/// classes. Throws E_NOT_FOUND, or E_AMBIGUOUS listing every candidate.
inline EntityRef resolve(const Model& model, std::string_view name) {
  std::vector<EntityRef> hits;
  auto scan = [&](const auto& xs, EntityKind kind) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (xs[i].id == name) hits.push_back({kind, xs[i].id, i});
    }
  };
  scan(model.concepts, EntityKind::concept_entity);
  scan(model.differences, EntityKind::difference);
  scan(model.axes, EntityKind::axis);
  scan(model.attributes, EntityKind::attribute);
  scan(model.objects, EntityKind::object);
  scan(model.classes, EntityKind::class_def);

  if (hits.empty()) throw Error(code::not_found, "no entity named '" + std::string(name) + "'");
  if (hits.size() > 1) {
    std::string msg = "name '" + std::string(name) + "' is ambiguous:";
    for (const auto& h : hits) msg += " " + std::string(to_string(h.kind)) + " " + h.id + ";";
    msg.pop_back();
    throw Error(code::ambiguous, msg);
  }
  return hits.front();
}

/// Intension of a concept computed directly over an unvalidated model by
/// walking the genus chain. Throws E_NOT_FOUND or E_GENUS_CYCLE.
inline std::set<std::string> intension(const Model& model, std::string_view concept_id) {
  std::set<std::string> result;
  std::unordered_set<std::string> seen;
  const Concept* c = model.find_concept(concept_id);
  if (!c) throw Error(code::not_found, "unknown concept '" + std::string(concept_id) + "'");
  while (c) {
    if (!seen.insert(c->id).second) {
      throw Error(code::genus_cycle, "genus cycle through '" + c->id + "'");
    }
    result.insert(c->differentiae.begin(), c->differentiae.end());
    if (!c->genus) break;
    const Concept* g = model.find_concept(*c->genus);
    if (!g) throw Error(code::not_found, "unknown concept '" + *c->genus + "'");
    c = g;
  }
  return result;
}

}  // namespace otl
