#pragma once

#include <string>
#include <utility>
#include <vector>

#include "otl/value.hpp"

namespace otl {

/// Logical formula over objects. Atoms test concept membership or attribute
/// values; And/Or/Not combine them. And/Or nodes carry at least two children.
struct ClassExpr {
  enum class Kind { in_concept, attr_equals, has_attr, conj, disj, negation };

  Kind kind = Kind::in_concept;
  std::string ref;  // concept id for in_concept, attribute id for attr_equals/has_attr
  Value value;      // attr_equals only
  std::vector<ClassExpr> children;

  static ClassExpr in(std::string concept_id) {
    ClassExpr e;
    e.kind = Kind::in_concept;
    e.ref = std::move(concept_id);
    return e;
  }
  static ClassExpr equals(std::string attribute_id, Value v) {
    ClassExpr e;
    e.kind = Kind::attr_equals;
    e.ref = std::move(attribute_id);
    e.value = std::move(v);
    return e;
  }
  static ClassExpr has(std::string attribute_id) {
    ClassExpr e;
    e.kind = Kind::has_attr;
    e.ref = std::move(attribute_id);
    return e;
  }
  static ClassExpr all_of(std::vector<ClassExpr> xs) { return nary(Kind::conj, std::move(xs)); }
  static ClassExpr any_of(std::vector<ClassExpr> xs) { return nary(Kind::disj, std::move(xs)); }
  static ClassExpr negate(ClassExpr x) {
    ClassExpr e;
    e.kind = Kind::negation;
    e.children.push_back(std::move(x));
    return e;
  }

  bool is_atom() const {
    return kind == Kind::in_concept || kind == Kind::attr_equals || kind == Kind::has_attr;
  }

  friend bool operator==(const ClassExpr&, const ClassExpr&) = default;

 private:
  static ClassExpr nary(Kind k, std::vector<ClassExpr> xs) {
    ClassExpr e;
    e.kind = k;
    e.children = std::move(xs);
    return e;
  }
};

/// Surface syntax of an expression. Nested and/or nodes are parenthesized so
/// that parsing the output yields the same tree.
inline std::string format_class_expr(const ClassExpr& e) {
  using K = ClassExpr::Kind;
  switch (e.kind) {
    case K::in_concept: return "in " + e.ref;
    case K::attr_equals: return e.ref + " = " + format_value(e.value);
    case K::has_attr: return "has " + e.ref;
    case K::negation: {
      const ClassExpr& c = e.children.front();
      if (c.is_atom() || c.kind == K::negation) return "not " + format_class_expr(c);
      return "not (" + format_class_expr(c) + ")";
    }
    case K::conj:
    case K::disj: {
      std::string out;
      const char* sep = e.kind == K::conj ? " and " : " or ";
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        const ClassExpr& c = e.children[i];
        bool wrap = c.kind == K::disj || (c.kind == K::conj && e.kind == K::conj);
        if (i) out += sep;
        out += wrap ? "(" + format_class_expr(c) + ")" : format_class_expr(c);
      }
      return out;
    }
  }
  return {};
}

}  // namespace otl
