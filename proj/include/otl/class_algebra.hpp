#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "otl/class_expr.hpp"
#include "otl/reasoner.hpp"

namespace otl {

namespace detail {

// Membership vector over the model's object universe (closed world).
using Members = std::vector<bool>;

inline Members evaluate_members(const ValidatedModel& vm, const ClassExpr& e) {
  using K = ClassExpr::Kind;
  const auto& objects = vm.model().objects;
  const std::size_t n = objects.size();
  Members out(n, false);
  switch (e.kind) {
    case K::in_concept: {
      const std::size_t c = vm.concept_index(e.ref);
      for (std::size_t o = 0; o < n; ++o) {
        const std::size_t oc = vm.object_concept(o);
        out[o] = oc == c || vm.subsumes_at(c, oc);
      }
      return out;
    }
    case K::attr_equals:
    case K::has_attr: {
      vm.attribute_index(e.ref);
      for (std::size_t o = 0; o < n; ++o) {
        auto it = objects[o].values.find(e.ref);
        out[o] = it != objects[o].values.end() && (e.kind == K::has_attr || it->second == e.value);
      }
      return out;
    }
    case K::conj:
    case K::disj: {
      if (e.children.size() < 2) throw Error(code::arity, "and/or needs at least two operands");
      out = evaluate_members(vm, e.children.front());
      for (std::size_t i = 1; i < e.children.size(); ++i) {
        Members rhs = evaluate_members(vm, e.children[i]);
        for (std::size_t o = 0; o < n; ++o) out[o] = e.kind == K::conj ? out[o] && rhs[o] : out[o] || rhs[o];
      }
      return out;
    }
    case K::negation: {
      if (e.children.size() != 1) throw Error(code::arity, "not needs exactly one operand");
      out = evaluate_members(vm, e.children.front());
      out.flip();
      return out;
    }
  }
  return out;
}

}  // namespace detail

/// Objects satisfying the formula, whatever their concept or attribute structure.
/// Negation complements against the objects declared in the model.
inline std::set<std::string> evaluate_class(const ValidatedModel& vm, const ClassExpr& expr) {
  detail::Members m = detail::evaluate_members(vm, expr);
  std::set<std::string> out;
  for (std::size_t o = 0; o < m.size(); ++o) {
    if (m[o]) out.insert(vm.model().objects[o].id);
  }
  return out;
}

inline std::set<std::string> evaluate_class(const ValidatedModel& vm, std::string_view class_id) {
  const ClassDef* def = vm.model().find_class(class_id);
  if (!def) throw Error(code::not_found, "unknown class '" + std::string(class_id) + "'");
  return evaluate_class(vm, def->expr);
}

struct AxisClash {
  std::string axis;
  std::vector<std::string> differences;  // in axis member order

  friend bool operator==(const AxisClash&, const AxisClash&) = default;
};

/// Combining two intensions would put opposing differences of an exclusive
/// axis into one concept.
struct Contradiction {
  std::vector<AxisClash> clashes;  // axis declaration order
};

using ConjunctionResult = std::variant<ClassExpr, Contradiction>;

/// Conjunction of two concepts as a class. Never mints a concept: the result is
/// either And(in c1, in c2) or the exclusive-axis clashes that make it contradictory.
inline ConjunctionResult concept_conjunction(const ValidatedModel& vm, std::string_view c1, std::string_view c2) {
  const auto& a = vm.intension_at(vm.concept_index(c1));
  const auto& b = vm.intension_at(vm.concept_index(c2));
  ValidatedModel::DiffSet combined;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(combined));

  Contradiction report;
  const auto& model = vm.model();
  for (const auto& axis : model.axes) {
    if (!axis.exclusive) continue;
    AxisClash clash{axis.id, {}};
    for (const auto& m : axis.members) {
      if (std::binary_search(combined.begin(), combined.end(), vm.difference_index(m))) {
        clash.differences.push_back(m);
      }
    }
    if (clash.differences.size() >= 2) report.clashes.push_back(std::move(clash));
  }
  if (!report.clashes.empty()) return report;
  return ClassExpr::all_of({ClassExpr::in(std::string(c1)), ClassExpr::in(std::string(c2))});
}

/// Or of concept atoms; evaluates to the union of the extensions. Needs at
/// least two distinct concepts.
inline ClassExpr concept_disjunction(const ValidatedModel& vm, const std::vector<std::string>& concepts) {
  std::set<std::string> distinct(concepts.begin(), concepts.end());
  if (distinct.size() < 2) throw Error(code::arity, "disjunction needs at least two distinct concepts");
  std::vector<ClassExpr> atoms;
  for (const auto& c : distinct) {
    vm.concept_index(c);
    atoms.push_back(ClassExpr::in(c));
  }
  return ClassExpr::any_of(std::move(atoms));
}

}  // namespace otl
