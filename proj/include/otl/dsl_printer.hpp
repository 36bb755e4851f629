#pragma once

#include <map>
#include <string>
#include <vector>

#include "otl/model.hpp"
#include "otl/reasoner.hpp"

namespace otl {

namespace detail {

inline std::string join_list(const std::vector<std::string>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ", ";
    out += xs[i];
  }
  return out;
}

}  // namespace detail

/// DSL source for a model. Concepts come genus-first (each followed by the axes
/// scoped at it); the remaining declarations keep model order. Parsing the
/// output yields a structurally equal model. Labels are not representable in
/// the DSL, which always uses the identifier as label.
inline std::string print_dsl(const Model& m) {
  std::string out;
  std::map<std::string, std::vector<const Axis*>> axes_at;
  for (const auto& a : m.axes) axes_at[a.scope].push_back(&a);

  auto print_axis = [&](const Axis& a) {
    out += "axis " + a.id + " of " + a.scope + (a.exclusive ? "" : " nonexclusive") + " { " +
           detail::join_list(a.members) + " }\n";
  };

  std::map<std::string, bool> emitted;
  std::map<std::string, const Concept*> by_id;
  for (const auto& c : m.concepts) by_id[c.id] = &c;

  // Genus chains are acyclic in a validated model; the depth guard keeps this
  // total on arbitrary input.
  std::vector<const Concept*> order;
  for (const auto& c : m.concepts) {
    std::vector<const Concept*> chain;
    const Concept* cur = &c;
    while (cur && !emitted[cur->id] && chain.size() <= m.concepts.size()) {
      chain.push_back(cur);
      emitted[cur->id] = true;
      cur = cur->genus && by_id.count(*cur->genus) ? by_id[*cur->genus] : nullptr;
    }
    order.insert(order.end(), chain.rbegin(), chain.rend());
  }

  for (const Concept* c : order) {
    out += "concept " + c->id;
    if (c->genus) {
      out += " := " + *c->genus;
      if (!c->differentiae.empty()) out += " + " + detail::join_list(c->differentiae);
    } else if (!c->differentiae.empty()) {
      out += " + " + detail::join_list(c->differentiae);
    }
    out += "\n";
    for (const Axis* a : axes_at[c->id]) print_axis(*a);
    axes_at.erase(c->id);
  }
  for (const auto& [scope, axes] : axes_at) {
    (void)scope;
    for (const Axis* a : axes) print_axis(*a);
  }

  for (const auto& a : m.attributes) {
    out += "attribute " + a.id + " : " + std::string(to_string(a.kind)) + " on " + a.domain + "\n";
  }
  for (const auto& o : m.objects) {
    out += "object " + o.id + " : " + o.concept_id;
    if (!o.values.empty()) {
      out += " {";
      bool first = true;
      for (const auto& [k, v] : o.values) {
        out += first ? " " : ", ";
        out += k + " = " + format_value(v);
        first = false;
      }
      out += " }";
    }
    out += "\n";
  }
  for (const auto& p : m.parts) {
    out += "part " + p.whole + " has " + p.part;
    if (p.note) out += " " + quote_string(*p.note);
    out += "\n";
  }
  for (const auto& l : m.links) {
    out += "relation " + l.id + " (" + std::string(to_string(l.type)) + ") " + l.source + " -> " + l.target + "\n";
  }
  for (const auto& t : m.terms) {
    out += "term " + quote_string(t.designation) + " (" + t.language + ", " + std::string(to_string(t.status)) +
           ") for " + t.concept_id;
    if (t.nl_definition) out += " definition " + quote_string(*t.nl_definition);
    out += "\n";
  }
  for (const auto& c : m.classes) out += "class " + c.id + " := { x | " + format_class_expr(c.expr) + " }\n";
  return out;
}

inline std::string print_dsl(const ValidatedModel& vm) { return print_dsl(vm.model()); }

}  // namespace otl
