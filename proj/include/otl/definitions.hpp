#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "otl/reasoner.hpp"

namespace otl {

enum class DefinitionKind { intensional, extensional };

/// Formal definition of a concept plus its English "formal gloss". Glosses are
/// generated text, not term definitions.
struct GeneratedDefinition {
  std::string concept_id;
  DefinitionKind kind = DefinitionKind::intensional;
  std::string genus;                      // intensional only
  std::vector<std::string> differentiae;  // intensional only, declaration order
  std::vector<std::string> subordinates;  // extensional only, sorted
  std::string gloss;
};

inline const std::string& label_of_concept(const Model& m, const std::string& id) {
  return m.find_concept(id)->label;
}

/// Genus-differentia form built from the declared genus.
/// Throws E_ROOT_NO_INTENSIONAL for roots.
inline GeneratedDefinition intensional_definition(const ValidatedModel& vm, std::string_view concept_id) {
  const Concept& c = vm.concept_at(vm.concept_index(concept_id));
  if (!c.genus) {
    throw Error(code::root_no_intensional,
                "'" + c.id + "' is a root concept with no genus; use an extensional definition instead");
  }
  const Model& m = vm.model();
  GeneratedDefinition def;
  def.concept_id = c.id;
  def.kind = DefinitionKind::intensional;
  def.genus = *c.genus;
  def.differentiae = c.differentiae;

  def.gloss = c.label + ": " + label_of_concept(m, *c.genus) + " that is ";
  for (std::size_t i = 0; i < c.differentiae.size(); ++i) {
    if (i) def.gloss += " and ";
    def.gloss += m.find_difference(c.differentiae[i])->label;
  }
  return def;
}

/// Subordinates one level down in the derived hierarchy, sorted by identifier.
inline std::vector<std::string> direct_subordinates(const ValidatedModel& vm, std::string_view concept_id) {
  const std::string id(concept_id);
  std::vector<std::string> out;
  for (const auto& [sub, supers] : vm.hierarchy().direct_super) {
    if (std::binary_search(supers.begin(), supers.end(), id)) out.push_back(sub);
  }
  return out;  // map iteration order is already sorted
}

/// Enumerational definition: lists subordinate concepts, never objects.
/// Throws E_NO_SUBORDINATES for leaves.
inline GeneratedDefinition extensional_definition(const ValidatedModel& vm, std::string_view concept_id) {
  const Concept& c = vm.concept_at(vm.concept_index(concept_id));
  GeneratedDefinition def;
  def.concept_id = c.id;
  def.kind = DefinitionKind::extensional;
  def.subordinates = direct_subordinates(vm, c.id);
  if (def.subordinates.empty()) {
    throw Error(code::no_subordinates, "'" + c.id + "' has no subordinate concepts to enumerate");
  }
  def.gloss = c.label + ": one of ";
  for (std::size_t i = 0; i < def.subordinates.size(); ++i) {
    if (i) def.gloss += ", ";
    def.gloss += label_of_concept(vm.model(), def.subordinates[i]);
  }
  return def;
}

/// Gloss line followed by the formal form, e.g.
///   OpticalMouse: PointingDevice that is optical
///   formal: PointingDevice + optical
inline std::string render_definition(const GeneratedDefinition& def) {
  std::string out = def.gloss + "\nformal: ";
  if (def.kind == DefinitionKind::intensional) {
    out += def.genus + " + ";
    for (std::size_t i = 0; i < def.differentiae.size(); ++i) {
      if (i) out += ", ";
      out += def.differentiae[i];
    }
  } else {
    out += "one of {";
    for (std::size_t i = 0; i < def.subordinates.size(); ++i) {
      if (i) out += ", ";
      out += def.subordinates[i];
    }
    out += "}";
  }
  return out + "\n";
}

/// Description of an object by its accidents: its concept, its attribute
/// values (sorted by attribute), then the parts declared for its concept.
/// Essential differentiae are deliberately absent.
inline std::string describe_object(const ValidatedModel& vm, std::string_view object_id) {
  const ObjectInstance& o = vm.model().objects[vm.object_index(object_id)];
  std::string out = o.id + " : " + o.concept_id + "\n";
  for (const auto& [attr, value] : o.values) out += attr + " = " + format_value(value) + "\n";
  for (const auto& p : vm.model().parts) {
    if (p.whole != o.concept_id) continue;
    out += "part " + p.part;
    if (p.note) out += " " + quote_string(*p.note);
    out += "\n";
  }
  return out;
}

namespace detail {

inline std::size_t display_width(std::string_view s) {
  std::size_t w = 0;
  for (unsigned char c : s) {
    if ((c & 0xC0) != 0x80) ++w;
  }
  return w;
}

inline std::string formal_gloss(const ValidatedModel& vm, const Concept& c) {
  if (c.genus) return intensional_definition(vm, c.id).gloss;
  if (!direct_subordinates(vm, c.id).empty()) return extensional_definition(vm, c.id).gloss;
  return "-";
}

}  // namespace detail

/// Terminology report for one language: a row per concept (generic before
/// specific, then by identifier) with its terms by status, the terms' own
/// definitions and the formal gloss. Columns are separated by two spaces.
/// Concepts lacking a preferred term are listed as W_NO_PREFERRED_TERM notes.
inline std::string lexicon(const ValidatedModel& vm, std::string_view language) {
  const Model& m = vm.model();
  if (m.concepts.empty()) return {};

  const std::vector<std::string> header = {"CONCEPT",      "PREFERRED",  "STANDARDIZED", "ADMITTED",
                                           "DEPRECATED",   "DEFINITION", "FORMAL GLOSS"};
  std::vector<std::vector<std::string>> rows{header};
  std::vector<std::string> notes;

  for (const auto& id : concepts_top_down(vm)) {
    const Concept& c = vm.concept_at(vm.concept_index(id));
    std::map<TermStatus, std::vector<std::string>> by_status;
    std::vector<std::string> definitions;
    for (const auto& t : m.terms) {
      if (t.concept_id != id || t.language != language) continue;
      by_status[t.status].push_back(quote_string(t.designation));
      if (t.nl_definition) definitions.push_back(quote_string(*t.nl_definition));
    }
    auto cell = [](const std::vector<std::string>& xs) {
      if (xs.empty()) return std::string("-");
      std::string out;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out += "; ";
        out += xs[i];
      }
      return out;
    };
    rows.push_back({c.id, cell(by_status[TermStatus::preferred]), cell(by_status[TermStatus::standardized]),
                    cell(by_status[TermStatus::admitted]), cell(by_status[TermStatus::deprecated]),
                    cell(definitions), detail::formal_gloss(vm, c)});
    if (by_status[TermStatus::preferred].empty()) {
      notes.push_back(std::string(code::no_preferred_term) + " " + id + ": no preferred term in '" +
                      std::string(language) + "'");
    }
  }

  std::vector<std::size_t> widths(header.size(), 0);
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) widths[i] = std::max(widths[i], detail::display_width(r[i]));
  }
  std::string out;
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      out += r[i];
      if (i + 1 < r.size()) out += std::string(widths[i] - detail::display_width(r[i]) + 2, ' ');
    }
    out += "\n";
  }
  if (!notes.empty()) {
    out += "\n";
    for (const auto& n : notes) out += n + "\n";
  }
  return out;
}

}  // namespace otl
