#pragma once

#include <algorithm>
#include <string>
#include <string_view>

#include "otl/reasoner.hpp"

namespace otl {

enum class RankDir { top_down, left_right };

struct ExportOptions {
  bool include_objects = false;
  bool include_derived_edges = false;
  RankDir rankdir = RankDir::top_down;
};

namespace detail {

inline std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

/// Porphyrian tree as a DOT digraph, edges pointing from genus to species.
/// Solid edges are declared genus links, dashed edges the additional covering
/// edges of the derived hierarchy, dotted edges lead to objects.
inline std::string to_dot(const ValidatedModel& vm, const ExportOptions& opts = {}) {
  const Model& m = vm.model();
  std::string out = "digraph otl {\n";
  out += std::string("  rankdir=") + (opts.rankdir == RankDir::top_down ? "TB" : "LR") + ";\n";
  out += "  node [shape=box];\n";

  for (const auto& c : m.concepts) {
    std::string label = c.label + "\n{";
    for (std::size_t i = 0; i < c.differentiae.size(); ++i) {
      if (i) label += ", ";
      label += m.find_difference(c.differentiae[i])->label;
    }
    label += "}";
    out += "  " + detail::dot_quote(c.id) + " [label=" + detail::dot_quote(label) + "];\n";
  }
  for (const auto& c : m.concepts) {
    if (c.genus) out += "  " + detail::dot_quote(*c.genus) + " -> " + detail::dot_quote(c.id) + ";\n";
  }
  if (opts.include_derived_edges) {
    for (const auto& c : m.concepts) {
      for (const auto& g : vm.hierarchy().supers_of(c.id)) {
        if (c.genus && *c.genus == g) continue;
        out += "  " + detail::dot_quote(g) + " -> " + detail::dot_quote(c.id) + " [style=dashed];\n";
      }
    }
  }
  if (opts.include_objects) {
    for (const auto& o : m.objects) {
      // Object nodes get an '@' prefix so they never merge with a concept node.
      std::string node = detail::dot_quote("@" + o.id);
      out += "  " + node + " [shape=ellipse, label=" + detail::dot_quote(o.label) + "];\n";
      out += "  " + detail::dot_quote(o.concept_id) + " -> " + node + " [style=dotted];\n";
    }
  }
  out += "}\n";
  return out;
}

}  // namespace otl
