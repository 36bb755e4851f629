#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "otl/diagnostic.hpp"
#include "otl/model.hpp"

namespace otl {

/// Generic poly-hierarchy derived from intension inclusion.
struct Hierarchy {
  std::vector<std::string> concepts;  // declaration order; indexes below refer to it
  std::vector<std::vector<bool>> above;  // above[g][s]: g subsumes s
  std::map<std::string, std::vector<std::string>> direct_super;  // covering edges, sorted; no empty entries
  std::vector<std::string> roots;  // sorted

  const std::vector<std::string>& supers_of(const std::string& id) const {
    static const std::vector<std::string> none;
    auto it = direct_super.find(id);
    return it == direct_super.end() ? none : it->second;
  }
};

struct ValidationResult;
inline ValidationResult validate(Model model);

namespace detail {
class Validator;
}

/// A model that passed validation, together with its derived indexes. Immutable:
/// every query is a const read, so concurrent use from several threads is safe.
class ValidatedModel {
 public:
  using DiffSet = std::vector<std::size_t>;  // sorted difference indexes

  const Model& model() const noexcept { return model_; }
  const Hierarchy& hierarchy() const noexcept { return hierarchy_; }

  std::size_t concept_index(std::string_view id) const { return index_of(concept_index_, id, "concept"); }
  std::size_t object_index(std::string_view id) const { return index_of(object_index_, id, "object"); }
  std::size_t attribute_index(std::string_view id) const {
    return index_of(attribute_index_, id, "attribute");
  }
  std::size_t difference_index(std::string_view id) const {
    return index_of(difference_index_, id, "difference");
  }
  bool has_concept(std::string_view id) const { return concept_index_.count(std::string(id)) > 0; }
  bool has_attribute(std::string_view id) const { return attribute_index_.count(std::string(id)) > 0; }

  const Concept& concept_at(std::size_t i) const { return model_.concepts[i]; }
  const DiffSet& intension_at(std::size_t i) const { return intensions_[i]; }
  std::size_t object_concept(std::size_t object) const { return object_concepts_[object]; }

  bool subsumes_at(std::size_t g, std::size_t s) const { return hierarchy_.above[g][s]; }

  /// Axis index of a difference, or npos when it belongs to none.
  std::size_t axis_of(std::size_t difference) const { return difference_axis_[difference]; }
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  friend ValidationResult validate(Model model);
  friend class detail::Validator;
  ValidatedModel() = default;

  static std::size_t index_of(const std::unordered_map<std::string, std::size_t>& idx,
                              std::string_view id, std::string_view what) {
    auto it = idx.find(std::string(id));
    if (it == idx.end()) {
      throw Error(code::not_found, "unknown " + std::string(what) + " '" + std::string(id) + "'");
    }
    return it->second;
  }

  Model model_;
  Hierarchy hierarchy_;
  std::vector<DiffSet> intensions_;
  std::vector<std::size_t> object_concepts_;
  std::vector<std::size_t> difference_axis_;
  std::unordered_map<std::string, std::size_t> concept_index_, object_index_, attribute_index_,
      difference_index_;
};

struct ValidationResult {
  std::optional<ValidatedModel> model;  // present iff no error diagnostics
  std::vector<Diagnostic> diagnostics;
};

namespace detail {

inline bool strict_subset(const ValidatedModel::DiffSet& a, const ValidatedModel::DiffSet& b) {
  return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline Hierarchy build_hierarchy(const std::vector<Concept>& concepts,
                                 const std::vector<ValidatedModel::DiffSet>& intensions) {
  const std::size_t n = concepts.size();
  Hierarchy h;
  h.above.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    h.concepts.push_back(concepts[i].id);
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) h.above[i][j] = strict_subset(intensions[i], intensions[j]);
    }
  }
  // Transitive reduction: g covers s unless some k sits strictly between them.
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::string> supers;
    for (std::size_t g = 0; g < n; ++g) {
      if (!h.above[g][s]) continue;
      bool covered = true;
      for (std::size_t k = 0; k < n && covered; ++k) {
        if (h.above[g][k] && h.above[k][s]) covered = false;
      }
      if (covered) supers.push_back(concepts[g].id);
    }
    if (supers.empty()) {
      h.roots.push_back(concepts[s].id);
    } else {
      std::sort(supers.begin(), supers.end());
      h.direct_super.emplace(concepts[s].id, std::move(supers));
    }
  }
  std::sort(h.roots.begin(), h.roots.end());
  return h;
}

inline std::string join_ids(const std::vector<std::string>& ids, std::string_view sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += sep;
    out += ids[i];
  }
  return out;
}

class Validator {
 public:
  explicit Validator(Model& m) : m_(m) {}

  std::vector<Diagnostic> run(ValidatedModel& out) {
    // Each stage assumes the previous one succeeded; the first failing stage
    // ends validation.
    if (!resolve_stage()) return finish();
    if (!cycle_stage()) return finish();
    if (!intension_stage()) return finish();
    if (!consistency_stage()) return finish();
    if (!description_stage()) return finish();
    out.intensions_ = std::move(intensions_);
    out.hierarchy_ = std::move(hierarchy_);
    out.object_concepts_ = std::move(object_concepts_);
    out.difference_axis_ = std::move(difference_axis_);
    out.concept_index_ = std::move(concept_idx_);
    out.object_index_ = std::move(object_idx_);
    out.attribute_index_ = std::move(attribute_idx_);
    out.difference_index_ = std::move(difference_idx_);
    return finish();
  }

 private:
  using DiffSet = ValidatedModel::DiffSet;

  std::vector<Diagnostic> finish() {
    sort_diagnostics(diags_);
    return std::move(diags_);
  }

  void report(Severity sev, std::string_view c, std::string msg, const std::optional<SourceSpan>& span,
              const std::string& entity) {
    diags_.push_back(make_diagnostic(sev, c, std::move(msg), span, entity));
  }
  void error(std::string_view c, std::string msg, const std::optional<SourceSpan>& span,
             const std::string& entity) {
    report(Severity::error, c, std::move(msg), span, entity);
  }

  template <class T>
  std::unordered_map<std::string, std::size_t> index(const std::vector<T>& xs, std::string_view what) {
    std::unordered_map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (!idx.emplace(xs[i].id, i).second) {
        error(code::dup_decl, "duplicate " + std::string(what) + " '" + xs[i].id + "'", xs[i].span, xs[i].id);
      }
    }
    return idx;
  }

  // Stage 1: identifiers unique, every reference resolves, structural rules.
  bool resolve_stage() {
    difference_idx_ = index(m_.differences, "difference");
    axis_idx_ = index(m_.axes, "axis");
    concept_idx_ = index(m_.concepts, "concept");
    attribute_idx_ = index(m_.attributes, "attribute");
    object_idx_ = index(m_.objects, "object");
    index(m_.links, "relation");
    index(m_.classes, "class");

    auto unresolved = [&](std::string_view kind, const std::string& ref, const std::optional<SourceSpan>& span,
                          const std::string& entity) {
      error(code::unresolved, "unresolved " + std::string(kind) + " '" + ref + "' in '" + entity + "'", span,
            entity);
    };

    for (const auto& d : m_.differences) {
      if (!d.axis) continue;
      auto it = axis_idx_.find(*d.axis);
      if (it == axis_idx_.end()) {
        unresolved("axis", *d.axis, d.span, d.id);
        continue;
      }
      const auto& members = m_.axes[it->second].members;
      if (std::find(members.begin(), members.end(), d.id) == members.end()) {
        error(code::axis_shared, "difference '" + d.id + "' names axis '" + *d.axis + "' which does not list it",
              d.span, d.id);
      }
    }

    for (const auto& a : m_.axes) {
      if (!concept_idx_.count(a.scope)) unresolved("concept", a.scope, a.span, a.id);
      std::set<std::string> distinct(a.members.begin(), a.members.end());
      if (distinct.size() < 2) {
        error(code::axis_members, "axis '" + a.id + "' needs at least two distinct differences", a.span, a.id);
      }
      for (const auto& mem : a.members) {
        auto it = difference_idx_.find(mem);
        if (it == difference_idx_.end()) {
          unresolved("difference", mem, a.span, a.id);
        } else if (m_.differences[it->second].axis != a.id) {
          error(code::axis_shared,
                "difference '" + mem + "' already belongs to axis '" +
                    m_.differences[it->second].axis.value_or("<none>") + "'",
                a.span, a.id);
        }
      }
    }

    for (const auto& c : m_.concepts) {
      if (c.genus && !concept_idx_.count(*c.genus)) unresolved("genus", *c.genus, c.span, c.id);
      if (c.genus && c.differentiae.empty()) {
        error(code::no_delimiting, "concept '" + c.id + "' has genus '" + *c.genus +
                                       "' but no delimiting characteristic",
              c.span, c.id);
      }
      std::set<std::string> seen;
      for (const auto& d : c.differentiae) {
        if (!difference_idx_.count(d)) unresolved("difference", d, c.span, c.id);
        if (!seen.insert(d).second) {
          error(code::no_delimiting, "differentia '" + d + "' repeated in '" + c.id + "'", c.span, c.id);
        }
      }
    }

    for (const auto& a : m_.attributes) {
      if (!concept_idx_.count(a.domain)) unresolved("concept", a.domain, a.span, a.id);
    }
    for (const auto& o : m_.objects) {
      if (!concept_idx_.count(o.concept_id)) unresolved("concept", o.concept_id, o.span, o.id);
      for (const auto& [attr, v] : o.values) {
        (void)v;
        if (!attribute_idx_.count(attr)) unresolved("attribute", attr, o.span, o.id);
      }
    }
    for (const auto& p : m_.parts) {
      std::string entity = p.whole + " has " + p.part;
      if (!concept_idx_.count(p.whole)) unresolved("concept", p.whole, p.span, entity);
      if (!concept_idx_.count(p.part)) unresolved("concept", p.part, p.span, entity);
    }
    for (const auto& l : m_.links) {
      if (!concept_idx_.count(l.source)) unresolved("concept", l.source, l.span, l.id);
      if (!concept_idx_.count(l.target)) unresolved("concept", l.target, l.span, l.id);
    }
    std::set<std::tuple<std::string, std::string, std::string>> term_keys;
    for (const auto& t : m_.terms) {
      if (!concept_idx_.count(t.concept_id)) unresolved("concept", t.concept_id, t.span, t.designation);
      if (!term_keys.emplace(t.designation, t.language, t.concept_id).second) {
        error(code::dup_decl, "duplicate term \"" + t.designation + "\" (" + t.language + ") for '" +
                                  t.concept_id + "'",
              t.span, t.designation);
      }
    }
    for (const auto& cd : m_.classes) check_expr(cd.expr, cd);
    return !has_errors(diags_);
  }

  void check_expr(const ClassExpr& e, const ClassDef& owner) {
    using K = ClassExpr::Kind;
    switch (e.kind) {
      case K::in_concept:
        if (!concept_idx_.count(e.ref)) {
          error(code::unresolved, "unresolved concept '" + e.ref + "' in class '" + owner.id + "'", owner.span,
                owner.id);
        }
        return;
      case K::attr_equals:
      case K::has_attr:
        if (!attribute_idx_.count(e.ref)) {
          error(code::unresolved, "unresolved attribute '" + e.ref + "' in class '" + owner.id + "'",
                owner.span, owner.id);
        }
        return;
      case K::conj:
      case K::disj:
        if (e.children.size() < 2) {
          error(code::unresolved, "and/or node with fewer than two operands in class '" + owner.id + "'",
                owner.span, owner.id);
        }
        break;
      case K::negation:
        if (e.children.size() != 1) {
          error(code::unresolved, "not node without exactly one operand in class '" + owner.id + "'",
                owner.span, owner.id);
        }
        break;
    }
    for (const auto& c : e.children) check_expr(c, owner);
  }

  // Stage 2: the declared genus links form a forest.
  bool cycle_stage() {
    const std::size_t n = m_.concepts.size();
    genus_.assign(n, ValidatedModel::npos);
    for (std::size_t i = 0; i < n; ++i) {
      if (m_.concepts[i].genus) genus_[i] = concept_idx_.at(*m_.concepts[i].genus);
    }
    // 0 = unvisited, 1 = on current path, 2 = done
    std::vector<int> state(n, 0);
    for (std::size_t start = 0; start < n; ++start) {
      std::vector<std::size_t> path;
      std::size_t cur = start;
      while (cur != ValidatedModel::npos && state[cur] == 0) {
        state[cur] = 1;
        path.push_back(cur);
        cur = genus_[cur];
      }
      if (cur != ValidatedModel::npos && state[cur] == 1) {
        std::vector<std::string> members;
        auto it = std::find(path.begin(), path.end(), cur);
        std::size_t first = *std::min_element(it, path.end());
        for (; it != path.end(); ++it) members.push_back(m_.concepts[*it].id);
        const Concept& c = m_.concepts[first];
        error(code::genus_cycle, "genus cycle: " + join_ids(members, " -> ") + " -> " + members.front(), c.span,
              c.id);
      }
      for (std::size_t p : path) state[p] = 2;
    }
    return !has_errors(diags_);
  }

  // Stage 3: intension = intension(genus) + differentiae, each differentia new.
  bool intension_stage() {
    const std::size_t n = m_.concepts.size();
    intensions_.assign(n, {});
    std::vector<bool> done(n, false);
    for (std::size_t i = 0; i < n; ++i) compute_intension(i, done);

    difference_axis_.assign(m_.differences.size(), ValidatedModel::npos);
    for (std::size_t i = 0; i < m_.differences.size(); ++i) {
      if (m_.differences[i].axis) difference_axis_[i] = axis_idx_.at(*m_.differences[i].axis);
    }
    return !has_errors(diags_);
  }

  void compute_intension(std::size_t i, std::vector<bool>& done) {
    // Iterative walk up to the first computed ancestor, then fill back down.
    std::vector<std::size_t> chain;
    for (std::size_t c = i; c != ValidatedModel::npos && !done[c]; c = genus_[c]) chain.push_back(c);
    for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
      const std::size_t c = *it;
      const Concept& decl = m_.concepts[c];
      DiffSet set = genus_[c] == ValidatedModel::npos ? DiffSet{} : intensions_[genus_[c]];
      for (const auto& d : decl.differentiae) {
        std::size_t di = difference_idx_.at(d);
        auto pos = std::lower_bound(set.begin(), set.end(), di);
        if (pos != set.end() && *pos == di) {
          if (genus_[c] != ValidatedModel::npos &&
              std::binary_search(intensions_[genus_[c]].begin(), intensions_[genus_[c]].end(), di)) {
            error(code::no_delimiting,
                  "differentia '" + d + "' of '" + decl.id + "' is already in the intension of its genus '" +
                      *decl.genus + "'",
                  decl.span, decl.id);
          }
          continue;
        }
        set.insert(pos, di);
      }
      intensions_[c] = std::move(set);
      done[c] = true;
    }
  }

  // Stage 4: unique intensions, exclusive axes respected, axes used in scope.
  bool consistency_stage() {
    const std::size_t n = m_.concepts.size();
    std::map<DiffSet, std::vector<std::size_t>> by_intension;
    for (std::size_t i = 0; i < n; ++i) by_intension[intensions_[i]].push_back(i);
    for (const auto& [set, group] : by_intension) {
      (void)set;
      if (group.size() < 2) continue;
      std::vector<std::string> ids;
      for (auto g : group) ids.push_back(m_.concepts[g].id);
      const Concept& second = m_.concepts[group[1]];
      error(code::dup_intension,
            "concepts " + join_ids(ids) + " have the same combination of characteristics " + format_set(set),
            second.span, second.id);
    }

    for (std::size_t i = 0; i < n; ++i) {
      const Concept& c = m_.concepts[i];
      const DiffSet* inherited = genus_[i] == ValidatedModel::npos ? nullptr : &intensions_[genus_[i]];
      for (std::size_t a = 0; a < m_.axes.size(); ++a) {
        const Axis& axis = m_.axes[a];
        if (!axis.exclusive) continue;
        auto clash = members_in(a, intensions_[i]);
        // Report only where the clash is introduced, not on every descendant.
        if (clash.size() >= 2 && (!inherited || members_in(a, *inherited).size() < 2)) {
          error(code::axis_contradiction,
                "concept '" + c.id + "' combines exclusive differences " + join_ids(clash) + " of axis '" +
                    axis.id + "'",
                c.span, c.id);
        }
      }
      for (const auto& d : c.differentiae) {
        std::size_t di = difference_idx_.at(d);
        std::size_t a = difference_axis_[di];
        if (a == ValidatedModel::npos) continue;
        const Axis& axis = m_.axes[a];
        const DiffSet& scope = intensions_[concept_idx_.at(axis.scope)];
        DiffSet rest = intensions_[i];
        rest.erase(std::lower_bound(rest.begin(), rest.end(), di));
        if (!std::includes(rest.begin(), rest.end(), scope.begin(), scope.end())) {
          error(code::axis_scope,
                "concept '" + c.id + "' uses difference '" + d + "' of axis '" + axis.id +
                    "' outside the axis scope '" + axis.scope + "'",
                c.span, c.id);
        }
      }
    }
    if (has_errors(diags_)) return false;

    hierarchy_ = build_hierarchy(m_.concepts, intensions_);

    // Coordinates under a shared direct superordinate must differ in what they
    // add to it. Equal intensions were rejected above, so this only fires if
    // that invariant is ever bypassed.
    std::map<std::string, std::vector<std::size_t>> children;
    for (const auto& [sub, supers] : hierarchy_.direct_super) {
      for (const auto& g : supers) children[g].push_back(concept_idx_.at(sub));
    }
    for (const auto& [g, subs] : children) {
      const DiffSet& base = intensions_[concept_idx_.at(g)];
      for (std::size_t x = 0; x < subs.size(); ++x) {
        for (std::size_t y = x + 1; y < subs.size(); ++y) {
          if (relative(subs[x], base) == relative(subs[y], base)) {
            const Concept& c = m_.concepts[std::max(subs[x], subs[y])];
            report(Severity::warning, code::undistinguished_coordinates,
                   "coordinates '" + m_.concepts[subs[x]].id + "' and '" + m_.concepts[subs[y]].id +
                       "' are not distinguished under '" + g + "'",
                   c.span, c.id);
          }
        }
      }
    }
    return true;
  }

  DiffSet relative(std::size_t c, const DiffSet& base) const {
    DiffSet out;
    std::set_difference(intensions_[c].begin(), intensions_[c].end(), base.begin(), base.end(),
                        std::back_inserter(out));
    return out;
  }

  std::vector<std::string> members_in(std::size_t axis, const DiffSet& set) const {
    std::vector<std::string> out;
    for (const auto& mem : m_.axes[axis].members) {
      if (std::binary_search(set.begin(), set.end(), difference_idx_.at(mem))) out.push_back(mem);
    }
    return out;
  }

  std::string format_set(const DiffSet& set) const {
    std::vector<std::string> ids;
    for (auto d : set) ids.push_back(m_.differences[d].id);
    return "{" + join_ids(ids) + "}";
  }

  // Stage 5: attribute values, part links, terms.
  bool description_stage() {
    object_concepts_.clear();
    for (const auto& o : m_.objects) {
      std::size_t ci = concept_idx_.at(o.concept_id);
      object_concepts_.push_back(ci);
      for (const auto& [attr_id, v] : o.values) {
        const AttributeDecl& attr = m_.attributes[attribute_idx_.at(attr_id)];
        std::size_t dom = concept_idx_.at(attr.domain);
        if (dom != ci && !hierarchy_.above[dom][ci]) {
          error(code::attr_domain,
                "attribute '" + attr.id + "' applies to '" + attr.domain + "', not to '" + o.concept_id + "'",
                o.span, o.id);
        }
        if (kind_of(v) != attr.kind) {
          error(code::attr_kind,
                "value of '" + attr.id + "' on '" + o.id + "' is not of kind " + std::string(to_string(attr.kind)),
                o.span, o.id);
        }
      }
    }

    check_part_cycles();

    // Only concepts that already carry terms are checked, against every
    // language the model uses.
    std::set<std::string> languages;
    for (const auto& t : m_.terms) languages.insert(t.language);
    std::map<std::string, std::set<std::string>> preferred_in, termed;
    for (const auto& t : m_.terms) {
      termed[t.concept_id].insert(t.language);
      if (t.status == TermStatus::preferred) preferred_in[t.concept_id].insert(t.language);
    }
    for (const auto& c : m_.concepts) {
      if (!termed.count(c.id)) continue;
      for (const auto& lang : languages) {
        if (!preferred_in[c.id].count(lang)) {
          report(Severity::warning, code::no_preferred_term,
                 "concept '" + c.id + "' has no preferred term in '" + lang + "'", c.span, c.id);
        }
      }
    }

    // A root whose only documentation is its parts has neither an intensional
    // nor an enumerational definition.
    std::set<std::string> wholes;
    for (const auto& p : m_.parts) wholes.insert(p.whole);
    std::set<std::string> has_subordinates;
    for (const auto& [sub, supers] : hierarchy_.direct_super) {
      (void)sub;
      has_subordinates.insert(supers.begin(), supers.end());
    }
    for (const auto& c : m_.concepts) {
      if (!c.genus && wholes.count(c.id) && !has_subordinates.count(c.id)) {
        report(Severity::warning, code::description_only,
               "concept '" + c.id + "' is documented only by its parts", c.span, c.id);
      }
    }
    return !has_errors(diags_);
  }

  void check_part_cycles() {
    const std::size_t n = m_.concepts.size();
    std::vector<std::vector<std::size_t>> out(n);
    std::vector<const PartLink*> first_link(n, nullptr);
    for (const auto& p : m_.parts) {
      std::size_t w = concept_idx_.at(p.whole), q = concept_idx_.at(p.part);
      if (w == q) {
        error(code::part_cycle, "concept '" + p.whole + "' is declared a part of itself", p.span,
              p.whole + " has " + p.part);
        continue;
      }
      out[w].push_back(q);
      if (!first_link[w]) first_link[w] = &p;
    }
    // Iterative DFS; one report per back edge target.
    std::vector<int> state(n, 0);
    for (std::size_t s = 0; s < n; ++s) {
      if (state[s]) continue;
      std::vector<std::pair<std::size_t, std::size_t>> stack{{s, 0}};
      state[s] = 1;
      while (!stack.empty()) {
        auto& [node, next] = stack.back();
        if (next < out[node].size()) {
          std::size_t t = out[node][next++];
          if (state[t] == 0) {
            state[t] = 1;
            stack.push_back({t, 0});
          } else if (state[t] == 1) {
            const PartLink* p = first_link[t];
            error(code::part_cycle, "part links form a cycle through '" + m_.concepts[t].id + "'", p->span,
                  m_.concepts[t].id);
          }
        } else {
          state[node] = 2;
          stack.pop_back();
        }
      }
    }
  }

  Model& m_;
  std::vector<Diagnostic> diags_;
  std::unordered_map<std::string, std::size_t> difference_idx_, axis_idx_, concept_idx_, attribute_idx_,
      object_idx_;
  std::vector<std::size_t> genus_;
  std::vector<DiffSet> intensions_;
  std::vector<std::size_t> difference_axis_;
  std::vector<std::size_t> object_concepts_;
  Hierarchy hierarchy_;
};

}  // namespace detail

/// Resolves references and enforces the model invariants in five ordered
/// stages. Diagnostics come back sorted by source position, then code.
inline ValidationResult validate(Model model) {
  ValidatedModel vm;
  vm.model_ = std::move(model);
  detail::Validator v(vm.model_);
  ValidationResult result;
  result.diagnostics = v.run(vm);
  if (!has_errors(result.diagnostics)) result.model = std::move(vm);
  return result;
}

// --- queries over a validated model ----------------------------------------

inline std::set<std::string> intension(const ValidatedModel& vm, std::string_view concept_id) {
  std::set<std::string> out;
  for (auto d : vm.intension_at(vm.concept_index(concept_id))) out.insert(vm.model().differences[d].id);
  return out;
}

/// Strict intension inclusion; holds between concepts with no declared genus path.
inline bool subsumes(const ValidatedModel& vm, std::string_view general, std::string_view specific) {
  return vm.subsumes_at(vm.concept_index(general), vm.concept_index(specific));
}

inline const Hierarchy& compute_hierarchy(const ValidatedModel& vm) { return vm.hierarchy(); }

/// Objects whose concept is `concept_id` or one of its subordinates.
inline std::set<std::string> extension(const ValidatedModel& vm, std::string_view concept_id) {
  const std::size_t c = vm.concept_index(concept_id);
  std::set<std::string> out;
  const auto& objects = vm.model().objects;
  for (std::size_t o = 0; o < objects.size(); ++o) {
    std::size_t oc = vm.object_concept(o);
    if (oc == c || vm.subsumes_at(c, oc)) out.insert(objects[o].id);
  }
  return out;
}

/// Concepts sharing at least one direct superordinate with `concept_id`.
inline std::set<std::string> coordinates(const ValidatedModel& vm, std::string_view concept_id) {
  const std::string id(concept_id);
  vm.concept_index(id);
  const Hierarchy& h = vm.hierarchy();
  const auto& mine = h.supers_of(id);
  std::set<std::string> out;
  for (const auto& [other, supers] : h.direct_super) {
    if (other == id) continue;
    for (const auto& g : supers) {
      if (std::binary_search(mine.begin(), mine.end(), g)) {
        out.insert(other);
        break;
      }
    }
  }
  return out;
}

namespace detail {

/// Topological order of `nodes` (concept indexes). With `specific_first`, a
/// concept is emitted only after every node of the set it subsumes; otherwise
/// only after every node of the set subsuming it. Ties break by identifier.
inline std::vector<std::size_t> topo_order(const ValidatedModel& vm, const std::vector<std::size_t>& nodes,
                                           bool specific_first) {
  auto blocks = [&](std::size_t waiting, std::size_t other) {
    return specific_first ? vm.subsumes_at(waiting, other) : vm.subsumes_at(other, waiting);
  };
  auto by_id = [&](std::size_t a, std::size_t b) { return vm.concept_at(nodes[a]).id < vm.concept_at(nodes[b]).id; };
  const std::size_t n = nodes.size();
  std::vector<std::size_t> pending(n, 0);
  std::vector<std::vector<std::size_t>> releases(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && blocks(nodes[i], nodes[j])) {
        ++pending[i];
        releases[j].push_back(i);
      }
    }
  }
  std::set<std::size_t, decltype(by_id)> ready(by_id);
  for (std::size_t i = 0; i < n; ++i) {
    if (pending[i] == 0) ready.insert(i);
  }
  std::vector<std::size_t> out;
  while (!ready.empty()) {
    std::size_t i = *ready.begin();
    ready.erase(ready.begin());
    out.push_back(nodes[i]);
    for (std::size_t k : releases[i]) {
      if (--pending[k] == 0) ready.insert(k);
    }
  }
  return out;
}

}  // namespace detail

/// The object's concept followed by all its superordinates, most specific first.
inline std::vector<std::string> classify_object(const ValidatedModel& vm, std::string_view object_id) {
  const std::size_t c = vm.object_concept(vm.object_index(object_id));
  std::vector<std::size_t> nodes{c};
  for (std::size_t g = 0; g < vm.model().concepts.size(); ++g) {
    if (vm.subsumes_at(g, c)) nodes.push_back(g);
  }
  std::vector<std::string> out;
  for (auto i : detail::topo_order(vm, nodes, true)) out.push_back(vm.concept_at(i).id);
  return out;
}

/// All concepts, generic before specific, ties by identifier.
inline std::vector<std::string> concepts_top_down(const ValidatedModel& vm) {
  std::vector<std::size_t> nodes(vm.model().concepts.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) nodes[i] = i;
  std::vector<std::string> out;
  for (auto i : detail::topo_order(vm, nodes, false)) out.push_back(vm.concept_at(i).id);
  return out;
}

}  // namespace otl
