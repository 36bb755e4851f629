#pragma once

// Brute-force reference implementations. They work directly on the authored
// Model with plain string sets and never touch the reasoner's indexes.

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "otl/model.hpp"

namespace otl::oracle {

using Names = std::set<std::string>;

inline bool strict_subset(const Names& a, const Names& b) {
  if (a.size() >= b.size()) return false;
  for (const auto& x : a) {
    if (!b.count(x)) return false;
  }
  return true;
}

/// Walks genus links by linear search and caches the resulting string sets.
class Reference {
 public:
  explicit Reference(const Model& m) : m_(m) {
    for (const auto& c : m.concepts) intensions_[c.id] = walk(c.id);
  }

  const Names& intension(const std::string& id) const { return intensions_.at(id); }

  bool subsumes(const std::string& g, const std::string& s) const {
    return strict_subset(intension(g), intension(s));
  }

  Names extension(const std::string& c) const {
    Names out;
    for (const auto& o : m_.objects) {
      if (o.concept_id == c || subsumes(c, o.concept_id)) out.insert(o.id);
    }
    return out;
  }

  /// Pairwise inclusion, then drop every edge that has an intermediate concept.
  Names direct_supers(const std::string& s) const {
    Names out;
    for (const auto& g : m_.concepts) {
      if (!subsumes(g.id, s)) continue;
      bool intermediate = false;
      for (const auto& k : m_.concepts) {
        if (subsumes(g.id, k.id) && subsumes(k.id, s)) intermediate = true;
      }
      if (!intermediate) out.insert(g.id);
    }
    return out;
  }

  /// Evaluates a class expression for one object by direct recursion.
  bool member(const ObjectInstance& o, const ClassExpr& e) const {
    using K = ClassExpr::Kind;
    switch (e.kind) {
      case K::in_concept: return o.concept_id == e.ref || subsumes(e.ref, o.concept_id);
      case K::attr_equals: {
        auto it = o.values.find(e.ref);
        return it != o.values.end() && it->second == e.value;
      }
      case K::has_attr: return o.values.count(e.ref) > 0;
      case K::conj:
        return std::all_of(e.children.begin(), e.children.end(), [&](const ClassExpr& c) { return member(o, c); });
      case K::disj:
        return std::any_of(e.children.begin(), e.children.end(), [&](const ClassExpr& c) { return member(o, c); });
      case K::negation: return !member(o, e.children.front());
    }
    return false;
  }

  Names evaluate(const ClassExpr& e) const {
    Names out;
    for (const auto& o : m_.objects) {
      if (member(o, e)) out.insert(o.id);
    }
    return out;
  }

 private:
  const Concept& find(const std::string& id) const {
    for (const auto& c : m_.concepts) {
      if (c.id == id) return c;
    }
    throw std::runtime_error("oracle: unknown concept " + id);
  }

  Names walk(const std::string& id) const {
    Names out;
    const Concept* c = &find(id);
    for (std::size_t guard = 0; guard <= m_.concepts.size(); ++guard) {
      for (const auto& d : c->differentiae) out.insert(d);
      if (!c->genus) return out;
      c = &find(*c->genus);
    }
    throw std::runtime_error("oracle: genus cycle");
  }

  const Model& m_;
  std::map<std::string, Names> intensions_;
};

/// Minimal DOT syntax check:
///   graph  := "digraph" [ID] "{" { stmt [";"] } "}"
///   stmt   := ID "=" ID | ("node"|"edge"|"graph") attrs | ID [ "->" ID ] [attrs]
///   attrs  := "[" [ ID "=" ID { [","] ID "=" ID } ] "]"
/// where ID is a bare word or a double-quoted string with backslash escapes.
class DotChecker {
 public:
  explicit DotChecker(const std::string& text) : s_(text) {}

  bool valid() {
    try {
      tokenize();
      graph();
      return pos_ == toks_.size();
    } catch (const std::exception&) {
      return false;
    }
  }

  std::size_t count(const std::string& tok) const { return static_cast<std::size_t>(std::count(toks_.begin(), toks_.end(), tok)); }

 private:
  void tokenize() {
    std::size_t i = 0;
    while (i < s_.size()) {
      char c = s_[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
      } else if (c == '"') {
        std::size_t j = i + 1;
        while (j < s_.size() && s_[j] != '"') {
          if (s_[j] == '\\') ++j;
          if (s_[j] == '\n') throw std::runtime_error("newline in string");
          ++j;
        }
        if (j >= s_.size()) throw std::runtime_error("unterminated string");
        toks_.push_back(s_.substr(i, j - i + 1));
        i = j + 1;
      } else if (c == '-' && i + 1 < s_.size() && s_[i + 1] == '>') {
        toks_.push_back("->");
        i += 2;
      } else if (std::string("{}[];,=").find(c) != std::string::npos) {
        toks_.push_back(std::string(1, c));
        ++i;
      } else if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t j = i;
        while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_')) ++j;
        toks_.push_back(s_.substr(i, j - i));
        i = j;
      } else {
        throw std::runtime_error("bad character");
      }
    }
  }

  const std::string& peek() const {
    static const std::string end;
    return pos_ < toks_.size() ? toks_[pos_] : end;
  }
  std::string take() {
    if (pos_ >= toks_.size()) throw std::runtime_error("unexpected end");
    return toks_[pos_++];
  }
  void expect(const std::string& t) {
    if (take() != t) throw std::runtime_error("expected " + t);
  }
  static bool is_id(const std::string& t) {
    if (t.empty()) return false;
    if (t.front() == '"') return true;
    return std::isalnum(static_cast<unsigned char>(t.front())) || t.front() == '_';
  }
  std::string id() {
    std::string t = take();
    if (!is_id(t)) throw std::runtime_error("expected id");
    return t;
  }

  void graph() {
    expect("digraph");
    if (peek() != "{") id();
    expect("{");
    while (peek() != "}") {
      stmt();
      if (peek() == ";") take();
    }
    expect("}");
  }

  void stmt() {
    std::string first = id();
    if (first == "node" || first == "edge" || first == "graph") {
      attrs();
      return;
    }
    if (peek() == "=") {
      take();
      id();
      return;
    }
    if (peek() == "->") {
      take();
      id();
    }
    if (peek() == "[") attrs();
  }

  void attrs() {
    expect("[");
    while (peek() != "]") {
      id();
      expect("=");
      id();
      if (peek() == ",") take();
    }
    expect("]");
  }

  std::string s_;
  std::vector<std::string> toks_;
  std::size_t pos_ = 0;
};

}  // namespace otl::oracle
