#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "otl/diagnostic.hpp"
#include "otl/lexer.hpp"
#include "otl/model.hpp"

namespace otl {

/// Words that can never be identifiers.
inline bool is_reserved_word(std::string_view w) {
  static constexpr std::array<std::string_view, 14> reserved = {
      "concept", "axis", "attribute", "object", "part", "relation", "term",
      "class",   "in",   "has",       "and",    "or",   "not",      "true"};
  for (auto r : reserved) {
    if (r == w) return true;
  }
  return w == "false";
}

/// `[A-Za-z][A-Za-z0-9_]*` and not reserved.
inline bool is_valid_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto letter = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); };
  if (!letter(s.front())) return false;
  for (char c : s) {
    if (!(letter(c) || (c >= '0' && c <= '9') || c == '_')) return false;
  }
  return !is_reserved_word(s);
}

struct ParseResult {
  std::optional<Model> model;  // present iff no error diagnostics
  std::vector<Diagnostic> diagnostics;
};

struct ClassExprResult {
  std::optional<ClassExpr> expr;
  std::vector<Diagnostic> diagnostics;
};

namespace detail {

class Parser {
 public:
  static constexpr int kMaxNesting = 256;

  Parser(std::string_view source, std::string file) : lexer_(source, file), file_(std::move(file)) {
    tokens_ = lexer_.run();
    diags_ = std::move(lexer_.diagnostics());
  }

  ParseResult parse_model() {
    for (;;) {
      skip_terminators();
      if (at(TokenKind::end)) break;
      try {
        statement();
        end_of_statement();
      } catch (const Abort&) {
        synchronize();
      }
    }
    sort_diagnostics(diags_);
    ParseResult result;
    if (!has_errors(diags_)) result.model = std::move(model_);
    result.diagnostics = std::move(diags_);
    return result;
  }

  ClassExprResult parse_expression_only() {
    ClassExprResult result;
    try {
      skip_newlines();
      ClassExpr e = class_expr();
      skip_newlines();
      if (!at(TokenKind::end)) fail_expected({"'and'", "'or'", "end of input"});
      result.expr = std::move(e);
    } catch (const Abort&) {
    }
    if (has_errors(diags_)) result.expr.reset();
    sort_diagnostics(diags_);
    result.diagnostics = std::move(diags_);
    return result;
  }

 private:
  struct Abort {};

  // --- token access -------------------------------------------------------

  const Token& peek() {
    if (nesting_ > 0) skip_newlines();
    return tokens_[pos_];
  }
  bool at(TokenKind k) { return peek().kind == k; }
  bool at_word(std::string_view w) { return at(TokenKind::word) && peek().text == w; }
  const Token& take() {
    const Token& t = peek();
    if (t.kind != TokenKind::end) ++pos_;
    return t;
  }
  void skip_newlines() {
    while (tokens_[pos_].kind == TokenKind::newline) ++pos_;
  }
  void skip_terminators() {
    while (tokens_[pos_].kind == TokenKind::newline || tokens_[pos_].kind == TokenKind::semicolon) ++pos_;
  }

  SourceSpan span(const Token& t) const { return lexer_.span_of(t); }

  [[noreturn]] void fail_expected(std::vector<std::string> expected) {
    const Token& t = peek();
    if (t.kind != TokenKind::error) {  // the lexer already reported it
      std::string msg = "expected ";
      for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i) msg += i + 1 == expected.size() ? " or " : ", ";
        msg += expected[i];
      }
      msg += ", found ";
      msg += t.kind == TokenKind::word || t.kind == TokenKind::number ? "'" + t.text + "'"
                                                                       : std::string(describe(t.kind));
      Diagnostic d = make_diagnostic(Severity::error, code::syntax, msg, span(t));
      d.expected = std::move(expected);
      diags_.push_back(std::move(d));
    }
    throw Abort{};
  }

  void expect(TokenKind k, std::string what = {}) {
    if (!at(k)) fail_expected({what.empty() ? std::string(describe(k)) : what});
    take();
  }

  void expect_word(std::string_view w) {
    if (!at_word(w)) fail_expected({"'" + std::string(w) + "'"});
    take();
  }

  const Token& identifier(std::string what) {
    if (!at(TokenKind::word) || is_reserved_word(peek().text)) fail_expected({std::move(what)});
    return take();
  }

  void end_of_statement() {
    nesting_ = 0;
    auto k = tokens_[pos_].kind;
    if (k == TokenKind::newline || k == TokenKind::semicolon) {
      ++pos_;
    } else if (k != TokenKind::end) {
      fail_expected({"end of statement"});
    }
  }

  void synchronize() {
    nesting_ = 0;
    for (;;) {
      auto k = tokens_[pos_].kind;
      if (k == TokenKind::end) return;
      ++pos_;
      if (k == TokenKind::newline || k == TokenKind::semicolon) return;
    }
  }

  void duplicate(const Token& t, std::string_view what) {
    diags_.push_back(make_diagnostic(Severity::error, code::dup_decl,
                                     "duplicate " + std::string(what) + " '" + t.text + "'", span(t)));
  }

  bool declare(std::unordered_set<std::string>& ids, const Token& t, std::string_view what) {
    if (!ids.insert(t.text).second) {
      duplicate(t, what);
      return false;
    }
    return true;
  }

  Difference& touch_difference(const Token& t) {
    auto [it, inserted] = difference_index_.try_emplace(t.text, model_.differences.size());
    if (inserted) model_.differences.push_back(Difference{t.text, t.text, std::nullopt, span(t)});
    return model_.differences[it->second];
  }

  // --- statements ---------------------------------------------------------

  void statement() {
    static const std::vector<std::string> starters = {"'concept'", "'axis'",     "'attribute'",
                                                      "'object'",  "'part'",     "'relation'",
                                                      "'term'",    "'class'"};
    if (!at(TokenKind::word)) fail_expected(starters);
    const std::string& w = peek().text;
    if (w == "concept") return concept_decl();
    if (w == "axis") return axis_decl();
    if (w == "attribute") return attribute_decl();
    if (w == "object") return object_decl();
    if (w == "part") return part_decl();
    if (w == "relation") return relation_decl();
    if (w == "term") return term_decl();
    if (w == "class") return class_decl();
    fail_expected(starters);
  }

  std::vector<std::string> differentiae_list() {
    std::vector<std::string> diffs;
    std::unordered_set<std::string> seen;
    do {
      const Token& d = identifier("difference identifier");
      if (seen.insert(d.text).second) {
        touch_difference(d);
        diffs.push_back(d.text);
      } else {
        duplicate(d, "differentia");
      }
    } while (at(TokenKind::comma) && (take(), true));
    return diffs;
  }

  // concept X                root, empty intension
  // concept X + a, b         root with its own differentiae
  // concept X := G + a, b    genus G plus differentiae
  // concept X := G           genus without differentiae (rejected by validation)
  void concept_decl() {
    take();
    const Token& name = identifier("concept identifier");
    Concept c{name.text, name.text, std::nullopt, {}, span(name)};
    if (at(TokenKind::define)) {
      take();
      c.genus = identifier("genus identifier").text;
      if (at(TokenKind::plus)) {
        take();
        c.differentiae = differentiae_list();
      }
    } else if (at(TokenKind::plus)) {
      take();
      c.differentiae = differentiae_list();
    }
    if (declare(concept_ids_, name, "concept")) model_.concepts.push_back(std::move(c));
  }

  void axis_decl() {
    take();
    const Token& name = identifier("axis identifier");
    expect_word("of");
    Axis a{name.text, name.text, identifier("concept identifier").text, {}, true, span(name)};
    if (at_word("nonexclusive")) {
      take();
      a.exclusive = false;
    }
    expect(TokenKind::lbrace);
    ++nesting_;
    std::vector<const Token*> members;
    std::unordered_set<std::string> seen;
    do {
      const Token& m = identifier("difference identifier");
      if (seen.insert(m.text).second) {
        members.push_back(&m);
      } else {
        duplicate(m, "axis member");
      }
    } while (at(TokenKind::comma) && (take(), true));
    expect(TokenKind::rbrace);
    --nesting_;
    if (!declare(axis_ids_, name, "axis")) return;
    for (const Token* m : members) {
      Difference& d = touch_difference(*m);
      if (!d.axis) d.axis = a.id;
      a.members.push_back(m->text);
    }
    model_.axes.push_back(std::move(a));
  }

  void attribute_decl() {
    take();
    const Token& name = identifier("attribute identifier");
    expect(TokenKind::colon);
    std::optional<ValueKind> kind;
    if (at(TokenKind::word)) kind = value_kind_from_string(peek().text);
    if (!kind) fail_expected({"'text'", "'number'", "'boolean'"});
    take();
    expect_word("on");
    const Token& domain = identifier("concept identifier");
    if (declare(attribute_ids_, name, "attribute")) {
      model_.attributes.push_back(AttributeDecl{name.text, name.text, domain.text, *kind, span(name)});
    }
  }

  Value value() {
    const Token& t = peek();
    if (t.kind == TokenKind::string) {
      take();
      return t.text;
    }
    if (t.kind == TokenKind::number) {
      take();
      return *Decimal::parse(t.text);
    }
    if (at_word("true") || at_word("false")) {
      take();
      return t.text == "true";
    }
    fail_expected({"string", "number", "'true'", "'false'"});
  }

  void object_decl() {
    take();
    const Token& name = identifier("object identifier");
    expect(TokenKind::colon);
    const Token& target = identifier("concept identifier");
    ObjectInstance o{name.text, name.text, target.text, {}, span(name)};
    if (at(TokenKind::lbrace)) {
      take();
      ++nesting_;
      do {
        const Token& attr = identifier("attribute identifier");
        expect(TokenKind::equals);
        Value v = value();
        if (!o.values.emplace(attr.text, std::move(v)).second) duplicate(attr, "attribute value");
      } while (at(TokenKind::comma) && (take(), true));
      expect(TokenKind::rbrace);
      --nesting_;
    }
    if (declare(object_ids_, name, "object")) model_.objects.push_back(std::move(o));
  }

  // part W has P ["note"]
  void part_decl() {
    const Token& kw = take();
    PartLink p{identifier("concept identifier").text, {}, std::nullopt, span(kw)};
    expect_word("has");
    p.part = identifier("concept identifier").text;
    if (at(TokenKind::string)) p.note = take().text;
    model_.parts.push_back(std::move(p));
  }

  void relation_decl() {
    take();
    const Token& name = identifier("relation identifier");
    expect(TokenKind::lparen);
    std::optional<RelationType> type;
    if (at(TokenKind::word)) type = relation_type_from_string(peek().text);
    if (!type) {
      fail_expected({"'associative'", "'sequential'", "'temporal'", "'causal'", "'cause_effect'",
                     "'producer_product'"});
    }
    take();
    expect(TokenKind::rparen);
    AssociativeLink l{name.text, *type, identifier("concept identifier").text, {}, span(name)};
    expect(TokenKind::arrow);
    l.target = identifier("concept identifier").text;
    if (declare(relation_ids_, name, "relation")) model_.links.push_back(std::move(l));
  }

  // term "designation" (lang, status) for C [definition "text"]
  void term_decl() {
    take();
    if (!at(TokenKind::string)) fail_expected({"string"});
    const Token& designation = take();
    expect(TokenKind::lparen);
    const Token& lang = identifier("language tag");
    expect(TokenKind::comma);
    std::optional<TermStatus> status;
    if (at(TokenKind::word)) status = term_status_from_string(peek().text);
    if (!status) fail_expected({"'preferred'", "'admitted'", "'deprecated'", "'standardized'"});
    take();
    expect(TokenKind::rparen);
    expect_word("for");
    const Token& target = identifier("concept identifier");
    Term t{designation.text, lang.text, *status, target.text, std::nullopt, span(designation)};
    if (at_word("definition")) {
      take();
      if (!at(TokenKind::string)) fail_expected({"string"});
      t.nl_definition = take().text;
    }
    std::string key = t.designation + '\x1f' + t.language + '\x1f' + t.concept_id;
    if (!term_keys_.insert(key).second) {
      duplicate(designation, "term");
      return;
    }
    model_.terms.push_back(std::move(t));
  }

  void class_decl() {
    take();
    const Token& name = identifier("class identifier");
    expect(TokenKind::define);
    expect(TokenKind::lbrace);
    ++nesting_;
    expect_word("x");
    expect(TokenKind::pipe);
    ClassExpr e = class_expr();
    expect(TokenKind::rbrace);
    --nesting_;
    if (declare(class_ids_, name, "class")) model_.classes.push_back(ClassDef{name.text, std::move(e), span(name)});
  }

  // --- class expressions: not > and > or ---------------------------------

  ClassExpr class_expr() {
    std::vector<ClassExpr> xs;
    xs.push_back(and_expr());
    while (at_word("or")) {
      take();
      xs.push_back(and_expr());
    }
    return xs.size() == 1 ? std::move(xs.front()) : ClassExpr::any_of(std::move(xs));
  }

  ClassExpr and_expr() {
    std::vector<ClassExpr> xs;
    xs.push_back(unary());
    while (at_word("and")) {
      take();
      xs.push_back(unary());
    }
    return xs.size() == 1 ? std::move(xs.front()) : ClassExpr::all_of(std::move(xs));
  }

  struct DepthGuard {
    explicit DepthGuard(Parser& p) : p_(p) {
      if (++p_.depth_ > kMaxNesting) {
        --p_.depth_;
        p_.too_deep();
      }
    }
    ~DepthGuard() { --p_.depth_; }
    Parser& p_;
  };

  [[noreturn]] void too_deep() {
    diags_.push_back(make_diagnostic(Severity::error, code::syntax,
                                     "class expression nested deeper than " + std::to_string(kMaxNesting),
                                     span(peek())));
    throw Abort{};
  }

  ClassExpr unary() {
    if (at_word("not")) {
      DepthGuard guard(*this);
      take();
      return ClassExpr::negate(unary());
    }
    if (at(TokenKind::lparen)) {
      DepthGuard guard(*this);
      take();
      ++nesting_;
      ClassExpr e = class_expr();
      expect(TokenKind::rparen);
      --nesting_;
      return e;
    }
    return atom();
  }

  ClassExpr atom() {
    if (at_word("in")) {
      take();
      return ClassExpr::in(identifier("concept identifier").text);
    }
    if (at_word("has")) {
      take();
      return ClassExpr::has(identifier("attribute identifier").text);
    }
    if (at(TokenKind::word) && !is_reserved_word(peek().text)) {
      std::string attr = take().text;
      expect(TokenKind::equals);
      return ClassExpr::equals(std::move(attr), value());
    }
    fail_expected({"'in'", "'has'", "'not'", "'('", "attribute identifier"});
  }

  Lexer lexer_;
  std::string file_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int nesting_ = 0;
  int depth_ = 0;
  std::vector<Diagnostic> diags_;
  Model model_;

  std::unordered_map<std::string, std::size_t> difference_index_;
  std::unordered_set<std::string> concept_ids_, axis_ids_, attribute_ids_, object_ids_,
      relation_ids_, class_ids_, term_keys_;
};

}  // namespace detail

/// Parses DSL source into an unvalidated model. Never throws on bad input;
/// every problem becomes a diagnostic and parsing resumes at the next statement.
inline ParseResult parse(std::string_view source, std::string file_name = "<input>") {
  return detail::Parser(source, std::move(file_name)).parse_model();
}

/// Parses a standalone class expression, e.g. `in Animal and not colour = "red"`.
inline ClassExprResult parse_class_expr(std::string_view source, std::string file_name = "<expr>") {
  return detail::Parser(source, std::move(file_name)).parse_expression_only();
}

}  // namespace otl
