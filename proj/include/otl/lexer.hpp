#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "otl/diagnostic.hpp"

namespace otl {

enum class TokenKind {
  word,
  string,
  number,
  newline,
  semicolon,
  define,  // :=
  colon,
  plus,
  comma,
  lbrace,
  rbrace,
  lparen,
  rparen,
  pipe,
  equals,
  arrow,  // ->
  error,
  end,
};

inline std::string_view describe(TokenKind k) {
  switch (k) {
    case TokenKind::word: return "identifier";
    case TokenKind::string: return "string";
    case TokenKind::number: return "number";
    case TokenKind::newline: return "newline";
    case TokenKind::semicolon: return "';'";
    case TokenKind::define: return "':='";
    case TokenKind::colon: return "':'";
    case TokenKind::plus: return "'+'";
    case TokenKind::comma: return "','";
    case TokenKind::lbrace: return "'{'";
    case TokenKind::rbrace: return "'}'";
    case TokenKind::lparen: return "'('";
    case TokenKind::rparen: return "')'";
    case TokenKind::pipe: return "'|'";
    case TokenKind::equals: return "'='";
    case TokenKind::arrow: return "'->'";
    case TokenKind::error: return "invalid input";
    case TokenKind::end: return "end of input";
  }
  return "token";
}

struct Token {
  TokenKind kind = TokenKind::end;
  std::string text;  // raw spelling; decoded contents for strings
  std::size_t offset = 0;
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t length = 0;
};

/// Splits DSL source into tokens. Lexical errors become `error` tokens plus an
/// E_LEX diagnostic; lexing always reaches the end of input.
class Lexer {
 public:
  Lexer(std::string_view source, std::string file) : src_(source), file_(std::move(file)) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      Token t = next();
      out.push_back(t);
      if (t.kind == TokenKind::end) break;
    }
    return out;
  }

  std::vector<Diagnostic>& diagnostics() { return diags_; }

  SourceSpan span_of(const Token& t) const { return SourceSpan{file_, t.line, t.column, t.length}; }

 private:
  static bool is_letter(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
  static bool is_digit(char c) { return c >= '0' && c <= '9'; }
  static bool is_ident_char(char c) { return is_letter(c) || is_digit(c) || c == '_'; }
  static bool is_bad(char c) {
    return !(is_ident_char(c) || c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '#' ||
             c == '"' || c == '-' || std::string_view(";:+,{}()|=").find(c) != std::string_view::npos);
  }

  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  Token start(TokenKind k) const {
    Token t;
    t.kind = k;
    t.offset = pos_;
    t.line = line_;
    t.column = col_;
    return t;
  }

  Token finish(Token t) const {
    t.length = pos_ - t.offset;
    if (t.kind != TokenKind::string) t.text = std::string(src_.substr(t.offset, t.length));
    return t;
  }

  Token fail(Token t, std::string message) {
    t.kind = TokenKind::error;
    t = finish(t);
    diags_.push_back(make_diagnostic(Severity::error, code::lex, std::move(message), span_of(t)));
    return t;
  }

  Token single(TokenKind k, std::size_t width) {
    Token t = start(k);
    for (std::size_t i = 0; i < width; ++i) advance();
    return finish(t);
  }

  Token next() {
    for (;;) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\r') {
        advance();
      } else if (c == '#') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
    if (pos_ >= src_.size()) return finish(start(TokenKind::end));

    char c = peek();
    if (is_letter(c)) {
      Token t = start(TokenKind::word);
      while (is_ident_char(peek())) advance();
      return finish(t);
    }
    if (is_digit(c) || (c == '-' && is_digit(peek(1)))) return number();
    if (c == '"') return string();

    switch (c) {
      case '\n': return single(TokenKind::newline, 1);
      case ';': return single(TokenKind::semicolon, 1);
      case '+': return single(TokenKind::plus, 1);
      case ',': return single(TokenKind::comma, 1);
      case '{': return single(TokenKind::lbrace, 1);
      case '}': return single(TokenKind::rbrace, 1);
      case '(': return single(TokenKind::lparen, 1);
      case ')': return single(TokenKind::rparen, 1);
      case '|': return single(TokenKind::pipe, 1);
      case '=': return single(TokenKind::equals, 1);
      case ':': return peek(1) == '=' ? single(TokenKind::define, 2) : single(TokenKind::colon, 1);
      case '-':
        if (peek(1) == '>') return single(TokenKind::arrow, 2);
        break;
      default: break;
    }

    Token t = start(TokenKind::error);
    advance();
    while (pos_ < src_.size() && is_bad(peek())) advance();
    return fail(t, "unexpected character(s) '" + std::string(src_.substr(t.offset, pos_ - t.offset)) + "'");
  }

  Token number() {
    Token t = start(TokenKind::number);
    if (peek() == '-') advance();
    while (is_digit(peek())) advance();
    if (peek() == '.') {
      advance();
      if (!is_digit(peek())) return fail(t, "malformed number: digits expected after '.'");
      while (is_digit(peek())) advance();
    }
    if (is_letter(peek()) || peek() == '_') {
      while (is_ident_char(peek())) advance();
      return fail(t, "malformed number");
    }
    return finish(t);
  }

  Token string() {
    Token t = start(TokenKind::string);
    advance();  // opening quote
    std::string value;
    bool bad_escape = false;
    for (;;) {
      if (pos_ >= src_.size() || peek() == '\n') return fail(t, "unterminated string literal");
      char c = peek();
      if (c == '"') {
        advance();
        break;
      }
      if (c == '\\') {
        advance();
        char e = peek();
        switch (e) {
          case '"': value += '"'; break;
          case '\\': value += '\\'; break;
          case 'n': value += '\n'; break;
          case 't': value += '\t'; break;
          case 'r': value += '\r'; break;
          default:
            bad_escape = true;
            if (pos_ >= src_.size() || e == '\n') continue;
        }
        advance();
        continue;
      }
      value += c;
      advance();
    }
    if (bad_escape) return fail(t, "unknown escape sequence in string literal");
    t = finish(t);
    t.text = std::move(value);
    return t;
  }

  std::string_view src_;
  std::string file_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
  std::vector<Diagnostic> diags_;
};

}  // namespace otl
