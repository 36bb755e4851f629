#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace otl {

/// Byte-based location of a token in a source file. Line and column are 1-based.
struct SourceSpan {
  std::string file;
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t length = 0;

  friend bool operator==(const SourceSpan&, const SourceSpan&) = default;
};

enum class Severity { error, warning, info };

inline std::string_view to_string(Severity s) {
  switch (s) {
    case Severity::error: return "error";
    case Severity::warning: return "warning";
    case Severity::info: return "info";
  }
  return "error";
}

// Diagnostic catalogue. docs/diagnostics.md lists the meaning of each code.
namespace code {
inline constexpr std::string_view lex = "E_LEX";
inline constexpr std::string_view syntax = "E_SYN";
inline constexpr std::string_view dup_decl = "E_DUP_DECL";
inline constexpr std::string_view unresolved = "E_UNRESOLVED";
inline constexpr std::string_view genus_cycle = "E_GENUS_CYCLE";
inline constexpr std::string_view dup_intension = "E_DUP_INTENSION";
inline constexpr std::string_view no_delimiting = "E_NO_DELIMITING";
inline constexpr std::string_view axis_contradiction = "E_AXIS_CONTRADICTION";
inline constexpr std::string_view axis_scope = "E_AXIS_SCOPE";
inline constexpr std::string_view axis_members = "E_AXIS_MEMBERS";
inline constexpr std::string_view axis_shared = "E_AXIS_SHARED";
inline constexpr std::string_view attr_domain = "E_ATTR_DOMAIN";
inline constexpr std::string_view attr_kind = "E_ATTR_KIND";
inline constexpr std::string_view part_cycle = "E_PART_CYCLE";
inline constexpr std::string_view json_schema = "E_JSON_SCHEMA";
inline constexpr std::string_view undistinguished_coordinates = "W_UNDISTINGUISHED_COORDINATES";
inline constexpr std::string_view no_preferred_term = "W_NO_PREFERRED_TERM";
inline constexpr std::string_view description_only = "W_DESCRIPTION_ONLY";

// Query-time errors, raised as otl::Error rather than reported as diagnostics.
inline constexpr std::string_view not_found = "E_NOT_FOUND";
inline constexpr std::string_view ambiguous = "E_AMBIGUOUS";
inline constexpr std::string_view root_no_intensional = "E_ROOT_NO_INTENSIONAL";
inline constexpr std::string_view no_subordinates = "E_NO_SUBORDINATES";
inline constexpr std::string_view arity = "E_ARITY";
}  // namespace code

struct Diagnostic {
  Severity severity = Severity::error;
  std::string code;
  std::string message;
  std::optional<SourceSpan> span;
  std::string entity;                 // used as location when no span is known
  std::vector<std::string> expected;  // E_SYN only: what the parser would have accepted

  std::string location(std::string_view fallback_file = {}) const {
    if (span) {
      return span->file + ":" + std::to_string(span->line) + ":" + std::to_string(span->column);
    }
    std::string loc(fallback_file);
    if (!loc.empty()) loc += ":";
    return loc + entity;
  }
};

inline Diagnostic make_diagnostic(Severity sev, std::string_view c, std::string message,
                                  std::optional<SourceSpan> span = std::nullopt,
                                  std::string entity = {}) {
  Diagnostic d;
  d.severity = sev;
  d.code = std::string(c);
  d.message = std::move(message);
  d.span = std::move(span);
  d.entity = std::move(entity);
  return d;
}

inline bool has_errors(const std::vector<Diagnostic>& diags) {
  return std::any_of(diags.begin(), diags.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::error; });
}

inline std::size_t count_code(const std::vector<Diagnostic>& diags, std::string_view c) {
  return static_cast<std::size_t>(
      std::count_if(diags.begin(), diags.end(), [&](const Diagnostic& d) { return d.code == c; }));
}

/// Stable report order: source position first, then code. Diagnostics without a
/// span keep their relative order after the located ones.
inline void sort_diagnostics(std::vector<Diagnostic>& diags) {
  std::stable_sort(diags.begin(), diags.end(), [](const Diagnostic& a, const Diagnostic& b) {
    if (a.span.has_value() != b.span.has_value()) return a.span.has_value();
    if (a.span && b.span) {
      if (a.span->file != b.span->file) return a.span->file < b.span->file;
      if (a.span->line != b.span->line) return a.span->line < b.span->line;
      if (a.span->column != b.span->column) return a.span->column < b.span->column;
    }
    return a.code < b.code;
  });
}

/// `SEVERITY CODE file:line:col message`
inline std::string format_diagnostic(const Diagnostic& d, std::string_view fallback_file = {}) {
  std::ostringstream out;
  out << to_string(d.severity) << ' ' << d.code << ' ' << d.location(fallback_file) << ' '
      << d.message;
  return out.str();
}

/// Raised by query operations (unknown identifiers, precondition failures).
class Error : public std::runtime_error {
 public:
  Error(std::string_view c, const std::string& message)
      : std::runtime_error(message), code_(c) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace otl
