#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace otl {

enum class ValueKind { text, number, boolean };

inline std::string_view to_string(ValueKind k) {
  switch (k) {
    case ValueKind::text: return "text";
    case ValueKind::number: return "number";
    case ValueKind::boolean: return "boolean";
  }
  return "text";
}

inline std::optional<ValueKind> value_kind_from_string(std::string_view s) {
  if (s == "text") return ValueKind::text;
  if (s == "number") return ValueKind::number;
  if (s == "boolean") return ValueKind::boolean;
  return std::nullopt;
}

/// Exact decimal literal. Stored in normalized text form (no redundant zeros,
/// no negative zero) so that equality is exact and independent of spelling.
class Decimal {
 public:
  Decimal() : text_("0") {}

  /// Accepts `-?[0-9]+(\.[0-9]+)?`.
  static std::optional<Decimal> parse(std::string_view s) {
    bool negative = false;
    if (!s.empty() && s.front() == '-') {
      negative = true;
      s.remove_prefix(1);
    }
    auto dot = s.find('.');
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = dot == std::string_view::npos ? std::string_view{} : s.substr(dot + 1);
    if (whole.empty() || !all_digits(whole)) return std::nullopt;
    if (dot != std::string_view::npos && (frac.empty() || !all_digits(frac))) return std::nullopt;

    while (whole.size() > 1 && whole.front() == '0') whole.remove_prefix(1);
    while (!frac.empty() && frac.back() == '0') frac.remove_suffix(1);

    std::string text;
    if (negative && !(whole == "0" && frac.empty())) text += '-';
    text += whole;
    if (!frac.empty()) {
      text += '.';
      text += frac;
    }
    Decimal d;
    d.text_ = std::move(text);
    return d;
  }

  const std::string& str() const noexcept { return text_; }

  friend bool operator==(const Decimal&, const Decimal&) = default;
  friend auto operator<=>(const Decimal&, const Decimal&) = default;

 private:
  static bool all_digits(std::string_view s) {
    for (char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  }

  std::string text_;
};

using Value = std::variant<std::string, Decimal, bool>;

inline ValueKind kind_of(const Value& v) {
  switch (v.index()) {
    case 0: return ValueKind::text;
    case 1: return ValueKind::number;
    default: return ValueKind::boolean;
  }
}

inline std::string quote_string(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default: out += c;
    }
  }
  out += '"';
  return out;
}

/// DSL spelling of a value.
inline std::string format_value(const Value& v) {
  if (auto s = std::get_if<std::string>(&v)) return quote_string(*s);
  if (auto d = std::get_if<Decimal>(&v)) return d->str();
  return std::get<bool>(v) ? "true" : "false";
}

}  // namespace otl
