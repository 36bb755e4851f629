#pragma once

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "otl/otl.hpp"

namespace otl::test {

inline std::string data_path(const std::string& name) { return std::string(OTL_TEST_DATA_DIR) + "/" + name; }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

inline Model parse_ok(const std::string& source, const std::string& file = "<test>") {
  auto r = parse(source, file);
  if (!r.model) {
    std::string msg = "parse failed:";
    for (const auto& d : r.diagnostics) msg += "\n  " + format_diagnostic(d);
    throw std::runtime_error(msg);
  }
  return std::move(*r.model);
}

inline ValidatedModel validate_ok(Model m) {
  auto r = validate(std::move(m));
  if (!r.model) {
    std::string msg = "validation failed:";
    for (const auto& d : r.diagnostics) msg += "\n  " + format_diagnostic(d);
    throw std::runtime_error(msg);
  }
  return std::move(*r.model);
}

inline ValidatedModel load_source(const std::string& source) { return validate_ok(parse_ok(source)); }

inline ValidatedModel load_fixture(const std::string& name) {
  return validate_ok(parse_ok(read_file(data_path(name)), name));
}

inline std::vector<std::string> codes(const std::vector<Diagnostic>& diags) {
  std::vector<std::string> out;
  for (const auto& d : diags) out.push_back(d.code);
  return out;
}

/// Diagnostics of parse followed by validation.
inline std::vector<Diagnostic> check_source(const std::string& source) {
  auto r = parse(source, "<test>");
  if (!r.model) return r.diagnostics;
  return validate(std::move(*r.model)).diagnostics;
}

}  // namespace otl::test
