#pragma once

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "otl/otl.hpp"

namespace otl::cli {

inline constexpr const char* kSynopsis =
    "usage: otlc {check|tree|query|define|describe|lexicon|export} FILE [options]  (see otlc --help)";

enum ExitCode { kSuccess = 0, kModelError = 1, kUsageError = 2 };

namespace detail {

inline bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

struct Loaded {
  std::optional<ValidatedModel> model;
  std::vector<Diagnostic> diagnostics;
};

/// `.json` inputs are read as canonical JSON, anything else as DSL source.
inline Loaded load(const std::string& path, std::string_view text) {
  Loaded out;
  if (ends_with(path, ".json")) {
    auto r = from_json(text);
    out.model = std::move(r.model);
    out.diagnostics = std::move(r.diagnostics);
    return out;
  }
  auto parsed = parse(text, path);
  out.diagnostics = std::move(parsed.diagnostics);
  if (!parsed.model) return out;
  auto v = validate(std::move(*parsed.model));
  out.model = std::move(v.model);
  out.diagnostics.insert(out.diagnostics.end(), v.diagnostics.begin(), v.diagnostics.end());
  return out;
}

}  // namespace detail

/// Runs the command line `args` (program name excluded). Payload goes to `out`,
/// diagnostics and usage messages to `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"otlc: checker and reasoner for ontoterminology models", "otlc"};
  app.set_version_flag("--version", std::string("otlc ") + std::string(kVersion));
  app.require_subcommand(1, 1);

  std::string file, output, concept_id, object_id, class_text, language, format, rankdir = "TB";
  bool derived = false, with_objects = false, extensional = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("FILE", file, "model file (.otl or .otl.json)")->required();
    sub->add_option("-o,--output", output, "write the result to this path instead of stdout");
  };

  auto* check = app.add_subcommand("check", "validate a model and print its diagnostics");
  add_common(check);

  auto* tree = app.add_subcommand("tree", "emit the concept hierarchy as a DOT graph");
  add_common(tree);
  tree->add_flag("--derived", derived, "add derived superordinate edges (dashed)");
  tree->add_flag("--objects", with_objects, "add object nodes (dotted edges)");
  tree->add_option("--rankdir", rankdir, "graph direction")->check(CLI::IsMember({"TB", "LR"}));

  auto* query = app.add_subcommand("query", "list the objects of a class expression, one per line");
  add_common(query);
  query->add_option("--class", class_text, "class expression, or the name of a declared class")->required();

  auto* define = app.add_subcommand("define", "generate a concept definition");
  add_common(define);
  define->add_option("CONCEPT", concept_id, "concept identifier")->required();
  define->add_flag("--extensional", extensional, "enumerate subordinate concepts instead");

  auto* describe = app.add_subcommand("describe", "describe an object by its attributes and parts");
  add_common(describe);
  describe->add_option("OBJECT", object_id, "object identifier")->required();

  auto* lex = app.add_subcommand("lexicon", "terminology report for one language");
  add_common(lex);
  lex->add_option("--lang", language, "language tag, e.g. en")->required();

  auto* exp = app.add_subcommand("export", "serialize the model");
  add_common(exp);
  exp->add_option("--format", format, "json or dsl")->required()->check(CLI::IsMember({"json", "dsl"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::CallForVersion& e) {
    out << e.what() << "\n";
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "otlc: " << e.what() << "\n" << kSynopsis << "\n";
    return kUsageError;
  }

  std::ifstream in(file, std::ios::binary);
  if (!in) {
    err << "otlc: cannot read '" << file << "'\n" << kSynopsis << "\n";
    return kUsageError;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string source = buffer.str();

  detail::Loaded loaded = detail::load(file, source);
  auto print_diagnostics = [&] {
    for (const auto& d : loaded.diagnostics) err << format_diagnostic(d, file) << "\n";
  };

  if (check->parsed()) {
    print_diagnostics();
    return loaded.model ? kSuccess : kModelError;
  }
  if (!loaded.model) {
    print_diagnostics();
    return kModelError;
  }
  const ValidatedModel& vm = *loaded.model;

  std::string payload;
  try {
    if (tree->parsed()) {
      ExportOptions opts;
      opts.include_derived_edges = derived;
      opts.include_objects = with_objects;
      opts.rankdir = rankdir == "LR" ? RankDir::left_right : RankDir::top_down;
      payload = to_dot(vm, opts);
    } else if (query->parsed()) {
      std::optional<ClassExpr> expr;
      if (const ClassDef* named = vm.model().find_class(class_text)) {
        expr = named->expr;
      } else {
        auto r = parse_class_expr(class_text, "--class");
        if (!r.expr) {
          for (const auto& d : r.diagnostics) err << format_diagnostic(d) << "\n";
          return kModelError;
        }
        expr = std::move(r.expr);
      }
      for (const auto& id : evaluate_class(vm, *expr)) payload += id + "\n";
    } else if (define->parsed()) {
      payload = render_definition(extensional ? extensional_definition(vm, concept_id)
                                              : intensional_definition(vm, concept_id));
    } else if (describe->parsed()) {
      payload = describe_object(vm, object_id);
    } else if (lex->parsed()) {
      payload = lexicon(vm, language);
    } else if (exp->parsed()) {
      payload = format == "json" ? to_json(vm) : print_dsl(vm);
    }
  } catch (const Error& e) {
    err << "error " << e.code() << " " << e.what() << "\n";
    return kModelError;
  }

  if (output.empty()) {
    out << payload;
  } else {
    std::ofstream f(output, std::ios::binary);
    if (!f) {
      err << "otlc: cannot write '" << output << "'\n";
      return kUsageError;
    }
    f << payload;
  }
  return kSuccess;
}

}  // namespace otl::cli
