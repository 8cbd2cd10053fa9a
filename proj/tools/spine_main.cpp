#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "spine/covers.hpp"
#include "spine/enumerator.hpp"
#include "spine/error.hpp"
#include "spine/frontend/builtins.hpp"
#include "spine/frontend/parser.hpp"
#include "spine/frontend/report.hpp"
#include "spine/groups/presentation.hpp"
#include "spine/tracer.hpp"

namespace {

using namespace spine;
using namespace spine::frontend;

constexpr int kExitOk = 0;
constexpr int kExitAnalysis = 1;
constexpr int kExitParse = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

GluingSpec load_spec(const std::string& file, const std::string& builtin_name) {
  if (!builtin_name.empty()) {
    try {
      return builtin(builtin_name);
    } catch (const SpineError& e) {
      throw InputError(e.what());
    }
  }
  std::ifstream in(file, std::ios::binary);
  if (!in) throw InputError("cannot read '" + file + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_spec_or_throw(text.str());
}

int report_parse_error(const std::string& source, const ParseError& e) {
  for (const auto& d : e.diagnostics()) std::cerr << source << ':' << d.to_string() << '\n';
  return kExitParse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Analyzer for special spines glued from vertex and bar pieces"};
  app.require_subcommand(1);

  std::string file;
  std::string builtin_name;
  std::size_t max_cosets = default_max_cosets();

  auto* analyze_cmd = app.add_subcommand("analyze", "Full invariant report for one spec");
  analyze_cmd->add_option("file", file, "Spec file");
  analyze_cmd->add_option("--builtin", builtin_name, "Built-in spec name");
  bool as_text = false;
  bool as_json = false;
  bool timings = false;
  auto* json_flag = analyze_cmd->add_flag("--json", as_json, "JSON report (default)");
  analyze_cmd->add_flag("--text", as_text, "Plain text report")->excludes(json_flag);
  analyze_cmd->add_option("--max-cosets", max_cosets, "Coset enumeration limit")
      ->check(CLI::PositiveNumber);
  analyze_cmd->add_flag("--timings", timings, "Include stage timings (nondeterministic)");

  auto* census_cmd = app.add_subcommand("census", "Classify all gluings of N vertex pieces");
  int pieces = 1;
  std::string reflections;
  census_cmd->add_option("--pieces", pieces, "Number of vertex pieces")
      ->required()
      ->check(CLI::Range(1, 2));
  census_cmd->add_option("--reflections", reflections, "Only the mode with (on) or without (off) "
                                                       "orientation-reversing symmetries")
      ->check(CLI::IsMember({"on", "off"}));
  std::size_t census_cosets = CensusOptions{}.max_cosets;
  census_cmd->add_option("--max-cosets", census_cosets, "Coset limit per class")
      ->check(CLI::PositiveNumber);

  auto* cover_cmd = app.add_subcommand("cover", "Build and verify a finite cover");
  cover_cmd->add_option("file", file, "Spec file");
  cover_cmd->add_option("--builtin", builtin_name, "Built-in spec name");
  bool universal = false;
  cover_cmd->add_flag("--universal", universal, "Universal cover")->required();
  cover_cmd->add_option("--max-cosets", max_cosets, "Coset enumeration limit")
      ->check(CLI::PositiveNumber);

  auto* list_cmd = app.add_subcommand("list-builtins", "Names of the built-in specs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  const std::string source = builtin_name.empty() ? file : builtin_name;
  if ((*analyze_cmd || *cover_cmd) && file.empty() == builtin_name.empty()) {
    std::cerr << "error: give exactly one of a spec file or --builtin NAME\n";
    return kExitParse;
  }

  try {
    if (*list_cmd) {
      for (const auto& e : builtin_corpus()) std::cout << e.name << "  " << e.summary << '\n';
      return kExitOk;
    }

    if (*analyze_cmd) {
      const auto spec = load_spec(file, builtin_name);
      const auto report = analyze(spec, {max_cosets, timings});
      if (as_text)
        std::cout << to_text(report);
      else
        std::cout << dump(to_json(report));
      return kExitOk;
    }

    if (*census_cmd) {
      CensusOptions opts;
      opts.max_cosets = census_cosets;
      const auto result = census(pieces, opts);
      CensusSelection sel;
      if (reflections == "on") sel.without_reflections = false;
      if (reflections == "off") sel.with_reflections = false;
      std::cout << dump(census_json(result, sel));
      return kExitOk;
    }

    if (*cover_cmd) {
      const auto spec = load_spec(file, builtin_name);
      require_valid(spec);
      const auto cover = universal_cover(spec, max_cosets);
      if (!cover) {
        std::cerr << "error: coset enumeration exceeded " << max_cosets
                  << " cosets; the universal cover may be infinite\n";
        return kExitAnalysis;
      }
      const auto report = verify_cover(*cover, max_cosets);
      std::cout << dump(cover_json(*cover, report));
      return kExitOk;
    }
  } catch (const ParseError& e) {
    return report_parse_error(source, e);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const AnalysisError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitAnalysis;
  } catch (const SpineError& e) {
    std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kExitAnalysis;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitAnalysis;
  }
  return kExitOk;
}
