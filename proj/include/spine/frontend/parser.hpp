#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "spine/gluing.hpp"

namespace spine::frontend {

struct Diagnostic {
  int line = 0;    // 1-based
  int column = 0;  // 1-based
  std::string message;

  std::string to_string() const;
};

struct ParseResult {
  std::optional<GluingSpec> spec;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return spec.has_value(); }
};

/// Line-oriented spec grammar; '#' at the start of a token opens a comment.
///
///   piece <NAME> vertex|bar
///   match <ID>: <NAME>.<t> ~ <NAME>.<t> (p q r)
///   disks all | disks none
///   disk <curve-index>
///
/// Names start with a letter or '_' and may contain letters, digits, '_',
/// '#' and '\''. A match line glues left prong k to right prong
/// (p q r)[k]. Only syntax is checked here; semantic problems are left to
/// validate().
ParseResult parse_spec(std::string_view text);

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(std::vector<Diagnostic> diagnostics);
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

/// parse_spec, throwing ParseError on any diagnostic.
GluingSpec parse_spec_or_throw(std::string_view text);

/// Canonical text form; parse_spec(print_spec(s)) reproduces s.
std::string print_spec(const GluingSpec& spec);

}  // namespace spine::frontend
