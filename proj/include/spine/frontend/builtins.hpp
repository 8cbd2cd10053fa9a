#pragma once

#include <span>
#include <string_view>

#include "spine/gluing.hpp"

namespace spine::frontend {

struct BuiltinEntry {
  std::string_view name;
  std::string_view summary;
  std::string_view text;  // spec document
};

std::span<const BuiltinEntry> builtin_corpus();

/// Parsed builtin; throws SpineError(UnknownBuiltin).
GluingSpec builtin(std::string_view name);

}  // namespace spine::frontend
