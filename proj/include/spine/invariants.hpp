#pragma once

#include <optional>
#include <span>
#include <vector>

#include "spine/gluing.hpp"
#include "spine/tracer.hpp"

namespace spine {

/// 0-based indices, ascending, of the curves that receive a disk under the
/// spec's disk policy. Throws BadDiskIndex for an explicit index outside 1..curve_count
/// or listed twice.
std::vector<int> attached_curves(const GluingSpec& spec, std::size_t curve_count);

/// χ = #pieces − #matchings + #disks.
long euler_characteristic(const GluingSpec& spec, std::span<const BoundaryCurve> curves);

struct ComplexInvariants {
  long chi = 0;
  int components = 0;
  int curve_count = 0;
  int disk_count = 0;
};

ComplexInvariants complex_invariants(const GluingSpec& spec, std::span<const BoundaryCurve> curves);

struct EmbeddabilityVerdict {
  bool embeddable_orientable = true;
  std::optional<std::size_t> witness;  // 0-based curve index
};

/// Number of letters of `word` (with multiplicity) whose edge is Even.
int even_letter_count(const GluingSpec& spec, const EdgeWord& word);

/// Orientable embeddability by the parity criterion: every disk-bearing curve
/// must cross Even edges an even number of times. The witness is the first
/// failing curve.
EmbeddabilityVerdict orientability_verdict(const GluingSpec& spec,
                                           std::span<const BoundaryCurve> curves);

}  // namespace spine
