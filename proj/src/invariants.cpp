#include "spine/invariants.hpp"

#include <algorithm>
#include <set>

#include "spine/error.hpp"

namespace spine {

std::vector<int> attached_curves(const GluingSpec& spec, std::size_t curve_count) {
  std::vector<int> out;
  if (spec.disks.is_all()) {
    for (std::size_t i = 0; i < curve_count; ++i) out.push_back(static_cast<int>(i));
    return out;
  }
  std::set<int> seen;
  for (int c : spec.disks.curves()) {
    if (c < 1 || static_cast<std::size_t>(c) > curve_count)
      throw SpineError(ErrorCode::BadDiskIndex, "disk curve index " + std::to_string(c) +
                                                    " is outside 1.." + std::to_string(curve_count));
    if (!seen.insert(c).second)
      throw SpineError(ErrorCode::BadDiskIndex, "disk curve index " + std::to_string(c) + " listed twice");
    out.push_back(c - 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

long euler_characteristic(const GluingSpec& spec, std::span<const BoundaryCurve> curves) {
  const auto disks = attached_curves(spec, curves.size());
  return static_cast<long>(spec.pieces.size()) - static_cast<long>(spec.matchings.size()) +
         static_cast<long>(disks.size());
}

ComplexInvariants complex_invariants(const GluingSpec& spec, std::span<const BoundaryCurve> curves) {
  ComplexInvariants inv;
  inv.chi = euler_characteristic(spec, curves);
  inv.components = build_skeleton(spec).components;
  inv.curve_count = static_cast<int>(curves.size());
  inv.disk_count = static_cast<int>(attached_curves(spec, curves.size()).size());
  return inv;
}

int even_letter_count(const GluingSpec& spec, const EdgeWord& word) {
  int count = 0;
  for (const auto& l : word)
    if (matching_parity(spec.matchings[l.edge].perm) == Parity::Even) ++count;
  return count;
}

EmbeddabilityVerdict orientability_verdict(const GluingSpec& spec,
                                           std::span<const BoundaryCurve> curves) {
  EmbeddabilityVerdict verdict;
  for (int c : attached_curves(spec, curves.size())) {
    if (even_letter_count(spec, curves[c].word) % 2 != 0) {
      verdict.embeddable_orientable = false;
      verdict.witness = static_cast<std::size_t>(c);
      break;
    }
  }
  return verdict;
}

}  // namespace spine
