#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spine/gluing.hpp"
#include "spine/groups/homology.hpp"
#include "spine/groups/todd_coxeter.hpp"
#include "spine/invariants.hpp"
#include "spine/tracer.hpp"

namespace spine {

/// A finite cover expressed as an ordinary gluing spec, plus the bookkeeping
/// needed to check it against the base.
struct CoverSpec {
  GluingSpec spec;
  std::size_t index = 0;            // number of sheets
  std::size_t base_pieces = 0;
  std::size_t base_matchings = 0;
  std::vector<EdgeWord> lifted_disk_words;  // in the cover's edge alphabet
};

/// Lifts `base` along the coset action of `table`, whose generators must be
/// the base matchings in declaration order (as produced by todd_coxeter on
/// presentation_from_complex). Piece p on sheet c is named "p#c" (1-based,
/// sheet 1 = the subgroup); the lift of matching e starting on sheet c is
/// "e#c" and ends on sheet c·e. Each base disk lifts to one disk per sheet.
/// Throws TableNotClosed, Disconnected.
CoverSpec build_cover(const GluingSpec& base, const groups::CosetTable& table);

struct CoverReport {
  std::size_t pieces = 0;
  std::size_t matchings = 0;
  std::size_t lifted_disks = 0;
  std::size_t traced_curves = 0;
  long chi = 0;
  EmbeddabilityVerdict verdict;
  groups::CosetResult cosets;
  groups::AbelianInvariants h1;
  bool lift_matches_trace = false;  // lifted disk words == traced attached curve words
  bool simply_connected() const { return cosets.finite() && cosets.order == 1; }
};

/// Re-runs the full pipeline on the cover.
CoverReport verify_cover(const CoverSpec& cover,
                         std::size_t max_cosets = groups::kDefaultMaxCosets);

/// Convenience: enumerate π1(base) and lift along the regular representation.
/// Returns nullopt when the coset enumeration hits its limit.
std::optional<CoverSpec> universal_cover(const GluingSpec& base,
                                         std::size_t max_cosets = groups::kDefaultMaxCosets);

}  // namespace spine
