#pragma once

#include "spine/groups/presentation.hpp"

namespace spine::groups {

/// Best-effort Tietze simplification; preserves the isomorphism class only.
/// Each pass cyclically reduces relators, drops empty and duplicate ones
/// (duplicates up to rotation and inversion), then removes one generator:
/// a single-letter relator kills its generator, otherwise the shortest
/// relator in which some generator occurs exactly once is solved for it and
/// substituted everywhere. Stops when a pass changes nothing or after
/// `max_passes` passes.
Presentation tietze_simplify(Presentation p, int max_passes = 100);

}  // namespace spine::groups
