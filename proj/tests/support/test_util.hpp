#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spine/gluing.hpp"
#include "spine/groups/presentation.hpp"
#include "spine/tracer.hpp"

namespace spine::testing {

/// "a b^-1 a b^2" over the given edge names.
EdgeWord parse_word(std::string_view text, std::span<const std::string> names);

/// Canonical multiset of words written in parse_word syntax.
std::vector<EdgeWord> canonical_of(std::span<const std::string> words,
                                   std::span<const std::string> names);

/// Uniform closed gluing of n vertex pieces V1..Vn with disks on every curve.
GluingSpec random_gluing(int n_vertex_pieces, std::mt19937_64& rng);

/// Random presentation: 1..max_gens generators, 1..max_rels relators of
/// length 1..max_len.
groups::Presentation random_presentation(std::mt19937_64& rng, int max_gens, int max_rels,
                                         int max_len);

}  // namespace spine::testing
