#pragma once

#include <span>
#include <string>
#include <vector>

#include "spine/gluing.hpp"
#include "spine/tracer.hpp"

namespace spine::groups {

/// A group word. Letter g+1 is generator g, -(g+1) its inverse.
using GroupWord = std::vector<int>;

constexpr int generator_of(int letter) { return (letter > 0 ? letter : -letter) - 1; }

struct Presentation {
  std::vector<std::string> generators;
  std::vector<GroupWord> relators;

  bool operator==(const Presentation&) const = default;
};

GroupWord invert(const GroupWord& w);
GroupWord free_reduce(const GroupWord& w);
/// Free reduction followed by cancelling inverse letters across the ends.
GroupWord cyclic_reduce(const GroupWord& w);

/// Exponent sum of each generator in `w`.
std::vector<long> exponent_sums(const GroupWord& w, std::size_t generator_count);

std::string format(const GroupWord& w, std::span<const std::string> generators);
std::string format(const Presentation& p);

GroupWord to_group_word(const EdgeWord& w);

/// π1 presentation of the complex together with the choices that built it.
struct ComplexPresentation {
  Presentation presentation;     // generators = matchings, declaration order
  std::vector<int> tree_edges;   // spanning-tree matchings, BFS order
  std::vector<int> disk_curves;  // 0-based traced curves giving the disk relators
};

/// Generators are all edges. Relators are one word per attached disk (in
/// curve order) followed by one single-letter relator per edge of the
/// breadth-first spanning tree rooted at the first declared piece, edges
/// scanned in declaration order. Throws Disconnected.
ComplexPresentation presentation_from_complex(const GluingSpec& spec,
                                              std::span<const BoundaryCurve> curves);

/// Substitutes the identity for the given generators, removes them, and
/// free-reduces every relator; used to view disk relators after tree collapse.
Presentation collapse_generators(const Presentation& p, std::span<const int> generators);

}  // namespace spine::groups
