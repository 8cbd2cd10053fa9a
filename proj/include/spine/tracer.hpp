#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "spine/gluing.hpp"

namespace spine {

struct GlobalTip {
  int piece;  // index into GluingSpec::pieces
  int t_end;
  int prong;

  auto operator<=>(const GlobalTip&) const = default;
};

/// One crossing of a skeleton edge. Exponent +1 means crossing from the
/// matching's left T-end to its right T-end.
struct EdgeLetter {
  int edge;
  int exponent;

  auto operator<=>(const EdgeLetter&) const = default;
};

using EdgeWord = std::vector<EdgeLetter>;

/// A frontier curve of the neighborhood of the skeleton. The tip sequence
/// alternates internal-arc steps and gluing crossings, so
/// tips.size() == 2 * word.size().
struct BoundaryCurve {
  std::vector<GlobalTip> tips;
  EdgeWord word;
};

/// Partition of all tips into frontier curves. Each curve starts at its least
/// unvisited tip (ordered by piece, T-end, prong) and takes the arc step
/// first; curves come out in order of their least tip. Words are unreduced.
std::vector<BoundaryCurve> trace_boundary(const GluingSpec& spec);
std::vector<BoundaryCurve> trace_boundary(const ResolvedSpec& spec);

/// Same traversal, returning only the words; used in hot enumeration loops.
std::vector<EdgeWord> trace_words(const ResolvedSpec& spec);

EdgeWord inverse(const EdgeWord& word);

/// Lexicographic minimum over cyclic rotations and inversion.
EdgeWord cyclic_canonical(const EdgeWord& word);

inline constexpr int kMaxFlipAlphabet = 20;

/// Lexicographic minimum over rotations, inversion and every orientation
/// flip of the edges occurring in `word`. Throws AlphabetTooLarge when more
/// than kMaxFlipAlphabet distinct edges occur.
EdgeWord canonical_word(const EdgeWord& word);

/// Canonical multiset of several curves: one flip assignment is applied to
/// all words at once, each word is reduced to cyclic_canonical, the list is
/// sorted, and the least such list over all flip assignments wins.
std::vector<EdgeWord> canonical_word_multiset(std::span<const EdgeWord> words);

/// "a b^-1 a b b" using the given edge names.
std::string format_word(const EdgeWord& word, std::span<const std::string> edge_names);

/// Matching ids of a spec, in declaration order.
std::vector<std::string> edge_names(const GluingSpec& spec);

std::vector<EdgeWord> words_of(std::span<const BoundaryCurve> curves);

}  // namespace spine
