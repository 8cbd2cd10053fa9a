#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "spine/groups/presentation.hpp"

namespace spine::groups {

inline constexpr std::size_t kDefaultMaxCosets = 200000;

/// A closed coset table over the trivial subgroup. Coset 0 is the subgroup.
class CosetTable {
 public:
  CosetTable(std::size_t generators, std::size_t cosets, std::vector<int> action)
      : generators_(generators), cosets_(cosets), action_(std::move(action)) {}

  std::size_t generator_count() const { return generators_; }
  std::size_t coset_count() const { return cosets_; }

  /// coset · letter (letter ±(g+1)); right action.
  int act(int coset, int letter) const {
    const int g = generator_of(letter);
    return action_[static_cast<std::size_t>(coset) * 2 * generators_ + 2 * g + (letter < 0)];
  }

  int act(int coset, const GroupWord& w) const {
    for (int x : w) coset = act(coset, x);
    return coset;
  }

  /// Every entry defined and each generator column a permutation inverse to
  /// its inverse column.
  bool is_closed() const;

 private:
  std::size_t generators_;
  std::size_t cosets_;
  std::vector<int> action_;
};

enum class CosetOutcome { Finite, LimitExceeded };

struct CosetResult {
  CosetOutcome outcome = CosetOutcome::LimitExceeded;
  std::size_t order = 0;  // valid when Finite
  std::size_t limit = 0;  // the bound in force
  std::optional<CosetTable> table;

  bool finite() const { return outcome == CosetOutcome::Finite; }
};

/// HLT coset enumeration of the trivial subgroup, without lookahead.
/// Relators are scanned in declaration order at each live coset; Finite(k)
/// means the table closed with k live cosets. LimitExceeded is reported once
/// more than `max_cosets` cosets have been defined; it is not a proof of
/// infiniteness.
CosetResult todd_coxeter(const Presentation& p, std::size_t max_cosets = kDefaultMaxCosets);

}  // namespace spine::groups
