#include "spine/groups/tietze.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace spine::groups {
namespace {

GroupWord rotation_class(const GroupWord& w) {
  GroupWord best = w;
  for (const GroupWord& base : {w, invert(w)}) {
    for (std::size_t r = 0; r < base.size(); ++r) {
      GroupWord cand(base.begin() + static_cast<long>(r), base.end());
      cand.insert(cand.end(), base.begin(), base.begin() + static_cast<long>(r));
      best = std::min(best, cand);
    }
  }
  return best;
}

void tidy(Presentation& p) {
  std::set<GroupWord> seen;
  std::vector<GroupWord> kept;
  for (auto& r : p.relators) {
    GroupWord c = cyclic_reduce(r);
    if (c.empty()) continue;
    if (!seen.insert(rotation_class(c)).second) continue;
    kept.push_back(std::move(c));
  }
  p.relators = std::move(kept);
}

// Replaces generator `g` by `value` (a word not involving g) and renumbers the rest.
void eliminate(Presentation& p, int g, const GroupWord& value) {
  const GroupWord value_inv = invert(value);
  auto renumber = [g](int x) {
    const int h = generator_of(x);
    const int shifted = h > g ? h : h + 1;  // 1-based
    return x > 0 ? shifted : -shifted;
  };
  for (auto& r : p.relators) {
    GroupWord w;
    for (int x : r) {
      if (generator_of(x) == g) {
        const auto& sub = x > 0 ? value : value_inv;
        w.insert(w.end(), sub.begin(), sub.end());
      } else {
        w.push_back(x);
      }
    }
    for (auto& x : w) x = renumber(x);
    r = free_reduce(w);
  }
  p.generators.erase(p.generators.begin() + g);
}

struct Isolation {
  std::size_t relator;
  std::size_t position;
};

std::optional<Isolation> find_isolated(const Presentation& p) {
  std::optional<Isolation> best;
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    const auto& w = p.relators[r];
    if (best && w.size() >= p.relators[best->relator].size()) continue;
    std::vector<int> count(p.generators.size(), 0);
    for (int x : w) ++count[generator_of(x)];
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (count[generator_of(w[i])] == 1) {
        best = Isolation{r, i};
        break;
      }
    }
  }
  return best;
}

}  // namespace

Presentation tietze_simplify(Presentation p, int max_passes) {
  for (int pass = 0; pass < max_passes; ++pass) {
    tidy(p);
    const auto iso = find_isolated(p);
    if (!iso) break;

    const GroupWord rel = p.relators[iso->relator];
    const int x = rel[iso->position];
    // rotate so the isolated letter leads: x^s · v = 1
    GroupWord v(rel.begin() + static_cast<long>(iso->position) + 1, rel.end());
    v.insert(v.end(), rel.begin(), rel.begin() + static_cast<long>(iso->position));
    const GroupWord value = x > 0 ? invert(v) : v;

    p.relators.erase(p.relators.begin() + static_cast<long>(iso->relator));
    eliminate(p, generator_of(x), value);
  }
  tidy(p);
  return p;
}

}  // namespace spine::groups
