#include "spine/groups/presentation.hpp"

#include <deque>
#include <set>

#include "spine/error.hpp"
#include "spine/invariants.hpp"

namespace spine::groups {

GroupWord invert(const GroupWord& w) {
  GroupWord out(w.rbegin(), w.rend());
  for (auto& x : out) x = -x;
  return out;
}

GroupWord free_reduce(const GroupWord& w) {
  GroupWord out;
  out.reserve(w.size());
  for (int x : w) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

GroupWord cyclic_reduce(const GroupWord& w) {
  GroupWord r = free_reduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == -r[hi - 1]) {
    ++lo;
    --hi;
  }
  return GroupWord(r.begin() + static_cast<long>(lo), r.begin() + static_cast<long>(hi));
}

std::vector<long> exponent_sums(const GroupWord& w, std::size_t generator_count) {
  std::vector<long> sums(generator_count, 0);
  for (int x : w) sums[generator_of(x)] += x > 0 ? 1 : -1;
  return sums;
}

std::string format(const GroupWord& w, std::span<const std::string> generators) {
  if (w.empty()) return "1";
  std::string out;
  for (int x : w) {
    if (!out.empty()) out += ' ';
    out += generators[generator_of(x)];
    if (x < 0) out += "^-1";
  }
  return out;
}

std::string format(const Presentation& p) {
  std::string out = "< ";
  for (std::size_t i = 0; i < p.generators.size(); ++i) out += (i ? ", " : "") + p.generators[i];
  out += " | ";
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    out += (i ? ", " : "") + format(p.relators[i], p.generators);
  out += " >";
  return out;
}

GroupWord to_group_word(const EdgeWord& w) {
  GroupWord out;
  out.reserve(w.size());
  for (const auto& l : w) out.push_back(l.exponent * (l.edge + 1));
  return out;
}

ComplexPresentation presentation_from_complex(const GluingSpec& spec,
                                              std::span<const BoundaryCurve> curves) {
  const auto skeleton = build_skeleton(spec);
  if (!skeleton.connected())
    throw SpineError(ErrorCode::Disconnected,
                     "complex has " + std::to_string(skeleton.components) + " components");

  ComplexPresentation out;
  for (const auto& m : spec.matchings) out.presentation.generators.push_back(m.id);

  out.disk_curves = attached_curves(spec, curves.size());
  for (int c : out.disk_curves) out.presentation.relators.push_back(to_group_word(curves[c].word));

  std::vector<bool> reached(skeleton.nodes.size(), false);
  std::deque<int> queue{0};
  reached[0] = true;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (const auto& e : skeleton.edges) {
      int other = -1;
      if (e.from == u) other = e.to;
      else if (e.to == u) other = e.from;
      if (other < 0 || reached[other]) continue;
      reached[other] = true;
      out.tree_edges.push_back(e.matching);
      queue.push_back(other);
    }
  }
  for (int e : out.tree_edges) out.presentation.relators.push_back({e + 1});
  return out;
}

Presentation collapse_generators(const Presentation& p, std::span<const int> generators) {
  std::set<int> dead(generators.begin(), generators.end());
  std::vector<int> new_index(p.generators.size(), -1);
  Presentation out;
  for (std::size_t g = 0; g < p.generators.size(); ++g) {
    if (dead.count(static_cast<int>(g))) continue;
    new_index[g] = static_cast<int>(out.generators.size());
    out.generators.push_back(p.generators[g]);
  }
  for (const auto& r : p.relators) {
    GroupWord w;
    for (int x : r) {
      const int g = generator_of(x);
      if (new_index[g] < 0) continue;
      w.push_back(x > 0 ? new_index[g] + 1 : -(new_index[g] + 1));
    }
    out.relators.push_back(free_reduce(w));
  }
  return out;
}

}  // namespace spine::groups
