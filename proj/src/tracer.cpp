#include "spine/tracer.hpp"

#include <algorithm>
#include <map>

#include "spine/error.hpp"

namespace spine {
namespace {

struct GlueEntry {
  int partner;  // global tip id on the other side
  EdgeLetter letter;
};

std::vector<GlueEntry> glue_table(const ResolvedSpec& spec) {
  std::vector<GlueEntry> table(spec.total_tips, GlueEntry{-1, {0, 0}});
  for (std::size_t i = 0; i < spec.matchings.size(); ++i) {
    const auto& m = spec.matchings[i];
    const int e = static_cast<int>(i);
    for (int k = 1; k <= kProngsPerTEnd; ++k) {
      const int l = spec.tip_offset[m.left_piece] + TipIndex{m.left_t_end, k}.slot();
      const int r = spec.tip_offset[m.right_piece] + TipIndex{m.right_t_end, m.perm(k)}.slot();
      table[l] = {r, {e, +1}};
      table[r] = {l, {e, -1}};
    }
  }
  return table;
}

std::vector<int> piece_of_tip(const ResolvedSpec& spec) {
  std::vector<int> out(spec.total_tips);
  for (std::size_t p = 0; p < spec.kinds.size(); ++p)
    for (int s = 0; s < tip_count(spec.kinds[p]); ++s) out[spec.tip_offset[p] + s] = static_cast<int>(p);
  return out;
}

template <class OnStep>
void walk(const ResolvedSpec& spec, OnStep&& on_curve) {
  const auto glue = glue_table(spec);
  const auto owner = piece_of_tip(spec);
  std::vector<bool> seen(spec.total_tips, false);

  // Dense tip ids already follow (piece, t_end, prong) order.
  for (int start = 0; start < spec.total_tips; ++start) {
    if (seen[start]) continue;
    std::vector<int> tips;
    EdgeWord word;
    int cur = start;
    do {
      seen[cur] = true;
      tips.push_back(cur);
      const int p = owner[cur];
      const TipIndex local = TipIndex::from_slot(cur - spec.tip_offset[p]);
      const int across = spec.tip_offset[p] + arc_partner(spec.kinds[p], local).slot();
      seen[across] = true;
      tips.push_back(across);
      word.push_back(glue[across].letter);
      cur = glue[across].partner;
    } while (cur != start);
    on_curve(std::move(tips), std::move(word), owner);
  }
}

EdgeWord min_rotation(const EdgeWord& w) {
  const std::size_t n = w.size();
  EdgeWord best = w;
  EdgeWord cand(n);
  for (std::size_t r = 1; r < n; ++r) {
    for (std::size_t i = 0; i < n; ++i) cand[i] = w[(i + r) % n];
    if (cand < best) best = cand;
  }
  return best;
}

EdgeWord flipped(const EdgeWord& w, const std::map<int, int>& bit_of, unsigned mask) {
  EdgeWord out = w;
  for (auto& l : out)
    if (mask >> bit_of.at(l.edge) & 1u) l.exponent = -l.exponent;
  return out;
}

std::map<int, int> flip_bits(std::span<const EdgeWord> words) {
  std::map<int, int> bit_of;
  for (const auto& w : words)
    for (const auto& l : w) bit_of.try_emplace(l.edge, static_cast<int>(bit_of.size()));
  if (bit_of.size() > kMaxFlipAlphabet)
    throw SpineError(ErrorCode::AlphabetTooLarge,
                     "flip search over " + std::to_string(bit_of.size()) +
                         " edges exceeds the limit of " + std::to_string(kMaxFlipAlphabet));
  return bit_of;
}

}  // namespace

std::vector<BoundaryCurve> trace_boundary(const ResolvedSpec& spec) {
  std::vector<BoundaryCurve> curves;
  walk(spec, [&](std::vector<int> tips, EdgeWord word, const std::vector<int>& owner) {
    BoundaryCurve c;
    c.tips.reserve(tips.size());
    for (int t : tips) {
      const int p = owner[t];
      const TipIndex local = TipIndex::from_slot(t - spec.tip_offset[p]);
      c.tips.push_back({p, local.t_end, local.prong});
    }
    c.word = std::move(word);
    curves.push_back(std::move(c));
  });
  return curves;
}

std::vector<BoundaryCurve> trace_boundary(const GluingSpec& spec) {
  require_valid(spec);
  return trace_boundary(resolve(spec));
}

std::vector<EdgeWord> trace_words(const ResolvedSpec& spec) {
  std::vector<EdgeWord> words;
  walk(spec, [&](std::vector<int>, EdgeWord word, const std::vector<int>&) {
    words.push_back(std::move(word));
  });
  return words;
}

EdgeWord inverse(const EdgeWord& word) {
  EdgeWord out(word.rbegin(), word.rend());
  for (auto& l : out) l.exponent = -l.exponent;
  return out;
}

EdgeWord cyclic_canonical(const EdgeWord& word) {
  return std::min(min_rotation(word), min_rotation(inverse(word)));
}

EdgeWord canonical_word(const EdgeWord& word) {
  const auto bit_of = flip_bits(std::span(&word, 1));
  const unsigned n = 1u << bit_of.size();
  EdgeWord best = cyclic_canonical(word);
  for (unsigned mask = 1; mask < n; ++mask) best = std::min(best, cyclic_canonical(flipped(word, bit_of, mask)));
  return best;
}

std::vector<EdgeWord> canonical_word_multiset(std::span<const EdgeWord> words) {
  const auto bit_of = flip_bits(words);
  const unsigned n = 1u << bit_of.size();
  std::vector<EdgeWord> best;
  for (unsigned mask = 0; mask < n; ++mask) {
    std::vector<EdgeWord> cand;
    cand.reserve(words.size());
    for (const auto& w : words) cand.push_back(cyclic_canonical(flipped(w, bit_of, mask)));
    std::sort(cand.begin(), cand.end());
    if (mask == 0 || cand < best) best = std::move(cand);
  }
  return best;
}

std::string format_word(const EdgeWord& word, std::span<const std::string> names) {
  std::string out;
  for (const auto& l : word) {
    if (!out.empty()) out += ' ';
    out += names[l.edge];
    if (l.exponent < 0) out += "^-1";
  }
  return out;
}

std::vector<std::string> edge_names(const GluingSpec& spec) {
  std::vector<std::string> out;
  out.reserve(spec.matchings.size());
  for (const auto& m : spec.matchings) out.push_back(m.id);
  return out;
}

std::vector<EdgeWord> words_of(std::span<const BoundaryCurve> curves) {
  std::vector<EdgeWord> out;
  out.reserve(curves.size());
  for (const auto& c : curves) out.push_back(c.word);
  return out;
}

}  // namespace spine
