#pragma once

#include <compare>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "spine/perm3.hpp"

namespace spine {

/// The two local building blocks: the four-ended vertex neighborhood
/// C1 ∪ C2 ∪ C3 and the two-ended triple-line bar C ∪ Ĉ.
enum class PieceKind { Vertex, Bar };

inline constexpr int kProngsPerTEnd = 3;

constexpr int t_end_count(PieceKind kind) { return kind == PieceKind::Vertex ? 4 : 2; }
constexpr int tip_count(PieceKind kind) { return kProngsPerTEnd * t_end_count(kind); }

std::string_view to_string(PieceKind kind);

/// Prong `prong` of T-end `t_end`, both 1-based. Prong k of T-end i is the
/// point O_ik of the vertex neighborhood.
struct TipIndex {
  int t_end = 1;
  int prong = 1;

  /// Dense 0-based slot: (t_end-1)*3 + (prong-1).
  constexpr int slot() const { return (t_end - 1) * kProngsPerTEnd + (prong - 1); }
  static constexpr TipIndex from_slot(int slot) {
    return {slot / kProngsPerTEnd + 1, slot % kProngsPerTEnd + 1};
  }

  constexpr auto operator<=>(const TipIndex&) const = default;
};

constexpr bool is_valid_tip(PieceKind kind, TipIndex tip) {
  return tip.t_end >= 1 && tip.t_end <= t_end_count(kind) && tip.prong >= 1 &&
         tip.prong <= kProngsPerTEnd;
}

/// One frontier segment of the piece, joining two prong tips.
using InternalArc = std::pair<TipIndex, TipIndex>;

/// The piece's frontier arcs; a perfect matching on its tips.
std::span<const InternalArc> internal_arcs(PieceKind kind);

/// The tip at the other end of the internal arc leaving `tip`.
TipIndex arc_partner(PieceKind kind, TipIndex tip);

/// A relabeling of a piece's tips that permutes T-ends as blocks and maps
/// internal arcs onto internal arcs.
struct PieceSymmetry {
  std::vector<int> t_end_map;     // t_end_map[i-1] = image of T-end i
  std::vector<Perm3> prong_maps;  // prong_maps[i-1] = prong bijection T-end i -> its image

  TipIndex apply(TipIndex tip) const {
    return {t_end_map[tip.t_end - 1], prong_maps[tip.t_end - 1](tip.prong)};
  }

  /// (this ∘ other)
  PieceSymmetry after(const PieceSymmetry& other) const;
  PieceSymmetry inverse() const;
  bool is_identity() const;

  /// True when no orientation-reversing reflection is involved: every prong
  /// bijection is an even permutation.
  bool preserves_orientation() const;

  bool operator==(const PieceSymmetry&) const = default;
};

/// True when `sym` is block-respecting and maps every internal arc to an arc.
bool preserves_arcs(PieceKind kind, const PieceSymmetry& sym);

/// Every symmetry of the piece, found by filtering all
/// (T-end permutation × per-T-end prong bijection) candidates. The identity
/// comes first. Computed once per kind and cached.
const std::vector<PieceSymmetry>& piece_symmetries(PieceKind kind);

}  // namespace spine
