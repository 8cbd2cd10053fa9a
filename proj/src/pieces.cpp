#include "spine/pieces.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace spine {
namespace {

// Frontier segments of C1 ∪ C2 ∪ C3 between prong endpoints:
//   α1: O12-O5-O22, O21-O6-O31, O32-O7-O42, O41-O8-O11
//   α2: O13-O33       α3: O23-O43
constexpr std::array<InternalArc, 6> kVertexArcs{{
    {{1, 2}, {2, 2}},
    {{2, 1}, {3, 1}},
    {{3, 2}, {4, 2}},
    {{4, 1}, {1, 1}},
    {{1, 3}, {3, 3}},
    {{2, 3}, {4, 3}},
}};

// Bar C ∪ Ĉ with end 1 at x = 2 and end 2 at x = -2:
//   y = 1 edge O12-O31, y = -1 edge O11-O32, z = 1 edge O13-O33.
constexpr std::array<InternalArc, 3> kBarArcs{{
    {{1, 2}, {2, 1}},
    {{1, 1}, {2, 2}},
    {{1, 3}, {2, 3}},
}};

template <std::size_t N>
constexpr std::array<TipIndex, 12> partner_table(const std::array<InternalArc, N>& arcs) {
  std::array<TipIndex, 12> out{};
  for (const auto& [a, b] : arcs) {
    out[a.slot()] = b;
    out[b.slot()] = a;
  }
  return out;
}

constexpr auto kVertexPartner = partner_table(kVertexArcs);
constexpr auto kBarPartner = partner_table(kBarArcs);

std::vector<PieceSymmetry> brute_force_symmetries(PieceKind kind) {
  const int ends = t_end_count(kind);
  std::vector<int> t_perm(ends);
  std::iota(t_perm.begin(), t_perm.end(), 1);
  const auto perms = Perm3::all();

  std::vector<PieceSymmetry> out;
  do {
    // odometer over 6^ends prong-bijection choices
    std::vector<int> digits(ends, 0);
    while (true) {
      PieceSymmetry sym;
      sym.t_end_map = t_perm;
      for (int d : digits) sym.prong_maps.push_back(perms[d]);
      if (preserves_arcs(kind, sym)) out.push_back(std::move(sym));

      int pos = 0;
      while (pos < ends && ++digits[pos] == 6) digits[pos++] = 0;
      if (pos == ends) break;
    }
  } while (std::next_permutation(t_perm.begin(), t_perm.end()));

  // identity first (it is generated first already, but keep it explicit)
  auto id = std::find_if(out.begin(), out.end(), [](const auto& s) { return s.is_identity(); });
  std::rotate(out.begin(), id, id + 1);
  return out;
}

}  // namespace

std::string_view to_string(PieceKind kind) {
  return kind == PieceKind::Vertex ? "vertex" : "bar";
}

std::span<const InternalArc> internal_arcs(PieceKind kind) {
  if (kind == PieceKind::Vertex) return kVertexArcs;
  return kBarArcs;
}

TipIndex arc_partner(PieceKind kind, TipIndex tip) {
  return kind == PieceKind::Vertex ? kVertexPartner[tip.slot()] : kBarPartner[tip.slot()];
}

PieceSymmetry PieceSymmetry::after(const PieceSymmetry& other) const {
  PieceSymmetry out;
  const auto n = t_end_map.size();
  out.t_end_map.resize(n);
  out.prong_maps.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const int mid = other.t_end_map[i];
    out.t_end_map[i] = t_end_map[mid - 1];
    out.prong_maps[i] = prong_maps[mid - 1].after(other.prong_maps[i]);
  }
  return out;
}

PieceSymmetry PieceSymmetry::inverse() const {
  PieceSymmetry out;
  const auto n = t_end_map.size();
  out.t_end_map.resize(n);
  out.prong_maps.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const int img = t_end_map[i];
    out.t_end_map[img - 1] = static_cast<int>(i) + 1;
    out.prong_maps[img - 1] = prong_maps[i].inverse();
  }
  return out;
}

bool PieceSymmetry::is_identity() const {
  for (std::size_t i = 0; i < t_end_map.size(); ++i)
    if (t_end_map[i] != static_cast<int>(i) + 1 || prong_maps[i] != Perm3::identity())
      return false;
  return true;
}

bool PieceSymmetry::preserves_orientation() const {
  return std::all_of(prong_maps.begin(), prong_maps.end(),
                     [](const Perm3& p) { return p.is_even(); });
}

bool preserves_arcs(PieceKind kind, const PieceSymmetry& sym) {
  const int ends = t_end_count(kind);
  if (static_cast<int>(sym.t_end_map.size()) != ends ||
      static_cast<int>(sym.prong_maps.size()) != ends)
    return false;
  std::vector<bool> hit(ends + 1, false);
  for (int t : sym.t_end_map) {
    if (t < 1 || t > ends || hit[t]) return false;
    hit[t] = true;
  }
  for (const auto& [a, b] : internal_arcs(kind)) {
    if (arc_partner(kind, sym.apply(a)) != sym.apply(b)) return false;
  }
  return true;
}

const std::vector<PieceSymmetry>& piece_symmetries(PieceKind kind) {
  static const std::vector<PieceSymmetry> vertex = brute_force_symmetries(PieceKind::Vertex);
  static const std::vector<PieceSymmetry> bar = brute_force_symmetries(PieceKind::Bar);
  return kind == PieceKind::Vertex ? vertex : bar;
}

}  // namespace spine
