#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spine/perm3.hpp"
#include "spine/pieces.hpp"

namespace spine {

struct Piece {
  std::string name;
  PieceKind kind = PieceKind::Vertex;

  bool operator==(const Piece&) const = default;
};

struct TEndSlot {
  std::string piece;
  int t_end = 1;

  bool operator==(const TEndSlot&) const = default;
};

/// Identifies two T-ends: left prong k is glued to right prong perm(k).
struct Matching {
  std::string id;
  TEndSlot left;
  TEndSlot right;
  Perm3 perm;

  bool operator==(const Matching&) const = default;
};

/// Which traced frontier curves receive a disk. Curve indices are 1-based
/// positions in the tracer's deterministic order.
class DiskPolicy {
 public:
  static DiskPolicy all() { return DiskPolicy{}; }
  static DiskPolicy explicit_curves(std::vector<int> curves) {
    DiskPolicy p;
    p.all_ = false;
    p.curves_ = std::move(curves);
    return p;
  }

  bool is_all() const { return all_; }
  const std::vector<int>& curves() const { return curves_; }

  bool operator==(const DiskPolicy&) const = default;

 private:
  bool all_ = true;
  std::vector<int> curves_;
};

struct GluingSpec {
  std::vector<Piece> pieces;
  std::vector<Matching> matchings;
  DiskPolicy disks;

  std::optional<int> find_piece(std::string_view name) const;
  int total_t_ends() const;

  bool operator==(const GluingSpec&) const = default;
};

enum class Parity { Even, Odd };

std::string_view to_string(Parity parity);

/// Even for the identity and the 3-cycles, Odd for transpositions.
constexpr Parity matching_parity(const Perm3& perm) {
  return perm.is_even() ? Parity::Even : Parity::Odd;
}

enum class IssueKind {
  UnmatchedTEnd,
  DoublyMatchedTEnd,
  SelfMatchedTEnd,
  UnknownPiece,
  DuplicateName,
  InvalidTEnd,
  InvalidPerm,
};

std::string_view to_string(IssueKind kind);

struct ValidationIssue {
  IssueKind kind;
  std::string subject;
  std::string message;
};

/// Every violated invariant, in a stable order. Empty means valid.
std::vector<ValidationIssue> validate(const GluingSpec& spec);

/// Throws SpineError(InvalidSpec) listing all issues.
void require_valid(const GluingSpec& spec);

/// Index-resolved view of a valid spec. Global tip ids are dense:
/// tip_offset[piece] + TipIndex::slot().
struct ResolvedMatching {
  int left_piece;
  int left_t_end;
  int right_piece;
  int right_t_end;
  Perm3 perm;
};

struct ResolvedSpec {
  std::vector<PieceKind> kinds;
  std::vector<int> tip_offset;
  int total_tips = 0;
  std::vector<ResolvedMatching> matchings;
};

ResolvedSpec resolve(const GluingSpec& spec);

struct SkeletonEdge {
  int matching;  // index into GluingSpec::matchings
  int from;      // left piece
  int to;        // right piece
  Parity parity;
};

/// The intrinsic 1-skeleton: one node per piece, one oriented edge per matching.
struct SkeletonGraph {
  std::vector<PieceKind> nodes;
  std::vector<SkeletonEdge> edges;
  std::vector<int> component_of;  // per node
  int components = 0;

  bool connected() const { return components == 1; }
  /// Loops count twice.
  std::vector<int> degrees() const;
};

SkeletonGraph build_skeleton(const GluingSpec& spec);

}  // namespace spine
