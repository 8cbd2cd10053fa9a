#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "spine/gluing.hpp"
#include "spine/groups/homology.hpp"
#include "spine/groups/todd_coxeter.hpp"

namespace spine {

/// Number of closed gluings of n vertex pieces: (4n−1)!! pairings × 6^(2n).
std::uint64_t gluing_count(int n_vertex_pieces);

/// Streams every closed gluing of n vertex pieces named V1..Vn, disks on all
/// curves. Pairings are generated by always pairing the lowest free T-end
/// first; matching ids are e1, e2, ... in that order; each matching's left
/// T-end precedes its right one.
void for_each_gluing(int n_vertex_pieces, const std::function<void(const GluingSpec&)>& visit);

/// Materialized form of for_each_gluing, intended for n ≤ 2.
std::vector<GluingSpec> enumerate_gluings(int n_vertex_pieces);

/// Encoding of a gluing up to piece relabeling, piece symmetries, matching
/// order, matching names and left/right swap.
struct CanonicalCode {
  std::vector<std::uint8_t> bytes;

  auto operator<=>(const CanonicalCode&) const = default;
  std::string to_hex() const;
};

struct CanonOptions {
  bool reflections = true;  // allow orientation-reversing piece symmetries
  std::uint64_t max_candidates = 5'000'000;
};

/// Code of the spec as written (identity relabeling).
CanonicalCode raw_code(const GluingSpec& spec);

/// Least code over the whole relabeling group. Requires disks on all curves.
/// Throws TooLarge when the group exceeds options.max_candidates.
CanonicalCode canonical_spec(const GluingSpec& spec, const CanonOptions& options = {});

/// Applies a per-piece symmetry (one per piece, same order as spec.pieces)
/// to the spec's gluing data; the resulting spec describes the same complex.
GluingSpec transport(const GluingSpec& spec, const std::vector<PieceSymmetry>& symmetries);

struct CensusClass {
  CanonicalCode code;
  GluingSpec representative;  // first enumerated member
  std::size_t size = 0;       // raw specs in the class
  long chi = 0;
  int curve_count = 0;
  bool embeddable_orientable = false;
  bool connected = true;
  groups::AbelianInvariants h1;    // connected classes only
  groups::CosetResult cosets;      // connected classes only
};

struct CensusMode {
  bool reflections = true;
  std::vector<CensusClass> classes;  // ordered by canonical code
  std::size_t embeddable_classes = 0;
  std::size_t connected_classes = 0;
  std::vector<std::string> inconsistencies;  // invariant disagreements inside a class
};

struct CensusOptions {
  std::size_t max_cosets = 10000;
  bool check_consistency = true;
};

struct CensusResult {
  int pieces = 0;
  std::uint64_t raw_count = 0;
  CensusMode with_reflections;
  CensusMode without_reflections;
};

/// Groups all gluings of n vertex pieces into classes, with and without
/// orientation-reversing symmetries, and attaches the invariant pipeline to
/// one representative per class.
CensusResult census(int n_vertex_pieces, const CensusOptions& options = {});

}  // namespace spine
