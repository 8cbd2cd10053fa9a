#include "spine/enumerator.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <sstream>

#include "spine/error.hpp"
#include "spine/groups/presentation.hpp"
#include "spine/groups/tietze.hpp"
#include "spine/invariants.hpp"
#include "spine/tracer.hpp"

namespace spine {
namespace {

std::string vertex_name(int i) { return "V" + std::to_string(i + 1); }

// Relabeling of a resolved spec: piece p goes to canonical position
// position[p] and is transformed by *symmetry[p].
struct Relabeling {
  std::vector<int> position;
  std::vector<const PieceSymmetry*> symmetry;
};

struct Encoder {
  explicit Encoder(const ResolvedSpec& spec) : spec(spec) {
    for (auto k : spec.kinds) (k == PieceKind::Vertex ? vertices : bars)++;
  }

  int slot_base(int position) const {
    return position < vertices ? 4 * position : 4 * vertices + 2 * (position - vertices);
  }

  CanonicalCode encode(const Relabeling& r) const {
    std::vector<std::array<std::uint8_t, 3>> rows;
    rows.reserve(spec.matchings.size());
    for (const auto& m : spec.matchings) {
      const auto& sa = *r.symmetry[m.left_piece];
      const auto& sb = *r.symmetry[m.right_piece];
      int a = slot_base(r.position[m.left_piece]) + sa.t_end_map[m.left_t_end - 1] - 1;
      int b = slot_base(r.position[m.right_piece]) + sb.t_end_map[m.right_t_end - 1] - 1;
      Perm3 p = sb.prong_maps[m.right_t_end - 1].after(m.perm).after(
          sa.prong_maps[m.left_t_end - 1].inverse());
      if (a > b) {
        std::swap(a, b);
        p = p.inverse();
      }
      rows.push_back({static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
                      static_cast<std::uint8_t>(p.index())});
    }
    std::sort(rows.begin(), rows.end());
    CanonicalCode code;
    code.bytes.reserve(2 + 3 * rows.size());
    code.bytes.push_back(static_cast<std::uint8_t>(vertices));
    code.bytes.push_back(static_cast<std::uint8_t>(bars));
    for (const auto& row : rows) code.bytes.insert(code.bytes.end(), row.begin(), row.end());
    return code;
  }

  const ResolvedSpec& spec;
  int vertices = 0;
  int bars = 0;
};

std::vector<const PieceSymmetry*> allowed_symmetries(PieceKind kind, bool reflections) {
  std::vector<const PieceSymmetry*> out;
  for (const auto& s : piece_symmetries(kind))
    if (reflections || s.preserves_orientation()) out.push_back(&s);
  return out;
}

// Calls visit(relabeling) for every element of the relabeling group.
template <class Visit>
void for_each_relabeling(const ResolvedSpec& spec, bool reflections, Visit&& visit) {
  const auto n = spec.kinds.size();
  std::vector<int> vert_pieces, bar_pieces;
  for (std::size_t p = 0; p < n; ++p)
    (spec.kinds[p] == PieceKind::Vertex ? vert_pieces : bar_pieces).push_back(static_cast<int>(p));
  const auto vsyms = allowed_symmetries(PieceKind::Vertex, reflections);
  const auto bsyms = allowed_symmetries(PieceKind::Bar, reflections);

  Relabeling r;
  r.position.assign(n, 0);
  r.symmetry.assign(n, nullptr);
  std::vector<int> vorder = vert_pieces, border = bar_pieces;
  std::sort(vorder.begin(), vorder.end());
  std::sort(border.begin(), border.end());
  do {
    do {
      for (std::size_t i = 0; i < vorder.size(); ++i) r.position[vorder[i]] = static_cast<int>(i);
      for (std::size_t i = 0; i < border.size(); ++i)
        r.position[border[i]] = static_cast<int>(vorder.size() + i);
      std::vector<std::size_t> digit(n, 0);
      while (true) {
        for (std::size_t p = 0; p < n; ++p)
          r.symmetry[p] = spec.kinds[p] == PieceKind::Vertex ? vsyms[digit[p]] : bsyms[digit[p]];
        visit(r);
        std::size_t pos = 0;
        while (pos < n) {
          const auto limit = spec.kinds[pos] == PieceKind::Vertex ? vsyms.size() : bsyms.size();
          if (++digit[pos] < limit) break;
          digit[pos++] = 0;
        }
        if (pos == n) break;
      }
    } while (std::next_permutation(border.begin(), border.end()));
  } while (std::next_permutation(vorder.begin(), vorder.end()));
}

std::uint64_t relabeling_group_size(const ResolvedSpec& spec, bool reflections) {
  std::uint64_t size = 1;
  std::uint64_t nv = 0, nb = 0;
  for (auto k : spec.kinds) {
    size *= allowed_symmetries(k, reflections).size();
    (k == PieceKind::Vertex ? nv : nb)++;
    size *= k == PieceKind::Vertex ? nv : nb;  // builds nv! · nb!
  }
  return size;
}

Relabeling identity_relabeling(const ResolvedSpec& spec) {
  Relabeling r;
  int v = 0, b = 0;
  int nv = static_cast<int>(std::count(spec.kinds.begin(), spec.kinds.end(), PieceKind::Vertex));
  for (auto k : spec.kinds) {
    r.position.push_back(k == PieceKind::Vertex ? v++ : nv + b++);
    r.symmetry.push_back(&piece_symmetries(k).front());
  }
  return r;
}

struct ClassSummary {
  long chi;
  int curves;
  bool embeddable;
  groups::AbelianInvariants h1;
  std::vector<std::size_t> lengths;

  bool operator==(const ClassSummary&) const = default;
};

ClassSummary summarize(const GluingSpec& spec, const std::vector<BoundaryCurve>& curves) {
  ClassSummary s;
  s.chi = euler_characteristic(spec, curves);
  s.curves = static_cast<int>(curves.size());
  s.embeddable = orientability_verdict(spec, curves).embeddable_orientable;
  if (build_skeleton(spec).connected())
    s.h1 = groups::abelianization(groups::presentation_from_complex(spec, curves).presentation);
  for (const auto& c : curves) s.lengths.push_back(c.word.size());
  std::sort(s.lengths.begin(), s.lengths.end());
  return s;
}

CensusMode run_census_mode(int n, bool reflections, const CensusOptions& options) {
  CensusMode mode;
  mode.reflections = reflections;
  std::map<CanonicalCode, std::size_t> class_of;  // raw code -> class slot
  std::vector<CensusClass> classes;
  std::vector<ClassSummary> summaries;

  for_each_gluing(n, [&](const GluingSpec& spec) {
    const auto resolved = resolve(spec);
    const Encoder enc(resolved);
    const auto code = enc.encode(identity_relabeling(resolved));
    auto it = class_of.find(code);
    if (it != class_of.end()) {
      auto& cls = classes[it->second];
      ++cls.size;
      if (options.check_consistency) {
        const auto curves = trace_boundary(resolved);
        if (!(summarize(spec, curves) == summaries[it->second]))
          mode.inconsistencies.push_back("class " + cls.code.to_hex() + " disagrees with member " +
                                         raw_code(spec).to_hex());
      }
      return;
    }
    CensusClass cls;
    cls.code = code;
    const std::size_t slot = classes.size();
    for_each_relabeling(resolved, reflections, [&](const Relabeling& r) {
      auto c = enc.encode(r);
      cls.code = std::min(cls.code, c);
      class_of.emplace(std::move(c), slot);
    });
    cls.representative = spec;
    cls.size = 1;
    const auto curves = trace_boundary(resolved);
    const auto summary = summarize(spec, curves);
    cls.chi = summary.chi;
    cls.curve_count = summary.curves;
    cls.embeddable_orientable = summary.embeddable;
    cls.connected = build_skeleton(spec).connected();
    if (cls.connected) {
      cls.h1 = summary.h1;
      cls.cosets = groups::todd_coxeter(
          groups::tietze_simplify(groups::presentation_from_complex(spec, curves).presentation),
          options.max_cosets);
      cls.cosets.table.reset();
    }
    classes.push_back(std::move(cls));
    summaries.push_back(summary);
  });

  std::sort(classes.begin(), classes.end(),
            [](const CensusClass& a, const CensusClass& b) { return a.code < b.code; });
  for (const auto& c : classes) {
    if (c.embeddable_orientable) ++mode.embeddable_classes;
    if (c.connected) ++mode.connected_classes;
  }
  mode.classes = std::move(classes);
  return mode;
}

}  // namespace

std::uint64_t gluing_count(int n) {
  std::uint64_t pairings = 1;
  for (int k = 4 * n - 1; k > 1; k -= 2) pairings *= static_cast<std::uint64_t>(k);
  std::uint64_t perms = 1;
  for (int i = 0; i < 2 * n; ++i) perms *= 6;
  return pairings * perms;
}

void for_each_gluing(int n, const std::function<void(const GluingSpec&)>& visit) {
  if (n < 1) throw std::invalid_argument("need at least one vertex piece");
  const int slots = 4 * n;
  const int pairs = 2 * n;

  GluingSpec spec;
  for (int i = 0; i < n; ++i) spec.pieces.push_back({vertex_name(i), PieceKind::Vertex});
  spec.matchings.resize(pairs);
  for (int i = 0; i < pairs; ++i) spec.matchings[i].id = "e" + std::to_string(i + 1);

  auto slot_of = [](int s) { return TEndSlot{vertex_name(s / 4), s % 4 + 1}; };
  const auto perms = Perm3::all();

  std::vector<bool> used(slots, false);
  std::vector<std::pair<int, int>> pairing;

  std::function<void()> recurse = [&]() {
    int first = 0;
    while (first < slots && used[first]) ++first;
    if (first == slots) {
      for (int i = 0; i < pairs; ++i) {
        spec.matchings[i].left = slot_of(pairing[i].first);
        spec.matchings[i].right = slot_of(pairing[i].second);
      }
      std::vector<int> digit(pairs, 0);
      while (true) {
        for (int i = 0; i < pairs; ++i) spec.matchings[i].perm = perms[digit[i]];
        visit(spec);
        int pos = pairs - 1;
        while (pos >= 0 && ++digit[pos] == 6) digit[pos--] = 0;
        if (pos < 0) break;
      }
      return;
    }
    used[first] = true;
    for (int second = first + 1; second < slots; ++second) {
      if (used[second]) continue;
      used[second] = true;
      pairing.emplace_back(first, second);
      recurse();
      pairing.pop_back();
      used[second] = false;
    }
    used[first] = false;
  };
  recurse();
}

std::vector<GluingSpec> enumerate_gluings(int n) {
  std::vector<GluingSpec> out;
  out.reserve(gluing_count(n));
  for_each_gluing(n, [&](const GluingSpec& s) { out.push_back(s); });
  return out;
}

std::string CanonicalCode::to_hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  for (auto b : bytes) {
    out += digits[b >> 4];
    out += digits[b & 15];
  }
  return out;
}

CanonicalCode raw_code(const GluingSpec& spec) {
  require_valid(spec);
  const auto resolved = resolve(spec);
  return Encoder(resolved).encode(identity_relabeling(resolved));
}

CanonicalCode canonical_spec(const GluingSpec& spec, const CanonOptions& options) {
  require_valid(spec);
  if (!spec.disks.is_all())
    throw std::invalid_argument("canonical_spec needs disks on all curves");
  const auto resolved = resolve(spec);
  const auto group = relabeling_group_size(resolved, options.reflections);
  if (group > options.max_candidates)
    throw SpineError(ErrorCode::TooLarge, "relabeling group of size " + std::to_string(group) +
                                              " exceeds the bound " +
                                              std::to_string(options.max_candidates));
  const Encoder enc(resolved);
  CanonicalCode best = enc.encode(identity_relabeling(resolved));
  for_each_relabeling(resolved, options.reflections,
                      [&](const Relabeling& r) { best = std::min(best, enc.encode(r)); });
  return best;
}

GluingSpec transport(const GluingSpec& spec, const std::vector<PieceSymmetry>& symmetries) {
  require_valid(spec);
  GluingSpec out = spec;
  for (auto& m : out.matchings) {
    const auto& sa = symmetries[*spec.find_piece(m.left.piece)];
    const auto& sb = symmetries[*spec.find_piece(m.right.piece)];
    const int ta = m.left.t_end;
    const int tb = m.right.t_end;
    m.left.t_end = sa.t_end_map[ta - 1];
    m.right.t_end = sb.t_end_map[tb - 1];
    m.perm = sb.prong_maps[tb - 1].after(m.perm).after(sa.prong_maps[ta - 1].inverse());
  }
  return out;
}

CensusResult census(int n, const CensusOptions& options) {
  CensusResult result;
  result.pieces = n;
  result.raw_count = gluing_count(n);
  result.with_reflections = run_census_mode(n, true, options);
  result.without_reflections = run_census_mode(n, false, options);
  return result;
}

}  // namespace spine
