#include "spine/covers.hpp"

#include <algorithm>
#include <map>

#include "spine/error.hpp"
#include "spine/groups/presentation.hpp"

namespace spine {
namespace {

std::string sheet_name(const std::string& base, std::size_t sheet) {
  return base + "#" + std::to_string(sheet + 1);
}

}  // namespace

CoverSpec build_cover(const GluingSpec& base, const groups::CosetTable& table) {
  require_valid(base);
  if (!build_skeleton(base).connected())
    throw SpineError(ErrorCode::Disconnected, "cannot lift a disconnected complex");
  if (table.generator_count() != base.matchings.size() || !table.is_closed())
    throw SpineError(ErrorCode::TableNotClosed,
                     "coset table is not a closed table on the base matchings");

  const std::size_t sheets = table.coset_count();
  const std::size_t edges = base.matchings.size();

  CoverSpec cover;
  cover.index = sheets;
  cover.base_pieces = base.pieces.size();
  cover.base_matchings = edges;

  for (const auto& p : base.pieces)
    for (std::size_t c = 0; c < sheets; ++c) cover.spec.pieces.push_back({sheet_name(p.name, c), p.kind});

  // cover edge id = e * sheets + starting sheet
  for (std::size_t e = 0; e < edges; ++e) {
    const auto& m = base.matchings[e];
    const int letter = static_cast<int>(e) + 1;
    for (std::size_t c = 0; c < sheets; ++c) {
      const auto target = static_cast<std::size_t>(table.act(static_cast<int>(c), letter));
      cover.spec.matchings.push_back({sheet_name(m.id, c),
                                      {sheet_name(m.left.piece, c), m.left.t_end},
                                      {sheet_name(m.right.piece, target), m.right.t_end},
                                      m.perm});
    }
  }

  // Lift each disk-bearing base curve from every sheet.
  const auto base_curves = trace_boundary(base);
  const auto disks = attached_curves(base, base_curves.size());
  for (int d : disks) {
    const auto& word = base_curves[d].word;
    for (std::size_t start = 0; start < sheets; ++start) {
      EdgeWord lifted;
      int sheet = static_cast<int>(start);
      for (const auto& l : word) {
        const int letter = l.exponent * (l.edge + 1);
        if (l.exponent > 0) {
          lifted.push_back({l.edge * static_cast<int>(sheets) + sheet, +1});
          sheet = table.act(sheet, letter);
        } else {
          sheet = table.act(sheet, letter);
          lifted.push_back({l.edge * static_cast<int>(sheets) + sheet, -1});
        }
      }
      cover.lifted_disk_words.push_back(std::move(lifted));
    }
  }

  // Disks on the cover: every traced cover curve lying over a base disk curve.
  if (base.disks.is_all()) {
    cover.spec.disks = DiskPolicy::all();
  } else {
    std::map<GlobalTip, int> base_curve_of;
    for (std::size_t i = 0; i < base_curves.size(); ++i)
      for (const auto& t : base_curves[i].tips) base_curve_of[t] = static_cast<int>(i);
    const auto cover_curves = trace_boundary(cover.spec);
    std::vector<int> chosen;
    for (std::size_t i = 0; i < cover_curves.size(); ++i) {
      GlobalTip t = cover_curves[i].tips.front();
      t.piece = static_cast<int>(static_cast<std::size_t>(t.piece) / sheets);
      if (std::find(disks.begin(), disks.end(), base_curve_of.at(t)) != disks.end())
        chosen.push_back(static_cast<int>(i) + 1);
    }
    cover.spec.disks = DiskPolicy::explicit_curves(std::move(chosen));
  }
  return cover;
}

CoverReport verify_cover(const CoverSpec& cover, std::size_t max_cosets) {
  CoverReport report;
  const auto curves = trace_boundary(cover.spec);
  const auto disks = attached_curves(cover.spec, curves.size());
  report.pieces = cover.spec.pieces.size();
  report.matchings = cover.spec.matchings.size();
  report.lifted_disks = cover.lifted_disk_words.size();
  report.traced_curves = curves.size();
  report.chi = euler_characteristic(cover.spec, curves);
  report.verdict = orientability_verdict(cover.spec, curves);

  const auto pres = groups::presentation_from_complex(cover.spec, curves);
  report.cosets = groups::todd_coxeter(pres.presentation, max_cosets);
  report.h1 = groups::abelianization(pres.presentation);

  std::vector<EdgeWord> traced, lifted;
  for (int d : disks) traced.push_back(cyclic_canonical(curves[d].word));
  for (const auto& w : cover.lifted_disk_words) lifted.push_back(cyclic_canonical(w));
  std::sort(traced.begin(), traced.end());
  std::sort(lifted.begin(), lifted.end());
  report.lift_matches_trace = traced == lifted;
  return report;
}

std::optional<CoverSpec> universal_cover(const GluingSpec& base, std::size_t max_cosets) {
  const auto curves = trace_boundary(base);
  const auto pres = groups::presentation_from_complex(base, curves);
  const auto cosets = groups::todd_coxeter(pres.presentation, max_cosets);
  if (!cosets.finite()) return std::nullopt;
  return build_cover(base, *cosets.table);
}

}  // namespace spine
