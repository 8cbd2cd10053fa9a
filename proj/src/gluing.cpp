#include "spine/gluing.hpp"

#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "spine/error.hpp"

namespace spine {

std::optional<int> GluingSpec::find_piece(std::string_view name) const {
  for (std::size_t i = 0; i < pieces.size(); ++i)
    if (pieces[i].name == name) return static_cast<int>(i);
  return std::nullopt;
}

int GluingSpec::total_t_ends() const {
  int total = 0;
  for (const auto& p : pieces) total += t_end_count(p.kind);
  return total;
}

std::string_view to_string(Parity parity) { return parity == Parity::Even ? "even" : "odd"; }

std::string_view to_string(IssueKind kind) {
  switch (kind) {
    case IssueKind::UnmatchedTEnd: return "UnmatchedTEnd";
    case IssueKind::DoublyMatchedTEnd: return "DoublyMatchedTEnd";
    case IssueKind::SelfMatchedTEnd: return "SelfMatchedTEnd";
    case IssueKind::UnknownPiece: return "UnknownPiece";
    case IssueKind::DuplicateName: return "DuplicateName";
    case IssueKind::InvalidTEnd: return "InvalidTEnd";
    case IssueKind::InvalidPerm: return "InvalidPerm";
  }
  return "Unknown";
}

namespace {

std::string slot_name(const TEndSlot& s) { return s.piece + "." + std::to_string(s.t_end); }

}  // namespace

std::vector<ValidationIssue> validate(const GluingSpec& spec) {
  std::vector<ValidationIssue> issues;
  auto report = [&](IssueKind kind, std::string subject, std::string message) {
    issues.push_back({kind, std::move(subject), std::move(message)});
  };

  std::set<std::string> piece_names;
  for (const auto& p : spec.pieces) {
    if (!piece_names.insert(p.name).second)
      report(IssueKind::DuplicateName, p.name, "piece name '" + p.name + "' declared twice");
  }
  std::set<std::string> match_ids;
  for (const auto& m : spec.matchings) {
    if (!match_ids.insert(m.id).second)
      report(IssueKind::DuplicateName, m.id, "matching id '" + m.id + "' declared twice");
  }

  // (piece index, t_end) -> ids of matchings using it
  std::map<std::pair<int, int>, std::vector<std::string>> usage;
  for (const auto& m : spec.matchings) {
    if (!m.perm.is_valid())
      report(IssueKind::InvalidPerm, m.id, "matching '" + m.id + "' has a non-bijective prong map");
    if (m.left == m.right)
      report(IssueKind::SelfMatchedTEnd, m.id,
             "matching '" + m.id + "' glues T-end " + slot_name(m.left) + " to itself");
    for (const TEndSlot* slot : {&m.left, &m.right}) {
      auto idx = spec.find_piece(slot->piece);
      if (!idx) {
        report(IssueKind::UnknownPiece, m.id,
               "matching '" + m.id + "' refers to undeclared piece '" + slot->piece + "'");
        continue;
      }
      const PieceKind kind = spec.pieces[*idx].kind;
      if (slot->t_end < 1 || slot->t_end > t_end_count(kind)) {
        report(IssueKind::InvalidTEnd, m.id,
               "matching '" + m.id + "' uses T-end " + slot_name(*slot) + " but a " +
                   std::string(to_string(kind)) + " piece has " +
                   std::to_string(t_end_count(kind)) + " T-ends");
        continue;
      }
      if (m.left == m.right && slot == &m.right) continue;
      usage[{*idx, slot->t_end}].push_back(m.id);
    }
  }

  for (std::size_t i = 0; i < spec.pieces.size(); ++i) {
    const auto& p = spec.pieces[i];
    for (int t = 1; t <= t_end_count(p.kind); ++t) {
      const std::string name = p.name + "." + std::to_string(t);
      auto it = usage.find({static_cast<int>(i), t});
      if (it == usage.end()) {
        report(IssueKind::UnmatchedTEnd, name, "T-end " + name + " is not matched");
      } else if (it->second.size() > 1) {
        std::string ids;
        for (const auto& id : it->second) ids += (ids.empty() ? "" : ", ") + id;
        report(IssueKind::DoublyMatchedTEnd, name,
               "T-end " + name + " is used by several matchings: " + ids);
      }
    }
  }
  return issues;
}

void require_valid(const GluingSpec& spec) {
  auto issues = validate(spec);
  if (issues.empty()) return;
  std::ostringstream os;
  os << "invalid gluing spec:";
  for (const auto& issue : issues) os << "\n  " << to_string(issue.kind) << ": " << issue.message;
  throw SpineError(ErrorCode::InvalidSpec, os.str());
}

ResolvedSpec resolve(const GluingSpec& spec) {
  ResolvedSpec out;
  out.kinds.reserve(spec.pieces.size());
  for (const auto& p : spec.pieces) {
    out.kinds.push_back(p.kind);
    out.tip_offset.push_back(out.total_tips);
    out.total_tips += tip_count(p.kind);
  }
  out.matchings.reserve(spec.matchings.size());
  for (const auto& m : spec.matchings) {
    out.matchings.push_back({*spec.find_piece(m.left.piece), m.left.t_end,
                             *spec.find_piece(m.right.piece), m.right.t_end, m.perm});
  }
  return out;
}

std::vector<int> SkeletonGraph::degrees() const {
  std::vector<int> deg(nodes.size(), 0);
  for (const auto& e : edges) {
    ++deg[e.from];
    ++deg[e.to];
  }
  return deg;
}

SkeletonGraph build_skeleton(const GluingSpec& spec) {
  require_valid(spec);
  SkeletonGraph g;
  for (const auto& p : spec.pieces) g.nodes.push_back(p.kind);

  std::vector<int> parent(g.nodes.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  for (std::size_t i = 0; i < spec.matchings.size(); ++i) {
    const auto& m = spec.matchings[i];
    const int from = *spec.find_piece(m.left.piece);
    const int to = *spec.find_piece(m.right.piece);
    g.edges.push_back({static_cast<int>(i), from, to, matching_parity(m.perm)});
    parent[find(from)] = find(to);
  }

  std::map<int, int> label;
  g.component_of.resize(g.nodes.size());
  for (std::size_t v = 0; v < g.nodes.size(); ++v) {
    auto [it, fresh] = label.try_emplace(find(static_cast<int>(v)), static_cast<int>(label.size()));
    g.component_of[v] = it->second;
  }
  g.components = static_cast<int>(label.size());
  return g;
}

}  // namespace spine
