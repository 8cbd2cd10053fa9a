#include "spine/frontend/report.hpp"

#include <charconv>
#include <chrono>
#include <cstdlib>
#include <sstream>
#include <string_view>

#include <algorithm>
#include "spine/groups/tietze.hpp"

namespace spine::frontend {

std::size_t default_max_cosets() {
  const char* env = std::getenv("SPINE_MAX_COSETS");
  if (env == nullptr) return groups::kDefaultMaxCosets;
  const std::string_view s(env);
  std::size_t value = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || end != s.data() + s.size() || value == 0)
    return groups::kDefaultMaxCosets;
  return value;
}

AnalysisError::AnalysisError(std::string stage, std::optional<ErrorCode> code,
                             const std::string& what)
    : std::runtime_error(stage + ": " + what), stage_(std::move(stage)), code_(code) {}

namespace {

class StageRunner {
 public:
  explicit StageRunner(AnalysisReport& report, bool timed) : report_(report), timed_(timed) {}

  template <class F>
  void run(const char* stage, F&& f) {
    const auto start = std::chrono::steady_clock::now();
    try {
      f();
    } catch (const SpineError& e) {
      throw AnalysisError(stage, e.code(), e.what());
    } catch (const std::exception& e) {
      throw AnalysisError(stage, std::nullopt, e.what());
    }
    if (timed_) {
      const std::chrono::duration<double, std::milli> d = std::chrono::steady_clock::now() - start;
      report_.timings.push_back({stage, d.count()});
    }
  }

 private:
  AnalysisReport& report_;
  bool timed_;
};

std::vector<EdgeWord> canonical_forms(const std::vector<EdgeWord>& words, bool& with_flips) {
  try {
    with_flips = true;
    return canonical_word_multiset(words);
  } catch (const SpineError& e) {
    if (e.code() != ErrorCode::AlphabetTooLarge) throw;
  }
  with_flips = false;
  std::vector<EdgeWord> out;
  for (const auto& w : words) out.push_back(cyclic_canonical(w));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

AnalysisReport analyze(const GluingSpec& spec, const AnalyzeOptions& options) {
  AnalysisReport r;
  r.spec = spec;
  StageRunner stage(r, options.timings);
  stage.run("validate", [&] { require_valid(spec); });
  stage.run("skeleton", [&] {
    r.skeleton = build_skeleton(spec);
    if (!r.skeleton.connected())
      throw SpineError(ErrorCode::Disconnected,
                       "skeleton has " + std::to_string(r.skeleton.components) + " components");
  });
  stage.run("trace", [&] {
    r.curves = trace_boundary(spec);
    r.canonical_words = canonical_forms(words_of(r.curves), r.canonical_with_flips);
  });
  stage.run("invariants", [&] {
    r.invariants = complex_invariants(spec, r.curves);
    r.disk_curves = attached_curves(spec, r.curves.size());
    r.verdict = orientability_verdict(spec, r.curves);
  });
  stage.run("presentation", [&] { r.raw = groups::presentation_from_complex(spec, r.curves); });
  stage.run("simplify", [&] { r.simplified = groups::tietze_simplify(r.raw.presentation); });
  stage.run("abelianize", [&] {
    r.h1 = groups::abelianization(r.simplified);
    r.betti = groups::betti_numbers(spec, r.curves, r.h1);
  });
  stage.run("cosets", [&] { r.cosets = groups::todd_coxeter(r.simplified, options.max_cosets); });
  return r;
}

std::string tip_label(const GluingSpec& spec, const GlobalTip& tip) {
  return spec.pieces[static_cast<std::size_t>(tip.piece)].name + "." + std::to_string(tip.t_end) +
         "." + std::to_string(tip.prong);
}

Json spec_json(const GluingSpec& spec) {
  Json pieces = Json::array();
  for (const auto& p : spec.pieces) pieces.push_back({{"name", p.name}, {"kind", to_string(p.kind)}});
  Json matchings = Json::array();
  for (const auto& m : spec.matchings) {
    matchings.push_back({{"id", m.id},
                         {"left", m.left.piece + "." + std::to_string(m.left.t_end)},
                         {"right", m.right.piece + "." + std::to_string(m.right.t_end)},
                         {"perm", m.perm.to_string()}});
  }
  Json disks;
  if (spec.disks.is_all())
    disks = "all";
  else
    disks = spec.disks.curves();
  return {{"pieces", pieces}, {"matchings", matchings}, {"disks", disks}};
}

Json coset_json(const groups::CosetResult& result) {
  Json j{{"outcome", result.finite() ? "finite" : "limit_exceeded"}, {"limit", result.limit}};
  if (result.finite())
    j["order"] = result.order;
  else
    j["order"] = nullptr;
  return j;
}

Json abelian_json(const groups::AbelianInvariants& h1) {
  Json torsion = Json::array();
  for (const auto& t : h1.torsion) torsion.push_back(t.str());
  return {{"rank", h1.rank}, {"torsion", torsion}, {"text", h1.to_string()}};
}

namespace {

Json presentation_json(const groups::Presentation& p) {
  Json rels = Json::array();
  for (const auto& w : p.relators) rels.push_back(groups::format(w, p.generators));
  return {{"generators", p.generators}, {"relators", rels}};
}

}  // namespace

Json to_json(const AnalysisReport& r) {
  const auto names = edge_names(r.spec);

  Json nodes = Json::array();
  for (std::size_t i = 0; i < r.skeleton.nodes.size(); ++i)
    nodes.push_back({{"piece", r.spec.pieces[i].name}, {"kind", to_string(r.skeleton.nodes[i])}});
  Json edges = Json::array();
  for (const auto& e : r.skeleton.edges) {
    edges.push_back({{"id", names[static_cast<std::size_t>(e.matching)]},
                     {"from", r.spec.pieces[static_cast<std::size_t>(e.from)].name},
                     {"to", r.spec.pieces[static_cast<std::size_t>(e.to)].name},
                     {"parity", to_string(e.parity)}});
  }

  Json curves = Json::array();
  for (std::size_t i = 0; i < r.curves.size(); ++i) {
    const auto& c = r.curves[i];
    Json tips = Json::array();
    for (const auto& t : c.tips) tips.push_back(tip_label(r.spec, t));
    const bool disk =
        std::find(r.disk_curves.begin(), r.disk_curves.end(), static_cast<int>(i)) !=
        r.disk_curves.end();
    curves.push_back({{"index", i + 1},
                      {"word", format_word(c.word, names)},
                      {"length", c.word.size()},
                      {"even_letters", even_letter_count(r.spec, c.word)},
                      {"disk", disk},
                      {"tips", tips}});
  }
  Json canonical = Json::array();
  for (const auto& w : r.canonical_words) canonical.push_back(format_word(w, names));

  Json verdict{{"embeddable_orientable", r.verdict.embeddable_orientable}};
  if (r.verdict.witness)
    verdict["witness_curve"] = *r.verdict.witness + 1;
  else
    verdict["witness_curve"] = nullptr;

  Json tree = Json::array();
  for (int e : r.raw.tree_edges) tree.push_back(names[static_cast<std::size_t>(e)]);

  Json j;
  j["spec"] = spec_json(r.spec);
  j["skeleton"] = {{"nodes", nodes}, {"edges", edges}, {"components", r.skeleton.components}};
  j["curves"] = curves;
  j["canonical_words"] = {{"flips", r.canonical_with_flips}, {"words", canonical}};
  j["chi"] = r.invariants.chi;
  j["disks"] = r.invariants.disk_count;
  j["betti"] = {{"b0", r.betti.b0}, {"b1", r.betti.b1}, {"b2", r.betti.b2}};
  j["verdict"] = verdict;
  Json raw = presentation_json(r.raw.presentation);
  raw["spanning_tree"] = tree;
  j["presentation"] = {{"raw", raw}, {"simplified", presentation_json(r.simplified)}};
  j["abelianization"] = abelian_json(r.h1);
  j["cosets"] = coset_json(r.cosets);
  if (!r.timings.empty()) {
    Json t = Json::object();
    for (const auto& s : r.timings) t[s.stage] = s.millis;
    j["timings_ms"] = t;
  }
  return j;
}

std::string to_text(const AnalysisReport& r) {
  const auto names = edge_names(r.spec);
  std::ostringstream out;
  out << "pieces " << r.spec.pieces.size() << ", matchings " << r.spec.matchings.size()
      << ", curves " << r.curves.size() << ", disks " << r.invariants.disk_count << "\n";
  out << "edges:";
  for (const auto& e : r.skeleton.edges)
    out << ' ' << names[static_cast<std::size_t>(e.matching)] << '=' << to_string(e.parity);
  out << "\ncurves:\n";
  for (std::size_t i = 0; i < r.curves.size(); ++i) {
    const bool disk = std::find(r.disk_curves.begin(), r.disk_curves.end(),
                                static_cast<int>(i)) != r.disk_curves.end();
    out << "  " << i + 1 << (disk ? " [disk] " : "        ") << format_word(r.curves[i].word, names)
        << "\n";
  }
  out << "canonical:";
  for (const auto& w : r.canonical_words) out << " {" << format_word(w, names) << '}';
  out << "\nchi " << r.invariants.chi << ", betti " << r.betti.b0 << ' ' << r.betti.b1 << ' '
      << r.betti.b2 << "\n";
  out << "embeddable (orientable 3-manifold): "
      << (r.verdict.embeddable_orientable ? "yes" : "no");
  if (r.verdict.witness) out << " (curve " << *r.verdict.witness + 1 << ")";
  out << "\npresentation: " << groups::format(r.raw.presentation) << "\n";
  out << "simplified:   " << groups::format(r.simplified) << "\n";
  out << "H1: " << r.h1.to_string() << "\n";
  out << "order: ";
  if (r.cosets.finite())
    out << r.cosets.order;
  else
    out << "unknown (more than " << r.cosets.limit << " cosets)";
  out << "\n";
  for (const auto& s : r.timings) out << "time " << s.stage << ' ' << s.millis << " ms\n";
  return out.str();
}

namespace {

Json census_mode_json(const CensusMode& mode, int pieces) {
  Json classes = Json::array();
  for (const auto& c : mode.classes) {
    classes.push_back({{"code", c.code.to_hex()},
                       {"size", c.size},
                       {"chi", c.chi},
                       {"curves", c.curve_count},
                       {"embeddable_orientable", c.embeddable_orientable},
                       {"connected", c.connected},
                       {"abelianization", c.connected ? Json(c.h1.to_string()) : Json()},
                       {"cosets", c.connected ? coset_json(c.cosets) : Json()},
                       {"representative", spec_json(c.representative)["matchings"]}});
  }
  Json j{{"reflections", mode.reflections},
         {"classes", mode.classes.size()},
         {"embeddable_classes", mode.embeddable_classes},
         {"connected_classes", mode.connected_classes}};
  if (pieces == 1) {
    const bool match = mode.classes.size() == kExpectedClassesOneVertex &&
                       mode.embeddable_classes == kExpectedEmbeddableOneVertex;
    j["expected"] = {{"classes", kExpectedClassesOneVertex},
                     {"embeddable_classes", kExpectedEmbeddableOneVertex},
                     {"check", "soft"},
                     {"mismatch", !match}};
  }
  j["inconsistencies"] = mode.inconsistencies;
  j["representatives"] = classes;
  return j;
}

}  // namespace

Json census_json(const CensusResult& census, const CensusSelection& selection) {
  Json j{{"pieces", census.pieces}, {"raw_count", census.raw_count}};
  if (census.pieces == 1)
    j["raw_expected"] = kExpectedRawOneVertex;
  j["classification"] = "combinatorial: piece relabeling and piece symmetries";
  Json modes = Json::array();
  if (selection.with_reflections) modes.push_back(census_mode_json(census.with_reflections, census.pieces));
  if (selection.without_reflections)
    modes.push_back(census_mode_json(census.without_reflections, census.pieces));
  j["modes"] = modes;
  return j;
}

Json cover_json(const CoverSpec& cover, const CoverReport& report) {
  Json verdict{{"embeddable_orientable", report.verdict.embeddable_orientable}};
  if (report.verdict.witness)
    verdict["witness_curve"] = *report.verdict.witness + 1;
  else
    verdict["witness_curve"] = nullptr;
  return {{"index", cover.index},
          {"base", {{"pieces", cover.base_pieces}, {"matchings", cover.base_matchings}}},
          {"pieces", report.pieces},
          {"matchings", report.matchings},
          {"lifted_disks", report.lifted_disks},
          {"traced_curves", report.traced_curves},
          {"chi", report.chi},
          {"verdict", verdict},
          {"abelianization", abelian_json(report.h1)},
          {"cosets", coset_json(report.cosets)},
          {"simply_connected", report.simply_connected()},
          {"lift_matches_trace", report.lift_matches_trace},
          {"spec", spec_json(cover.spec)}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace spine::frontend
