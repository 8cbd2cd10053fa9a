#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "spine/covers.hpp"
#include "spine/enumerator.hpp"
#include "spine/error.hpp"
#include "spine/gluing.hpp"
#include "spine/groups/homology.hpp"
#include "spine/groups/presentation.hpp"
#include "spine/groups/todd_coxeter.hpp"
#include "spine/invariants.hpp"
#include "spine/tracer.hpp"

namespace spine::frontend {

using Json = nlohmann::ordered_json;

/// kDefaultMaxCosets unless SPINE_MAX_COSETS holds a positive integer.
std::size_t default_max_cosets();

struct AnalyzeOptions {
  std::size_t max_cosets = default_max_cosets();
  bool timings = false;  // wall-clock stage timings make the output nondeterministic
};

struct StageTiming {
  std::string stage;
  double millis = 0;
};

struct AnalysisReport {
  GluingSpec spec;
  SkeletonGraph skeleton;
  std::vector<BoundaryCurve> curves;
  std::vector<EdgeWord> canonical_words;
  bool canonical_with_flips = true;  // false once the alphabet exceeds kMaxFlipAlphabet
  ComplexInvariants invariants;
  std::vector<int> disk_curves;  // 0-based
  groups::BettiNumbers betti;
  EmbeddabilityVerdict verdict;
  groups::ComplexPresentation raw;
  groups::Presentation simplified;
  groups::AbelianInvariants h1;
  groups::CosetResult cosets;
  std::vector<StageTiming> timings;
};

/// A failure inside analyze(), tagged with the pipeline stage that raised it.
class AnalysisError : public std::runtime_error {
 public:
  AnalysisError(std::string stage, std::optional<ErrorCode> code, const std::string& what);
  const std::string& stage() const { return stage_; }
  std::optional<ErrorCode> code() const { return code_; }

 private:
  std::string stage_;
  std::optional<ErrorCode> code_;
};

/// validate → skeleton → trace → invariants → presentation → simplify →
/// abelianize → cosets. Coset enumeration runs on the simplified presentation.
AnalysisReport analyze(const GluingSpec& spec, const AnalyzeOptions& options = {});

std::string tip_label(const GluingSpec& spec, const GlobalTip& tip);

Json to_json(const AnalysisReport& report);
std::string to_text(const AnalysisReport& report);

Json spec_json(const GluingSpec& spec);
Json coset_json(const groups::CosetResult& result);
Json abelian_json(const groups::AbelianInvariants& h1);

/// Reference counts for the one-vertex census, compared softly.
inline constexpr std::uint64_t kExpectedRawOneVertex = 108;
inline constexpr std::size_t kExpectedClassesOneVertex = 14;
inline constexpr std::size_t kExpectedEmbeddableOneVertex = 4;

struct CensusSelection {
  bool with_reflections = true;
  bool without_reflections = true;
};

/// Both modes by default. For one piece each mode carries a soft comparison
/// against the reference counts; a mismatch sets "mismatch" and the class
/// representatives are always listed.
Json census_json(const CensusResult& census, const CensusSelection& selection = {});

Json cover_json(const CoverSpec& cover, const CoverReport& report);

/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

}  // namespace spine::frontend
