// One line per acceptance criterion; exit status is nonzero when any hard
// check fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "halfedge_oracle.hpp"
#include "spine/covers.hpp"
#include "spine/enumerator.hpp"
#include "spine/frontend/builtins.hpp"
#include "spine/frontend/report.hpp"
#include "spine/groups/homology.hpp"
#include "spine/groups/tietze.hpp"
#include "spine/groups/todd_coxeter.hpp"
#include "test_util.hpp"

using namespace spine;
using frontend::analyze;
using frontend::builtin;

namespace {

class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) failed_.push_back(what);
  }
  template <class A, class B>
  void equal(const A& got, const B& want, const std::string& what) {
    if (!(got == want)) {
      std::ostringstream s;
      s << what << ": got " << got << ", expected " << want;
      failed_.push_back(s.str());
    }
  }
  void note(const std::string& n) { notes_.push_back(n); }
  bool ok() const { return failed_.empty(); }
  std::string summary() const {
    std::string out;
    for (const auto& f : failed_) out += (out.empty() ? "" : "; ") + f;
    for (const auto& n : notes_) out += (out.empty() ? "" : "; ") + n;
    return out;
  }

 private:
  std::vector<std::string> failed_;
  std::vector<std::string> notes_;
};

std::vector<EdgeWord> canonical_words(const frontend::AnalysisReport& r) {
  return canonical_word_multiset(words_of(r.curves));
}

std::vector<EdgeWord> expected_words(const GluingSpec& spec, std::vector<std::string> words) {
  const auto names = edge_names(spec);
  return testing::canonical_of(words, names);
}

bool finite_of_order(const groups::CosetResult& c, std::size_t n) {
  return c.finite() && c.order == n;
}

void ac1(Checks& c) {
  const auto spec = builtin("ball-5.1a");
  const auto r = analyze(spec);
  c.equal(r.curves.size(), 2u, "curves");
  c.expect(canonical_words(r) == expected_words(spec, {"a b^-1 a b^2", "a"}), "word multiset");
  c.equal(r.invariants.chi, 1, "chi");
  c.expect(finite_of_order(r.cosets, 1), "Finite(1)");
}

void ac2(Checks& c) {
  const auto r = analyze(builtin("s3-spine-5.1b"));
  c.equal(r.curves.size(), 3u, "curves");
  c.equal(r.invariants.chi, 2, "chi");
  c.expect(finite_of_order(r.cosets, 1), "Finite(1)");
  c.expect(r.verdict.embeddable_orientable, "embeddable");
}

void ac3(Checks& c) {
  const auto r = analyze(builtin("rp2-two-disks-5.1c"));
  c.expect(!r.verdict.embeddable_orientable, "not embeddable");
  c.expect(r.verdict.witness.has_value(), "witness curve");
  c.equal(r.invariants.chi, 2, "chi");
  c.expect(finite_of_order(r.cosets, 1), "Finite(1)");
}

void ac4(Checks& c) {
  const auto even_spec = builtin("rp2-disk-3.3even");
  const auto even = analyze(even_spec);
  c.expect(canonical_words(even) == expected_words(even_spec, {"a", "a a"}), "even words {a, a a}");
  c.expect(!even.verdict.embeddable_orientable, "even variant not embeddable");
  const auto odd_spec = builtin("lens31-3.3odd");
  const auto odd = analyze(odd_spec);
  c.equal(odd.curves.size(), 1u, "odd curves");
  c.expect(canonical_words(odd) == expected_words(odd_spec, {"a^3"}), "odd word a^3");
  c.expect(finite_of_order(odd.cosets, 3), "Finite(3)");
}

void ac5(Checks& c) {
  const auto r = analyze(builtin("bing-house-5.2"));
  c.equal(r.curves.size(), 3u, "curves");
  c.equal(r.invariants.chi, 1, "chi");
  c.expect(finite_of_order(r.cosets, 1), "Finite(1)");
  c.expect(r.verdict.embeddable_orientable, "embeddable");
}

void ac6(Checks& c) {
  const auto spec = builtin("poincare-5.3");
  const auto r = analyze(spec);
  c.equal(r.curves.size(), 6u, "curves");
  c.equal(r.invariants.chi, 1, "chi");
  c.equal(r.h1.rank, 0u, "rank");
  c.expect(r.h1.torsion.empty(), "torsion []");
  const auto start = std::chrono::steady_clock::now();
  const auto t = groups::todd_coxeter(r.raw.presentation, 200000);
  const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
  c.expect(finite_of_order(t, 120), "Finite(120) on the unsimplified presentation");
  c.expect(finite_of_order(r.cosets, 120), "Finite(120) on the simplified presentation");
  c.expect(took.count() < 5.0, "under 5 s");
}

void ac7(Checks& c) {
  const auto spec = builtin("example-5.4");
  const auto r = analyze(spec);
  c.equal(r.curves.size(), 4u, "curves");
  c.expect(canonical_words(r) ==
               expected_words(spec, {"a1 b2 a1 b1^-1", "a1 a2", "a2 b1 a2 b2^-1", "b1 b2"}),
           "words");
  for (const auto& e : r.skeleton.edges) {
    const auto& id = spec.matchings[static_cast<std::size_t>(e.matching)].id;
    c.expect(e.parity == (id[0] == 'a' ? Parity::Even : Parity::Odd), "parity of " + id);
  }
  c.equal(r.invariants.chi, 2, "chi");
  c.expect(finite_of_order(r.cosets, 2), "Finite(2)");
  c.expect(r.verdict.embeddable_orientable, "embeddable");
}

void ac8(Checks& c) {
  const auto spec = builtin("rp3-spine-remark2");
  const auto r = analyze(spec);
  for (const auto& e : r.skeleton.edges) c.expect(e.parity == Parity::Odd, "all edges odd");
  c.equal(r.curves.size(), 4u, "curves");
  c.expect(canonical_words(r) ==
               expected_words(spec, {"a1 b2 a2^-1 b1^-1", "a1 a2", "a1 b1^-1 a2^-1 b2", "b1 b2"}),
           "words");
  c.expect(finite_of_order(r.cosets, 2), "Finite(2)");
}

void ac9(Checks& c) {
  const auto cover = universal_cover(builtin("example-5.4"));
  c.expect(cover.has_value(), "cover built");
  if (!cover) return;
  const auto r = verify_cover(*cover);
  c.equal(r.pieces, 4u, "pieces");
  c.equal(r.matchings, 8u, "matchings");
  c.equal(r.lifted_disks, 8u, "disks");
  c.equal(r.chi, 4, "chi");
  c.expect(finite_of_order(r.cosets, 1), "Finite(1)");
  c.expect(r.verdict.embeddable_orientable, "embeddable");
  c.expect(r.lift_matches_trace, "lifted disk words equal traced words");
}

void ac10(Checks& c) {
  const auto census = spine::census(1);
  c.equal(census.raw_count, 108u, "raw count");
  for (const auto* mode : {&census.with_reflections, &census.without_reflections}) {
    const bool match = mode->classes.size() == frontend::kExpectedClassesOneVertex &&
                       mode->embeddable_classes == frontend::kExpectedEmbeddableOneVertex;
    std::ostringstream s;
    s << "soft " << (mode->reflections ? "with" : "without") << " reflections: "
      << mode->classes.size() << " classes (expected 14), " << mode->embeddable_classes
      << " embeddable (expected 4)" << (match ? "" : " MISMATCH");
    c.note(s.str());
    if (!match) {
      std::ostringstream reps;
      reps << "  representatives " << (mode->reflections ? "with" : "without") << " reflections:";
      for (const auto& cls : mode->classes) {
        reps << " [";
        for (const auto& m : cls.representative.matchings)
          reps << m.left.t_end << '~' << m.right.t_end << m.perm.to_string();
        reps << " chi=" << cls.chi << (cls.embeddable_orientable ? " emb" : "") << ']';
      }
      std::printf("%s\n", reps.str().c_str());
    }
  }
}

void ac11(Checks& c) {
  // tip conservation, word length and chi over all one-vertex and random two-vertex gluings
  auto conservation = [&](const GluingSpec& s) {
    const auto curves = trace_boundary(s);
    std::set<GlobalTip> tips;
    std::size_t letters = 0;
    for (const auto& cv : curves) {
      letters += cv.word.size();
      tips.insert(cv.tips.begin(), cv.tips.end());
    }
    const auto inv = complex_invariants(s, curves);
    return tips.size() == static_cast<std::size_t>(resolve(s).total_tips) &&
           letters == 3 * s.matchings.size() &&
           inv.chi == static_cast<long>(s.pieces.size()) -
                          static_cast<long>(s.matchings.size()) + inv.disk_count;
  };
  std::size_t bad = 0;
  std::size_t oracle_bad = 0;
  for_each_gluing(1, [&](const GluingSpec& s) {
    bad += !conservation(s);
    oracle_bad += canonical_word_multiset(testing::oracle_boundary_words(s)) !=
                  canonical_word_multiset(words_of(trace_boundary(s)));
  });
  std::mt19937_64 rng(1016);
  for (int i = 0; i < 1000; ++i) bad += !conservation(testing::random_gluing(2, rng));
  c.equal(bad, 0u, "conservation/length/chi violations");
  for (const char* name : {"rp2-disk-3.3even", "lens31-3.3odd"}) {
    const auto s = builtin(name);
    oracle_bad += canonical_word_multiset(testing::oracle_boundary_words(s)) !=
                  canonical_word_multiset(words_of(trace_boundary(s)));
  }
  c.equal(oracle_bad, 0u, "oracle disagreements");

  std::size_t tietze_bad = 0;
  std::size_t consistency_bad = 0;
  for (int i = 0; i < 500; ++i) {
    const auto p = testing::random_presentation(rng, 3, 3, 6);
    const auto h = groups::abelianization(p);
    tietze_bad += !(h == groups::abelianization(groups::tietze_simplify(p)));
    const auto t = groups::todd_coxeter(p, 5000);
    if (t.finite()) {
      groups::BigInt product = 1;
      for (const auto& x : h.torsion) product *= x;
      consistency_bad += h.rank != 0 || groups::BigInt(t.order) % product != 0;
    }
  }
  c.equal(tietze_bad, 0u, "Tietze abelianization changes");
  c.equal(consistency_bad, 0u, "torsion not dividing order");

  std::size_t snf_bad = 0;
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int i = 0; i < 300; ++i) {
    groups::IntMatrix m(3, std::vector<groups::BigInt>(4));
    for (auto& row : m)
      for (auto& x : row) x = entry(rng);
    const auto d = groups::smith_diagonal(m);
    for (std::size_t k = 0; k + 1 < d.size(); ++k) snf_bad += d[k + 1] % d[k] != 0;
  }
  c.equal(snf_bad, 0u, "SNF divisibility violations");
}

struct Criterion {
  const char* label;
  void (*run)(Checks&);
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"AC1 one-vertex ball spine", ac1},
      {"AC2 torus with meridian and parallel disks", ac2},
      {"AC3 projective plane with two disks", ac3},
      {"AC4 bar piece, even and odd", ac4},
      {"AC5 Bing's house", ac5},
      {"AC6 Poincare sphere spine", ac6},
      {"AC7 two-vertex Z/2 example", ac7},
      {"AC8 two-vertex RP3 spine", ac8},
      {"AC9 universal cover of the Z/2 example", ac9},
      {"AC10 one-vertex census", ac10},
      {"AC11 property suites", ac11},
  };
  int failures = 0;
  for (const auto& cr : criteria) {
    Checks c;
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    failures += !c.ok();
    std::printf("%s %s%s%s\n", c.ok() ? "PASS" : "FAIL", cr.label,
                c.summary().empty() ? "" : " -- ", c.summary().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failures, std::size(criteria));
  return failures == 0 ? 0 : 1;
}
