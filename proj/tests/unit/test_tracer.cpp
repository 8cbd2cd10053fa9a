#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "halfedge_oracle.hpp"
#include "spine/enumerator.hpp"
#include "spine/error.hpp"
#include "spine/frontend/builtins.hpp"
#include "spine/tracer.hpp"
#include "test_util.hpp"

using namespace spine;
using spine::testing::canonical_of;
using spine::testing::parse_word;

namespace {

std::vector<EdgeWord> traced_canonical(const GluingSpec& spec) {
  return canonical_word_multiset(words_of(trace_boundary(spec)));
}

void check_words(const char* builtin, std::vector<std::string> expected) {
  const auto spec = frontend::builtin(builtin);
  const auto names = edge_names(spec);
  CHECK(traced_canonical(spec) == canonical_of(expected, names));
}

void check_conservation(const GluingSpec& spec) {
  const auto rs = resolve(spec);
  const auto curves = trace_boundary(spec);
  std::set<GlobalTip> seen;
  std::size_t letters = 0;
  for (const auto& c : curves) {
    CHECK(c.tips.size() == 2 * c.word.size());
    letters += c.word.size();
    for (const auto& t : c.tips) CHECK(seen.insert(t).second);
  }
  CHECK(seen.size() == static_cast<std::size_t>(rs.total_tips));
  CHECK(letters == 3 * spec.matchings.size());
}

bool oracle_agrees(const GluingSpec& spec) {
  return canonical_word_multiset(spine::testing::oracle_boundary_words(spec)) ==
         traced_canonical(spec);
}

// Edge sequence up to rotation and reversal, ignoring exponents.
std::vector<int> blind(const EdgeWord& w) {
  std::vector<int> e;
  for (const auto& l : w) e.push_back(l.edge);
  std::vector<int> best = e;
  for (int rev = 0; rev < 2; ++rev) {
    for (std::size_t r = 0; r < e.size(); ++r) {
      std::rotate(e.begin(), e.begin() + 1, e.end());
      best = std::min(best, e);
    }
    std::reverse(e.begin(), e.end());
  }
  return best;
}

}  // namespace

TEST_CASE("one vertex, simply connected ball spine") {
  const auto spec = frontend::builtin("ball-5.1a");
  const auto curves = trace_boundary(spec);
  CHECK(curves.size() == 2);
  check_words("ball-5.1a", {"a b^-1 a b^2", "a"});
}

TEST_CASE("bar with even and odd self-matching") {
  check_words("rp2-disk-3.3even", {"a", "a a"});
  const auto odd = frontend::builtin("lens31-3.3odd");
  const auto curves = trace_boundary(odd);
  REQUIRE(curves.size() == 1);
  CHECK(curves[0].word.size() == 3);
  check_words("lens31-3.3odd", {"a^3"});
}

TEST_CASE("two-vertex examples") {
  check_words("example-5.4", {"a1 b2 a1 b1^-1", "a1 a2", "a2 b1 a2 b2^-1", "b1 b2"});
  check_words("rp3-spine-remark2", {"a1 b2 a2^-1 b1^-1", "a1 a2", "a1 b1^-1 a2^-1 b2", "b1 b2"});
  check_words("bing-house-5.2", {"a1 c1 a1^-1 b1^-1 a1 a2 b1 a2^-1 c1^-1 a2", "b1", "c1"});
}

TEST_CASE("five-vertex spine: letters agree up to exponents") {
  const auto spec = frontend::builtin("poincare-5.3");
  const auto names = edge_names(spec);
  const std::vector<std::string> expected = {"a b c d e",       "b k e f^-1 i^-1",
                                             "a i d k^-1 h^-1", "c i^-1 g^-1 e h",
                                             "b h^-1 f^-1 d g", "a g^-1 k^-1 c^-1 f"};
  std::multiset<std::vector<int>> want;
  std::multiset<std::vector<int>> got;
  for (const auto& w : expected) want.insert(blind(parse_word(w, names)));
  for (const auto& c : trace_boundary(spec)) got.insert(blind(c.word));
  CHECK(got == want);
}

TEST_CASE("canonical forms") {
  const std::vector<std::string> names = {"a", "b"};
  CHECK(canonical_of(std::vector<std::string>{"b b a^-1 b^-1 a^-1", "a^-1"}, names) ==
        canonical_of(std::vector<std::string>{"a b^-1 a b b", "a"}, names));
  CHECK(canonical_word(parse_word("a", names)) == canonical_word(parse_word("a^-1", names)));
  CHECK(canonical_word_multiset(std::vector<EdgeWord>{}).empty());
  CHECK(cyclic_canonical(parse_word("b a", names)) == cyclic_canonical(parse_word("a b", names)));
  CHECK(cyclic_canonical(parse_word("a b", names)) != cyclic_canonical(parse_word("a b^-1", names)));
  CHECK(canonical_word(parse_word("a b", names)) == canonical_word(parse_word("a b^-1", names)));
}

TEST_CASE("flip equivalence agrees with a brute-force search") {
  // Search all flips of {a,b}, per-word inversions and rotations.
  const std::vector<std::string> names = {"a", "b"};
  const std::vector<EdgeWord> lhs = {parse_word("b b a^-1 b^-1 a^-1", names),
                                     parse_word("a^-1", names)};
  const std::vector<EdgeWord> rhs = {parse_word("a b^-1 a b b", names), parse_word("a", names)};
  auto variants = [](EdgeWord w) {
    std::set<EdgeWord> out;
    for (int inv = 0; inv < 2; ++inv) {
      for (std::size_t r = 0; r < w.size(); ++r) {
        std::rotate(w.begin(), w.begin() + 1, w.end());
        out.insert(w);
      }
      w = inverse(w);
    }
    return out;
  };
  bool found = false;
  for (int flips = 0; flips < 4; ++flips) {
    std::vector<EdgeWord> f = lhs;
    for (auto& w : f)
      for (auto& l : w)
        if (flips >> l.edge & 1) l.exponent = -l.exponent;
    const bool match0 = variants(f[0]).count(rhs[0]) && variants(f[1]).count(rhs[1]);
    const bool match1 = variants(f[0]).count(rhs[1]) && variants(f[1]).count(rhs[0]);
    found = found || match0 || match1;
  }
  CHECK(found);
}

TEST_CASE("alphabet limit") {
  EdgeWord w;
  for (int e = 0; e <= kMaxFlipAlphabet; ++e) w.push_back({e, 1});
  CHECK_THROWS_AS(canonical_word(w), SpineError);
  w.pop_back();
  CHECK_NOTHROW(canonical_word(w));
}

TEST_CASE("formatting") {
  const std::vector<std::string> names = {"a", "b"};
  CHECK(format_word(parse_word("a b^-1 a b^2", names), names) == "a b^-1 a b b");
}

TEST_CASE("tracing is deterministic") {
  for (const auto& e : frontend::builtin_corpus()) {
    const auto spec = frontend::builtin(e.name);
    const auto a = trace_boundary(spec);
    const auto b = trace_boundary(spec);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].tips == b[i].tips);
      CHECK(a[i].word == b[i].word);
    }
    CHECK(words_of(a) == trace_words(resolve(spec)));
  }
}

TEST_CASE("curves start at their least tip, in increasing order") {
  const auto curves = trace_boundary(frontend::builtin("poincare-5.3"));
  for (std::size_t i = 0; i < curves.size(); ++i) {
    CHECK(curves[i].tips.front() == *std::min_element(curves[i].tips.begin(), curves[i].tips.end()));
    if (i > 0) CHECK(curves[i - 1].tips.front() < curves[i].tips.front());
  }
}

TEST_CASE("tip conservation and word length over all one-vertex gluings") {
  for_each_gluing(1, [](const GluingSpec& s) { check_conservation(s); });
}

TEST_CASE("tip conservation and word length over random two-vertex gluings") {
  std::mt19937_64 rng(20261016);
  for (int i = 0; i < 1000; ++i) check_conservation(spine::testing::random_gluing(2, rng));
}

TEST_CASE("tracer agrees with the polygonal oracle") {
  std::size_t n = 0;
  for_each_gluing(1, [&](const GluingSpec& s) {
    CHECK(oracle_agrees(s));
    ++n;
  });
  CHECK(n == 108);
  for (const auto& e : frontend::builtin_corpus()) {
    INFO(e.name);
    CHECK(oracle_agrees(frontend::builtin(e.name)));
  }
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) CHECK(oracle_agrees(spine::testing::random_gluing(2, rng)));
}
