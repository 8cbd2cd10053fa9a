#include <doctest.h>

#include <algorithm>

#include "spine/error.hpp"
#include "spine/frontend/builtins.hpp"
#include "spine/gluing.hpp"

using namespace spine;

namespace {

std::size_t count_kind(const std::vector<ValidationIssue>& issues, IssueKind kind) {
  return static_cast<std::size_t>(
      std::count_if(issues.begin(), issues.end(), [&](const auto& i) { return i.kind == kind; }));
}

GluingSpec one_vertex() {
  GluingSpec s;
  s.pieces.push_back({"O", PieceKind::Vertex});
  return s;
}

}  // namespace

TEST_CASE("matching parity") {
  CHECK(matching_parity(Perm3{1, 2, 3}) == Parity::Even);
  CHECK(matching_parity(Perm3{2, 1, 3}) == Parity::Odd);
  CHECK(matching_parity(Perm3{3, 1, 2}) == Parity::Even);
  CHECK(matching_parity(Perm3{2, 3, 1}) == Parity::Even);
  CHECK(matching_parity(Perm3{1, 3, 2}) == Parity::Odd);
  CHECK(matching_parity(Perm3{3, 2, 1}) == Parity::Odd);
}

TEST_CASE("parity is a homomorphism to Z/2") {
  for (const auto& a : Perm3::all()) {
    for (const auto& b : Perm3::all()) {
      const bool same = matching_parity(a) == matching_parity(b);
      CHECK((matching_parity(a.after(b)) == Parity::Even) == same);
    }
    CHECK(matching_parity(a.inverse()) == matching_parity(a));
    CHECK(a.after(a.inverse()) == Perm3::identity());
  }
}

TEST_CASE("builtin corpus validates") {
  for (const auto& e : frontend::builtin_corpus()) {
    INFO(e.name);
    CHECK(validate(frontend::builtin(e.name)).empty());
  }
}

TEST_CASE("unmatched T-ends") {
  auto s = one_vertex();
  CHECK(count_kind(validate(s), IssueKind::UnmatchedTEnd) == 4);
  s.matchings.push_back({"a", {"O", 1}, {"O", 3}, Perm3{2, 1, 3}});
  const auto issues = validate(s);
  CHECK(count_kind(issues, IssueKind::UnmatchedTEnd) == 2);
  CHECK(issues.size() == 2);
  CHECK_THROWS_AS(require_valid(s), SpineError);
}

TEST_CASE("self-matched and doubly matched T-ends") {
  auto s = one_vertex();
  s.matchings.push_back({"a", {"O", 1}, {"O", 1}, Perm3{}});
  CHECK(count_kind(validate(s), IssueKind::SelfMatchedTEnd) == 1);

  auto d = one_vertex();
  d.matchings.push_back({"a", {"O", 1}, {"O", 3}, Perm3{}});
  d.matchings.push_back({"b", {"O", 1}, {"O", 2}, Perm3{}});
  d.matchings.push_back({"c", {"O", 4}, {"O", 3}, Perm3{}});
  const auto issues = validate(d);
  CHECK(count_kind(issues, IssueKind::DoublyMatchedTEnd) == 2);  // O.1 and O.3
}

TEST_CASE("names, T-end range, permutations") {
  GluingSpec s;
  s.pieces.push_back({"A", PieceKind::Bar});
  s.pieces.push_back({"A", PieceKind::Bar});
  s.matchings.push_back({"x", {"A", 3}, {"Z", 1}, Perm3{1, 1, 2}});
  s.matchings.push_back({"x", {"A", 1}, {"A", 2}, Perm3{}});
  const auto issues = validate(s);
  CHECK(count_kind(issues, IssueKind::DuplicateName) == 2);
  CHECK(count_kind(issues, IssueKind::InvalidTEnd) == 1);
  CHECK(count_kind(issues, IssueKind::UnknownPiece) == 1);
  CHECK(count_kind(issues, IssueKind::InvalidPerm) == 1);
  for (const auto& i : issues) CHECK_FALSE(i.subject.empty());
}

TEST_CASE("skeleton of one vertex with two loops") {
  const auto sk = build_skeleton(frontend::builtin("ball-5.1a"));
  CHECK(sk.nodes.size() == 1);
  CHECK(sk.edges.size() == 2);
  CHECK(sk.connected());
  for (const auto& e : sk.edges) CHECK(e.from == e.to);
  CHECK(sk.degrees() == std::vector<int>{4});
}

TEST_CASE("skeleton of the five-vertex spine") {
  const auto sk = build_skeleton(frontend::builtin("poincare-5.3"));
  CHECK(sk.nodes.size() == 5);
  CHECK(sk.edges.size() == 10);
  CHECK(sk.connected());
  CHECK(sk.degrees() == std::vector<int>{4, 4, 4, 4, 4});
}

TEST_CASE("edge parities of the Z/2 example") {
  const auto spec = frontend::builtin("example-5.4");
  const auto sk = build_skeleton(spec);
  REQUIRE(sk.edges.size() == 4);
  for (const auto& e : sk.edges) {
    const auto& id = spec.matchings[static_cast<std::size_t>(e.matching)].id;
    CHECK(e.parity == (id[0] == 'a' ? Parity::Even : Parity::Odd));
  }
}

TEST_CASE("disconnected skeleton") {
  GluingSpec s;
  s.pieces = {{"A", PieceKind::Bar}, {"B", PieceKind::Bar}};
  s.matchings = {{"a", {"A", 1}, {"A", 2}, Perm3{}}, {"b", {"B", 1}, {"B", 2}, Perm3{}}};
  CHECK(validate(s).empty());
  const auto sk = build_skeleton(s);
  CHECK(sk.components == 2);
  CHECK(sk.component_of[0] != sk.component_of[1]);
}

TEST_CASE("resolve assigns dense tip ids") {
  const auto rs = resolve(frontend::builtin("bing-house-5.2"));
  CHECK(rs.total_tips == 24);
  CHECK(rs.tip_offset == std::vector<int>{0, 12});
  CHECK(rs.matchings.size() == 4);
}
