#include <doctest.h>

#include "spine/covers.hpp"
#include "spine/error.hpp"
#include "spine/frontend/builtins.hpp"
#include "spine/groups/presentation.hpp"

using namespace spine;

namespace {

groups::CosetTable base_table(const GluingSpec& spec) {
  const auto p = groups::presentation_from_complex(spec, trace_boundary(spec)).presentation;
  auto r = groups::todd_coxeter(p);
  REQUIRE(r.finite());
  return *r.table;
}

}  // namespace

TEST_CASE("double cover of the Z/2 example") {
  const auto base = frontend::builtin("example-5.4");
  const auto cover = build_cover(base, base_table(base));
  CHECK(cover.index == 2);
  CHECK(cover.spec.pieces.size() == 4);
  CHECK(cover.spec.matchings.size() == 8);
  CHECK(cover.lifted_disk_words.size() == 8);
  CHECK(validate(cover.spec).empty());
  CHECK(cover.spec.pieces[0].name == "A#1");
  CHECK(cover.spec.matchings[0].id == "a1#1");

  const auto report = verify_cover(cover);
  CHECK(report.pieces == 4);
  CHECK(report.matchings == 8);
  CHECK(report.lifted_disks == 8);
  CHECK(report.traced_curves == 8);
  CHECK(report.chi == 4);
  CHECK(report.chi == 2 * 2);
  CHECK(report.simply_connected());
  CHECK(report.verdict.embeddable_orientable);
  CHECK(report.lift_matches_trace);
}

TEST_CASE("degree-one cover is the base") {
  const auto base = frontend::builtin("bing-house-5.2");
  const auto t = base_table(base);
  CHECK(t.coset_count() == 1);
  const auto cover = build_cover(base, t);
  CHECK(cover.index == 1);
  CHECK(cover.spec.pieces.size() == base.pieces.size());
  CHECK(cover.spec.matchings.size() == base.matchings.size());
  for (std::size_t i = 0; i < base.matchings.size(); ++i) {
    CHECK(cover.spec.matchings[i].id == base.matchings[i].id + "#1");
    CHECK(cover.spec.matchings[i].perm == base.matchings[i].perm);
  }
  CHECK(verify_cover(cover).lift_matches_trace);
}

TEST_CASE("universal cover of the lens space spine") {
  const auto cover = universal_cover(frontend::builtin("lens31-3.3odd"));
  REQUIRE(cover);
  CHECK(cover->index == 3);
  const auto r = verify_cover(*cover);
  CHECK(r.pieces == 3);
  CHECK(r.matchings == 3);
  CHECK(r.lifted_disks == 3);
  CHECK(r.chi == 3);
  CHECK(r.simply_connected());
  CHECK(r.lift_matches_trace);
}

TEST_CASE("universal cover of RP3 spine") {
  const auto cover = universal_cover(frontend::builtin("rp3-spine-remark2"));
  REQUIRE(cover);
  const auto r = verify_cover(*cover);
  CHECK(cover->index == 2);
  CHECK(r.chi == 4);
  CHECK(r.simply_connected());
  CHECK(r.lift_matches_trace);
}

TEST_CASE("universal cover of the five-vertex spine") {
  const auto cover = universal_cover(frontend::builtin("poincare-5.3"));
  REQUIRE(cover);
  CHECK(cover->index == 120);
  const auto r = verify_cover(*cover);
  CHECK(r.pieces == 600);
  CHECK(r.matchings == 1200);
  CHECK(r.lifted_disks == 720);
  CHECK(r.traced_curves == 720);
  CHECK(r.chi == 120);
  CHECK(r.simply_connected());
  CHECK(r.h1.is_trivial());
  CHECK(r.lift_matches_trace);
}

TEST_CASE("infinite or unfinished enumeration gives no cover") {
  GluingSpec s;
  s.pieces = {{"V", PieceKind::Bar}};
  s.matchings = {{"a", {"V", 1}, {"V", 2}, Perm3{1, 3, 2}}};
  s.disks = DiskPolicy::explicit_curves({});
  CHECK_FALSE(universal_cover(s, 100));
}

TEST_CASE("explicit disk policy lifts through the projection") {
  auto base = frontend::builtin("example-5.4");
  base.disks = DiskPolicy::explicit_curves({1, 2, 3, 4});
  const auto cover = universal_cover(base);
  REQUIRE(cover);
  CHECK(verify_cover(*cover).lift_matches_trace);
}

TEST_CASE("open tables are rejected") {
  const auto base = frontend::builtin("example-5.4");
  groups::CosetTable broken(4, 2, std::vector<int>(16, -1));
  CHECK_THROWS_AS(build_cover(base, broken), SpineError);
}
