#include "spine/frontend/builtins.hpp"

#include <array>
#include <string>

#include "spine/error.hpp"
#include "spine/frontend/parser.hpp"

namespace spine::frontend {
namespace {

constexpr std::string_view kBall51a = R"(# one vertex neighborhood; a standard spine of the 3-ball
piece O vertex
match a: O.1 ~ O.3 (2 1 3)   # (O11 O12 O13) ~ (O32 O31 O33)
match b: O.2 ~ O.4 (1 3 2)   # (O21 O22 O23) ~ (O41 O43 O42)
disks all
)";

constexpr std::string_view kS3Spine51b = R"(# torus with disks on a meridian and a parallel
piece O vertex
match a: O.1 ~ O.3 (2 1 3)   # (O11 O12 O13) ~ (O32 O31 O33)
match b: O.2 ~ O.4 (2 1 3)   # (O21 O22 O23) ~ (O42 O41 O43)
disks all
)";

constexpr std::string_view kRP2TwoDisks51c = R"(# projective plane with disks on two lines; even matchings
piece O vertex
match a: O.1 ~ O.3 (1 2 3)   # (O11 O12 O13) ~ (O31 O32 O33)
match b: O.2 ~ O.4 (1 2 3)   # (O21 O22 O23) ~ (O41 O42 O43)
disks all
)";

constexpr std::string_view kBingHouse52 = R"(# Bing's house with two rooms
piece A vertex
piece B vertex
match a1: A.3 ~ B.2 (1 3 2)   # (A31 A32 A33) ~ (B21 B23 B22)
match a2: A.1 ~ B.4 (3 2 1)   # (A11 A12 A13) ~ (B43 B42 B41)
match b1: A.2 ~ A.4 (2 1 3)   # (A21 A22 A23) ~ (A42 A41 A43)
match c1: B.1 ~ B.3 (2 1 3)   # (B11 B12 B13) ~ (B32 B31 B33)
disks all
)";

constexpr std::string_view kPoincare53 = R"(# classical standard spine of the Poincare sphere
piece O vertex
piece P vertex
piece Q vertex
piece R vertex
piece S vertex
match h: O.1 ~ Q.3 (1 3 2)   # (O11 O12 O13) ~ (Q31 Q33 Q32)
match e: O.2 ~ S.1 (2 1 3)   # (O21 O22 O23) ~ (S12 S11 S13)
match f: O.3 ~ R.3 (1 3 2)   # (O31 O32 O33) ~ (R31 R33 R32)
match a: O.4 ~ P.4 (3 2 1)   # (O41 O42 O43) ~ (P43 P42 P41)
match b: P.1 ~ Q.4 (1 3 2)   # (P11 P12 P13) ~ (Q41 Q43 Q42)
match i: P.2 ~ R.2 (2 1 3)   # (P21 P22 P23) ~ (R22 R21 R23)
match g: P.3 ~ S.4 (1 3 2)   # (P31 P32 P33) ~ (S41 S43 S42)
match c: Q.1 ~ R.1 (1 3 2)   # (Q11 Q12 Q13) ~ (R11 R13 R12)
match k: Q.2 ~ S.2 (1 3 2)   # (Q21 Q22 Q23) ~ (S21 S23 S22)
match d: R.4 ~ S.3 (3 2 1)   # (R41 R42 R43) ~ (S33 S32 S31)
disks all
)";

constexpr std::string_view kExample54 = R"(# pi1 = Z2, contains a Klein bottle; a1, a2 even and b1, b2 odd
piece A vertex
piece B vertex
match a1: A.2 ~ B.4 (1 2 3)   # (A21 A22 A23) ~ (B41 B42 B43)
match a2: A.4 ~ B.2 (1 2 3)   # (A41 A42 A43) ~ (B21 B22 B23)
match b1: A.1 ~ B.1 (2 1 3)   # (A11 A12 A13) ~ (B12 B11 B13)
match b2: A.3 ~ B.3 (2 1 3)   # (A31 A32 A33) ~ (B32 B31 B33)
disks all
)";

constexpr std::string_view kRP3Spine = R"(# torus with two disks; a spine of RP3, all matchings odd
piece A vertex
piece B vertex
match a1: A.1 ~ B.3 (2 1 3)   # (A11 A12 A13) ~ (B32 B31 B33)
match b1: A.2 ~ B.4 (2 1 3)   # (A21 A22 A23) ~ (B42 B41 B43)
match a2: A.3 ~ B.1 (2 1 3)   # (A31 A32 A33) ~ (B12 B11 B13)
match b2: A.4 ~ B.2 (2 1 3)   # (A41 A42 A43) ~ (B22 B21 B23)
disks all
)";

constexpr std::string_view kRP2Disk33Even = R"(# bar piece, even self-matching: RP2 with a disk along a line
piece V bar
match a: V.1 ~ V.2 (1 2 3)   # (O11 O12 O13) ~ (O31 O32 O33)
disks all
)";

constexpr std::string_view kLens31Odd = R"(# bar piece, odd self-matching: standard spine of L(3,1)
piece V bar
match a: V.1 ~ V.2 (1 3 2)   # (O11 O12 O13) ~ (O31 O33 O32)
disks all
)";

constexpr std::array<BuiltinEntry, 9> kCorpus{{
    {"ball-5.1a", "one vertex, spine of the 3-ball", kBall51a},
    {"s3-spine-5.1b", "torus plus meridian and parallel disks", kS3Spine51b},
    {"rp2-two-disks-5.1c", "RP2 plus two disks, not embeddable", kRP2TwoDisks51c},
    {"bing-house-5.2", "Bing's house with two rooms", kBingHouse52},
    {"poincare-5.3", "standard spine of the Poincare sphere", kPoincare53},
    {"example-5.4", "two vertices, pi1 = Z2, Klein bottle", kExample54},
    {"rp3-spine-remark2", "two vertices, spine of RP3", kRP3Spine},
    {"rp2-disk-3.3even", "bar piece with even self-matching", kRP2Disk33Even},
    {"lens31-3.3odd", "bar piece with odd self-matching, L(3,1)", kLens31Odd},
}};

}  // namespace

std::span<const BuiltinEntry> builtin_corpus() { return kCorpus; }

GluingSpec builtin(std::string_view name) {
  for (const auto& e : kCorpus)
    if (e.name == name) return parse_spec_or_throw(e.text);
  throw SpineError(ErrorCode::UnknownBuiltin, "unknown builtin '" + std::string(name) + "'");
}

}  // namespace spine::frontend
