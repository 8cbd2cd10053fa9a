#pragma once

#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "spine/gluing.hpp"
#include "spine/groups/presentation.hpp"
#include "spine/tracer.hpp"

namespace spine::groups {

using BigInt = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<BigInt>>;

/// Nonzero invariant factors of `m` (all positive, each dividing the next),
/// computed by unimodular row and column operations in exact arithmetic.
std::vector<BigInt> smith_diagonal(IntMatrix m);

/// Relators × generators matrix of exponent sums.
IntMatrix relation_matrix(const Presentation& p);

struct AbelianInvariants {
  std::size_t rank = 0;
  std::vector<BigInt> torsion;  // each > 1, divisibility chain

  bool is_trivial() const { return rank == 0 && torsion.empty(); }
  std::string to_string() const;  // e.g. "Z^2 + Z/2 + Z/6", "0"
  bool operator==(const AbelianInvariants&) const = default;
};

AbelianInvariants abelianization(const Presentation& p);

struct BettiNumbers {
  long b0 = 0;
  long b1 = 0;
  long b2 = 0;

  bool operator==(const BettiNumbers&) const = default;
};

/// b0 = 1, b1 = rank of H1, b2 = χ − 1 + b1. Throws Disconnected.
BettiNumbers betti_numbers(const GluingSpec& spec, std::span<const BoundaryCurve> curves,
                           const AbelianInvariants& h1);

}  // namespace spine::groups
