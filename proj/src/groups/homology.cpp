#include "spine/groups/homology.hpp"

#include <map>
#include <set>
#include <utility>

#include "spine/error.hpp"
#include "spine/invariants.hpp"

namespace spine::groups {
namespace {

using boost::multiprecision::abs;

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) { std::swap(m[a], m[b]); }

void swap_cols(IntMatrix& m, std::size_t a, std::size_t b) {
  for (auto& row : m) std::swap(row[a], row[b]);
}

// Moves the entry of least nonzero absolute value in the trailing block to (t, t).
bool place_pivot(IntMatrix& m, std::size_t t, std::size_t cols) {
  std::size_t bi = 0, bj = 0;
  bool found = false;
  for (std::size_t i = t; i < m.size(); ++i) {
    for (std::size_t j = t; j < cols; ++j) {
      if (m[i][j] != 0 && (!found || abs(m[i][j]) < abs(m[bi][bj]))) {
        bi = i;
        bj = j;
        found = true;
      }
    }
    if (found && abs(m[bi][bj]) == 1) break;
  }
  if (!found) return false;
  swap_rows(m, t, bi);
  swap_cols(m, t, bj);
  return true;
}

using SparseRow = std::map<std::size_t, BigInt>;

// Repeatedly pivots on a ±1 entry of a sparsest row: row operations clear
// its column, after which the pivot row and column drop out and contribute an
// invariant factor of 1. Returns the number of such pivots and leaves the
// remaining block in `rest`.
std::size_t eliminate_units(const IntMatrix& m, IntMatrix& rest) {
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  std::vector<SparseRow> rows;
  std::vector<std::set<std::size_t>> rows_of_col(cols);
  for (const auto& dense : m) {
    SparseRow r;
    for (std::size_t j = 0; j < cols; ++j)
      if (dense[j] != 0) {
        r.emplace(j, dense[j]);
        rows_of_col[j].insert(rows.size());
      }
    rows.push_back(std::move(r));
  }
  std::vector<bool> alive(rows.size(), true);
  std::vector<bool> col_alive(cols, true);
  std::size_t units = 0;
  while (true) {
    std::size_t best = rows.size();
    std::size_t best_col = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (!alive[i] || (best < rows.size() && rows[i].size() >= rows[best].size())) continue;
      for (const auto& [j, v] : rows[i])
        if (v == 1 || v == -1) {
          best = i;
          best_col = j;
          break;
        }
    }
    if (best == rows.size()) break;
    const SparseRow pivot = rows[best];
    const BigInt sign = pivot.at(best_col);
    const std::vector<std::size_t> targets(rows_of_col[best_col].begin(),
                                           rows_of_col[best_col].end());
    for (std::size_t r : targets) {
      if (r == best) continue;
      const BigInt q = rows[r].at(best_col) * sign;
      for (const auto& [j, v] : pivot) {
        BigInt& x = rows[r][j];
        x -= q * v;
        if (x == 0) {
          rows[r].erase(j);
          rows_of_col[j].erase(r);
        } else {
          rows_of_col[j].insert(r);
        }
      }
    }
    for (const auto& [j, v] : pivot) rows_of_col[j].erase(best);
    alive[best] = false;
    col_alive[best_col] = false;
    ++units;
  }
  std::vector<std::size_t> keep_cols;
  for (std::size_t j = 0; j < cols; ++j)
    if (col_alive[j]) keep_cols.push_back(j);
  rest.clear();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!alive[i] || rows[i].empty()) continue;
    std::vector<BigInt> dense(keep_cols.size());
    for (std::size_t k = 0; k < keep_cols.size(); ++k)
      if (auto it = rows[i].find(keep_cols[k]); it != rows[i].end()) dense[k] = it->second;
    rest.push_back(std::move(dense));
  }
  return units;
}

std::vector<BigInt> dense_smith(IntMatrix m) {
  std::vector<BigInt> diag;
  if (m.empty()) return diag;
  const std::size_t rows = m.size();
  const std::size_t cols = m.front().size();

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    if (!place_pivot(m, t, cols)) break;
    while (true) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        const BigInt q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        const BigInt q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) dirty = true;
      }
      if (dirty) {
        place_pivot(m, t, cols);
        continue;
      }
      // pivot must divide the whole trailing block
      bool fixed = false;
      for (std::size_t i = t + 1; i < rows && !fixed; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
            fixed = true;
            break;
          }
      if (!fixed) break;
    }
    diag.push_back(abs(m[t][t]));
  }
  return diag;
}

}  // namespace

std::vector<BigInt> smith_diagonal(IntMatrix m) {
  IntMatrix rest;
  const std::size_t units = eliminate_units(m, rest);
  std::vector<BigInt> diag(units, BigInt(1));
  for (auto& d : dense_smith(std::move(rest))) diag.push_back(std::move(d));
  return diag;
}

IntMatrix relation_matrix(const Presentation& p) {
  IntMatrix m;
  m.reserve(p.relators.size());
  for (const auto& r : p.relators) {
    std::vector<BigInt> row;
    for (long v : exponent_sums(r, p.generators.size())) row.emplace_back(v);
    m.push_back(std::move(row));
  }
  return m;
}

std::string AbelianInvariants::to_string() const {
  std::string out;
  if (rank > 0) out = rank == 1 ? "Z" : "Z^" + std::to_string(rank);
  for (const auto& t : torsion) out += (out.empty() ? "" : " + ") + std::string("Z/") + t.str();
  return out.empty() ? "0" : out;
}

AbelianInvariants abelianization(const Presentation& p) {
  const auto diag = smith_diagonal(relation_matrix(p));
  AbelianInvariants inv;
  inv.rank = p.generators.size() - diag.size();
  for (const auto& d : diag)
    if (d > 1) inv.torsion.push_back(d);
  return inv;
}

BettiNumbers betti_numbers(const GluingSpec& spec, std::span<const BoundaryCurve> curves,
                           const AbelianInvariants& h1) {
  const auto skeleton = build_skeleton(spec);
  if (!skeleton.connected())
    throw SpineError(ErrorCode::Disconnected,
                     "complex has " + std::to_string(skeleton.components) + " components");
  BettiNumbers b;
  b.b0 = 1;
  b.b1 = static_cast<long>(h1.rank);
  b.b2 = euler_characteristic(spec, curves) - b.b0 + b.b1;
  return b;
}

}  // namespace spine::groups
