#include "spine/groups/todd_coxeter.hpp"

#include <stdexcept>

namespace spine::groups {

bool CosetTable::is_closed() const {
  for (std::size_t c = 0; c < cosets_; ++c) {
    for (std::size_t g = 0; g < generators_; ++g) {
      const int letter = static_cast<int>(g) + 1;
      const int fwd = act(static_cast<int>(c), letter);
      if (fwd < 0 || static_cast<std::size_t>(fwd) >= cosets_) return false;
      if (act(fwd, -letter) != static_cast<int>(c)) return false;
    }
  }
  return true;
}

namespace {

constexpr int kUndefined = -1;

struct LimitHit {};

class Enumerator {
 public:
  Enumerator(const Presentation& p, std::size_t max_cosets)
      : columns_(2 * p.generators.size()), max_cosets_(max_cosets) {
    for (const auto& r : p.relators) {
      const auto w = free_reduce(r);
      if (w.empty()) continue;
      std::vector<int> cols;
      for (int x : w) cols.push_back(column(x));
      relators_.push_back(std::move(cols));
    }
    new_coset();
  }

  CosetResult run() {
    CosetResult result;
    result.limit = max_cosets_;
    try {
      for (std::size_t c = 0; c < forward_.size(); ++c) {
        for (const auto& r : relators_) {
          if (!alive(c)) break;
          scan_and_fill(static_cast<int>(c), r);
        }
        if (!alive(c)) continue;
        for (std::size_t x = 0; x < columns_; ++x)
          if (entry(static_cast<int>(c), x) == kUndefined) define(static_cast<int>(c), x);
      }
    } catch (const LimitHit&) {
      result.outcome = CosetOutcome::LimitExceeded;
      return result;
    }
    compact(result);
    return result;
  }

 private:
  static std::size_t column(int letter) {
    return 2 * static_cast<std::size_t>(generator_of(letter)) + (letter < 0);
  }
  static std::size_t inverse_column(std::size_t col) { return col ^ 1u; }

  int& entry(int coset, std::size_t col) { return table_[static_cast<std::size_t>(coset) * columns_ + col]; }
  bool alive(std::size_t c) const { return forward_[c] == static_cast<int>(c); }

  int new_coset() {
    if (forward_.size() >= max_cosets_) throw LimitHit{};
    const int id = static_cast<int>(forward_.size());
    forward_.push_back(id);
    table_.resize(table_.size() + columns_, kUndefined);
    return id;
  }

  void define(int coset, std::size_t col) {
    const int d = new_coset();
    entry(coset, col) = d;
    entry(d, inverse_column(col)) = coset;
  }

  void scan_and_fill(int coset, const std::vector<int>& w) {
    std::size_t i = 0;
    std::size_t j = w.size();  // one past the last unscanned letter
    int f = coset;
    int b = coset;
    while (true) {
      while (i < j && entry(f, w[i]) != kUndefined) f = entry(f, w[i++]);
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i && entry(b, inverse_column(w[j - 1])) != kUndefined)
        b = entry(b, inverse_column(w[--j]));
      if (j == i) {
        coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        // deduction closes the relator
        entry(f, w[i]) = b;
        entry(b, inverse_column(w[i])) = f;
        return;
      }
      define(f, w[i]);
    }
  }

  int rep(int c) {
    int r = c;
    while (forward_[r] != r) r = forward_[r];
    while (forward_[c] != r) {
      const int next = forward_[c];
      forward_[c] = r;
      c = next;
    }
    return r;
  }

  void merge(int a, int b, std::vector<int>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    forward_[b] = a;
    queue.push_back(b);
  }

  void coincidence(int a, int b) {
    std::vector<int> queue;
    merge(a, b, queue);
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const int gamma = queue[q];
      for (std::size_t x = 0; x < columns_; ++x) {
        const int delta = entry(gamma, x);
        if (delta == kUndefined) continue;
        entry(delta, inverse_column(x)) = kUndefined;
        const int mu = rep(gamma);
        const int nu = rep(delta);
        if (entry(mu, x) != kUndefined) {
          merge(nu, entry(mu, x), queue);
        } else if (entry(nu, inverse_column(x)) != kUndefined) {
          merge(mu, entry(nu, inverse_column(x)), queue);
        } else {
          entry(mu, x) = nu;
          entry(nu, inverse_column(x)) = mu;
        }
      }
    }
  }

  void compact(CosetResult& result) {
    std::vector<int> renumber(forward_.size(), kUndefined);
    int live = 0;
    for (std::size_t c = 0; c < forward_.size(); ++c)
      if (alive(c)) renumber[c] = live++;
    std::vector<int> action(static_cast<std::size_t>(live) * columns_);
    for (std::size_t c = 0; c < forward_.size(); ++c) {
      if (!alive(c)) continue;
      for (std::size_t x = 0; x < columns_; ++x) {
        const int target = entry(static_cast<int>(c), x);
        if (target == kUndefined) throw std::logic_error("coset table left an undefined entry");
        action[static_cast<std::size_t>(renumber[c]) * columns_ + x] = renumber[rep(target)];
      }
    }
    result.outcome = CosetOutcome::Finite;
    result.order = static_cast<std::size_t>(live);
    result.table.emplace(columns_ / 2, static_cast<std::size_t>(live), std::move(action));
  }

  std::size_t columns_;
  std::size_t max_cosets_;
  std::vector<std::vector<int>> relators_;  // as column indices
  std::vector<int> forward_;                // forward_[c] == c while c is live
  std::vector<int> table_;
};

}  // namespace

CosetResult todd_coxeter(const Presentation& p, std::size_t max_cosets) {
  if (max_cosets == 0) throw std::invalid_argument("max_cosets must be at least 1");
  return Enumerator(p, max_cosets).run();
}

}  // namespace spine::groups
