#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>

namespace spine {

/// A bijection of the prong labels {1,2,3}. `image[k-1]` is the image of k.
class Perm3 {
 public:
  constexpr Perm3() : image_{1, 2, 3} {}
  constexpr Perm3(int a, int b, int c)
      : image_{static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b),
               static_cast<std::uint8_t>(c)} {}

  static constexpr Perm3 identity() { return {}; }

  /// All six permutations, in lexicographic order of their image lists.
  static constexpr std::array<Perm3, 6> all() {
    return {Perm3{1, 2, 3}, Perm3{1, 3, 2}, Perm3{2, 1, 3},
            Perm3{2, 3, 1}, Perm3{3, 1, 2}, Perm3{3, 2, 1}};
  }

  /// Rebuilds a permutation from its position in all().
  static constexpr Perm3 from_index(int i) { return all()[i]; }

  constexpr int operator()(int k) const { return image_[k - 1]; }

  constexpr Perm3 inverse() const {
    Perm3 out;
    for (int k = 1; k <= 3; ++k) out.image_[image_[k - 1] - 1] = static_cast<std::uint8_t>(k);
    return out;
  }

  /// (this ∘ other)(k) = this(other(k)).
  constexpr Perm3 after(const Perm3& other) const {
    return {(*this)(other(1)), (*this)(other(2)), (*this)(other(3))};
  }

  constexpr bool is_even() const {
    int inversions = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j)
        if (image_[i] > image_[j]) ++inversions;
    return inversions % 2 == 0;
  }

  constexpr bool is_valid() const {
    unsigned seen = 0;
    for (auto v : image_) {
      if (v < 1 || v > 3) return false;
      seen |= 1u << v;
    }
    return seen == 0b1110;
  }

  constexpr int index() const {
    auto perms = all();
    for (int i = 0; i < 6; ++i)
      if (perms[i] == *this) return i;
    return -1;
  }

  /// "(p q r)" in the matching notation.
  std::string to_string() const {
    return "(" + std::to_string(image_[0]) + " " + std::to_string(image_[1]) + " " +
           std::to_string(image_[2]) + ")";
  }

  constexpr auto operator<=>(const Perm3&) const = default;

 private:
  std::array<std::uint8_t, 3> image_;
};

}  // namespace spine
