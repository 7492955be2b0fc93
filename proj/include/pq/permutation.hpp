#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace pq {

using Point = std::uint16_t;

/// A bijection of {0, ..., degree-1}. Products compose left to right:
/// (a * b)[i] = b[a[i]], so `a` is applied first.
class Permutation {
 public:
  Permutation() = default;

  /// Throws InvalidArgument unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree);

  /// Builds from disjoint cycles of 0-based points.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator[](std::size_t i) const { return images_[i]; }
  std::span<const Point> images() const { return images_; }

  Permutation operator*(const Permutation& rhs) const;
  Permutation inverse() const;
  bool is_identity() const;

  /// lcm of cycle lengths.
  std::uint64_t order() const;

  /// Cycle notation with 1-based points, e.g. "(1,2)(3,4,5)"; "()" for identity.
  std::string cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<Point> images_;
};

/// Order (lcm of cycle lengths) of the permutation given by raw images.
std::uint64_t permutation_order(std::span<const Point> images);

}  // namespace pq
