#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "pq/permutation.hpp"

namespace pq {

using Elem = std::uint32_t;

inline constexpr std::size_t kDefaultElementCap = 2'000'000;

/// The fully enumerated closure of a set of permutations. Elements are indexed
/// in lexicographic order of their image arrays, so index 0 is the identity
/// and index order equals the canonical element order.
class ElementTable {
 public:
  /// Throws CapExceeded when the closure grows past `cap` elements.
  static std::shared_ptr<const ElementTable> enumerate(const std::vector<Permutation>& generators,
                                                       std::size_t cap = kDefaultElementCap);

  std::size_t size() const { return count_; }
  std::size_t degree() const { return degree_; }

  std::span<const Point> images(Elem e) const {
    return {data_.data() + static_cast<std::size_t>(e) * degree_, degree_};
  }
  Permutation permutation(Elem e) const;

  static constexpr Elem identity() { return 0; }

  Elem multiply(Elem a, Elem b) const;
  Elem inverse(Elem a) const { return inverse_[a]; }
  std::uint32_t order(Elem a) const { return order_[a]; }
  Elem power(Elem a, std::uint64_t k) const;
  /// g^-1 x g
  Elem conjugate(Elem x, Elem g) const;
  bool commute(Elem a, Elem b) const;

  std::optional<Elem> find(std::span<const Point> images) const;
  Elem index_of(const Permutation& p) const;

  /// Generators the table was enumerated from, as indices.
  const std::vector<Elem>& generators() const { return generators_; }

 private:
  ElementTable() = default;

  std::uint64_t hash(std::span<const Point> images) const;
  void insert_slot(Elem e);
  std::optional<Elem> lookup(std::span<const Point> images) const;
  void rebuild_hash();

  std::size_t degree_ = 0;
  std::size_t count_ = 0;
  std::vector<Point> data_;
  std::vector<Elem> slots_;
  std::uint64_t mask_ = 0;
  std::vector<Elem> inverse_;
  std::vector<std::uint32_t> order_;
  std::vector<Elem> generators_;
};

}  // namespace pq
