#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "pq/element_table.hpp"

namespace pq {

/// Dense bitset over the elements of one ElementTable.
class ElemSet {
 public:
  explicit ElemSet(std::size_t n) : words_((n + 63) / 64, 0) {}
  bool test(Elem e) const { return (words_[e >> 6] >> (e & 63)) & 1u; }
  void set(Elem e) { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }

 private:
  std::vector<std::uint64_t> words_;
};

/// A subgroup of an enumerated ambient group, stored as its sorted element
/// indices. Equality and ordering are element-set equality and lexicographic
/// order, which is the canonical order used throughout.
class Group {
 public:
  Group() = default;

  static Group whole(std::shared_ptr<const ElementTable> table);
  static Group trivial(std::shared_ptr<const ElementTable> table);
  static Group generated(std::shared_ptr<const ElementTable> table, std::vector<Elem> gens);
  /// `elements` must be closed under multiplication; a small generating set
  /// is computed greedily.
  static Group from_elements(std::shared_ptr<const ElementTable> table, std::vector<Elem> elements);
  /// Unchecked: caller guarantees `elements` (sorted) is the group generated by `gens`.
  static Group from_parts(std::shared_ptr<const ElementTable> table, std::vector<Elem> elements,
                          std::vector<Elem> gens);

  const ElementTable& table() const { return *table_; }
  const std::shared_ptr<const ElementTable>& table_ptr() const { return table_; }

  std::span<const Elem> elements() const { return elements_; }
  const std::vector<Elem>& generators() const { return generators_; }
  std::size_t order() const { return elements_.size(); }
  bool is_trivial() const { return elements_.size() <= 1; }

  bool contains(Elem e) const;
  bool contains(const Group& other) const;

  /// <this, x>
  Group join(Elem x) const;
  /// g^-1 H g
  Group conjugate(Elem g) const;

  std::string describe() const;

  friend bool operator==(const Group& a, const Group& b) { return a.elements_ == b.elements_; }
  friend std::strong_ordering operator<=>(const Group& a, const Group& b) {
    return a.elements_ <=> b.elements_;
  }

 private:
  std::shared_ptr<const ElementTable> table_;
  std::vector<Elem> elements_;
  std::vector<Elem> generators_;
};

struct ElementVectorHash {
  std::size_t operator()(const std::vector<Elem>& v) const noexcept;
};

}  // namespace pq
