#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pq/group.hpp"

namespace pq {

using Index = std::uint32_t;

/// A group acting on the element indices of a poset, given by the images of
/// its generators.
struct PosetAction {
  std::uint64_t group_order = 1;
  std::vector<std::vector<Index>> generators;
};

/// A finite poset stored as the full strict order: for every element its
/// sorted strict up-set and down-set.
class Poset {
 public:
  Poset() = default;

  /// `up[i]` lists every j with i < j. Throws InvariantViolated unless the
  /// relation is irreflexive and transitive.
  static Poset from_up_sets(std::vector<std::vector<Index>> up, std::vector<std::string> labels = {});
  /// Inclusion order on distinct subgroups (sorted canonically first).
  static Poset of_subgroups(std::vector<Group> members);
  /// Subgroup-labelled poset with an explicit order (validated as above).
  static Poset of_subgroups(std::vector<Group> members, std::vector<std::vector<Index>> up);

  std::size_t size() const { return up_.size(); }
  bool empty() const { return up_.empty(); }
  bool less(Index a, Index b) const;
  std::span<const Index> up(Index i) const { return up_[i]; }
  std::span<const Index> down(Index i) const { return down_[i]; }
  std::size_t relation_size() const;
  std::string label(Index i) const;

  /// Subgroup labels; empty for abstract posets.
  std::span<const Group> subgroups() const { return subgroups_; }
  const std::optional<PosetAction>& action() const { return action_; }

  /// Throws InvariantViolated if some generator does not preserve the order.
  Poset with_action(PosetAction action) const;
  /// Conjugation action of `g` on a subgroup poset; the subgroups must be
  /// permuted by `g`.
  Poset with_conjugation_action(const Group& g) const;

  /// Induced subposet on `keep` (ascending); drops any action.
  Poset induced(std::span<const Index> keep) const;
  /// Elements in an order compatible with <.
  std::vector<Index> linear_extension() const;
  /// Length (number of elements) of the longest chain; 0 for the empty poset.
  std::size_t height() const;

 private:
  std::vector<std::vector<Index>> up_, down_;
  std::vector<std::string> labels_;
  std::vector<Group> subgroups_;
  std::optional<PosetAction> action_;
};

/// Reduced Euler characteristic of the order complex via the Möbius function
/// of the poset with a bottom adjoined. Empty poset gives -1.
std::int64_t euler_mobius(const Poset& x);

/// -1 - sum over orbits of [G:Stab] * chi~(X_{<x}); requires an action.
/// The down-set characteristics are computed from chain counts.
std::int64_t euler_orbit_formula(const Poset& x);

/// counts[k] = number of chains with k+1 elements (k-simplices of the order complex).
std::vector<std::uint64_t> chain_counts(const Poset& x);
std::int64_t euler_from_chains(const Poset& x);

/// Iteratively removes up and down beat points, scanning in index order until
/// a full pass removes nothing.
Poset core_reduce(const Poset& x);

}  // namespace pq
