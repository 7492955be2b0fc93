#pragma once

#include <cstdint>

#include "pq/group_ops.hpp"
#include "pq/poset.hpp"

namespace pq {

inline constexpr std::size_t kDefaultPosetCap = 200'000;

/// A_p(G): nontrivial elementary abelian p-subgroups, with the conjugation
/// action of G attached. Throws CapExceeded past `cap` elements.
Poset quillen_poset(const Group& g, std::uint64_t p, std::size_t cap = kDefaultPosetCap);
/// S_p(G): all nontrivial p-subgroups.
Poset all_p_subgroups_poset(const Group& g, std::uint64_t p, std::size_t cap = kDefaultPosetCap);
/// B_p(G): nontrivial radical p-subgroups, O_p(N_G(R)) = R.
Poset bouc_poset(const Group& g, std::uint64_t p, std::size_t cap = kDefaultPosetCap);

bool is_radical(const Group& g, const Group& r, std::uint64_t p);

/// All subgroups of a p-group, trivial one included, in canonical order.
std::vector<Group> subgroups_of_p_group(const Group& s, std::uint64_t p, std::size_t cap = kDefaultPosetCap);

struct FSets {
  SubgroupSet f;        // E in A_p(G) with E meet H = 1
  SubgroupSet f_prime;  // members with O_p(C_H(E)) = 1
};

/// Requires H normal in G (throws InvalidArgument otherwise).
FSets f_sets(const Group& g, const Group& h, std::uint64_t p, std::size_t cap = kDefaultPosetCap);

/// B_p(H) together with F_K(H): indices [0, b_count) are the radical part,
/// the rest the F part. E < R iff C_R(E) != 1. Carries the conjugation action of K.
struct MixedPoset {
  Poset poset;
  std::size_t b_count = 0;
};

MixedPoset mixed_poset(const Group& h, const Group& k, std::uint64_t p, std::size_t cap = kDefaultPosetCap);

/// Elements of a subgroup poset normalized by every element of `q`.
Poset fixed_point_subposet(const Poset& x, const Group& q);

}  // namespace pq
