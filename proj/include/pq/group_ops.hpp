#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pq/group.hpp"

namespace pq {

bool is_prime(std::uint64_t n);
/// Largest power of p dividing n.
std::uint64_t p_part(std::uint64_t n, std::uint64_t p);
bool is_power_of(std::uint64_t n, std::uint64_t p);

/// {g in G : g s = s g for all s in S}
Group centralizer(const Group& g, const Group& s);
Group centralizer(const Group& g, Elem s);
/// {g in G : g^-1 S g = S}
Group normalizer(const Group& g, const Group& s);
bool normalizes(Elem g, const Group& s);
bool is_normal(const Group& g, const Group& s);
bool is_self_centralising(const Group& g, const Group& h);
Group intersection(const Group& a, const Group& b);

/// Deterministic Sylow p-subgroup: starts from the first p-element of G and
/// grows inside successive normalizers. Trivial when p does not divide |G|.
Group sylow_subgroup(const Group& g, std::uint64_t p);
/// Intersection of all Sylow p-subgroups.
Group p_core(const Group& g, std::uint64_t p);
/// Subgroup generated by the p-elements (O^{p'}).
Group o_p_prime_residual(const Group& g, std::uint64_t p);
/// Subgroup generated by elements of order p.
Group omega1(const Group& g, std::uint64_t p);

bool is_p_group(const Group& g, std::uint64_t p);
bool is_elementary_abelian(const Group& g, std::uint64_t p);

/// All distinct G-conjugates of S, sorted canonically.
std::vector<Group> conjugates(const Group& g, const Group& s);

struct SubgroupOrbit {
  std::size_t representative;        // index of the least member
  std::vector<std::size_t> members;  // ascending member indices
};

/// Partition of `members` into G-conjugacy orbits. Throws InvariantViolated if
/// conjugation by G does not permute `members`. Orbits are sorted by their
/// representative.
std::vector<SubgroupOrbit> subgroup_conjugacy_orbits(const Group& g, std::span<const Group> members);

/// A family of subgroups of one ambient group with its conjugacy orbits.
struct SubgroupSet {
  std::vector<Group> members;
  std::vector<SubgroupOrbit> orbits;
};

SubgroupSet make_subgroup_set(const Group& g, std::vector<Group> members);

}  // namespace pq
