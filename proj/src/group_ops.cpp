#include "pq/group_ops.hpp"

#include <algorithm>
#include <unordered_map>

#include "pq/error.hpp"

namespace pq {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n > 0 && n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

bool is_power_of(std::uint64_t n, std::uint64_t p) { return n > 0 && p_part(n, p) == n; }

namespace {

void check_lagrange(const Group& parent, const Group& sub, const char* what) {
  ensure(parent.order() % sub.order() == 0, std::string("Lagrange violated in ") + what);
}

}  // namespace

Group centralizer(const Group& g, const Group& s) {
  const auto& t = g.table();
  std::vector<Elem> out;
  for (Elem x : g.elements()) {
    bool ok = true;
    for (Elem y : s.generators()) {
      if (!t.commute(x, y)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(x);
  }
  Group c = Group::from_elements(g.table_ptr(), std::move(out));
  check_lagrange(g, c, "centralizer");
  return c;
}

Group centralizer(const Group& g, Elem s) {
  return centralizer(g, Group::generated(g.table_ptr(), {s}));
}

bool normalizes(Elem x, const Group& s) {
  const auto& t = s.table();
  for (Elem y : s.generators()) {
    if (!s.contains(t.conjugate(y, x))) return false;
  }
  return true;
}

Group normalizer(const Group& g, const Group& s) {
  std::vector<Elem> out;
  for (Elem x : g.elements()) {
    if (normalizes(x, s)) out.push_back(x);
  }
  Group n = Group::from_elements(g.table_ptr(), std::move(out));
  check_lagrange(g, n, "normalizer");
  return n;
}

bool is_normal(const Group& g, const Group& s) {
  for (Elem x : g.generators()) {
    if (!normalizes(x, s)) return false;
  }
  return true;
}

bool is_self_centralising(const Group& g, const Group& h) {
  const auto& t = g.table();
  for (Elem x : g.elements()) {
    if (h.contains(x)) continue;
    bool central = true;
    for (Elem y : h.generators()) {
      if (!t.commute(x, y)) {
        central = false;
        break;
      }
    }
    if (central) return false;
  }
  return true;
}

Group intersection(const Group& a, const Group& b) {
  std::vector<Elem> out;
  std::set_intersection(a.elements().begin(), a.elements().end(), b.elements().begin(),
                        b.elements().end(), std::back_inserter(out));
  return Group::from_elements(a.table_ptr(), std::move(out));
}

bool is_p_group(const Group& g, std::uint64_t p) { return is_power_of(g.order(), p); }

bool is_elementary_abelian(const Group& g, std::uint64_t p) {
  const auto& t = g.table();
  for (Elem x : g.elements()) {
    if (x != ElementTable::identity() && t.order(x) != p) return false;
  }
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!t.commute(gens[i], gens[j])) return false;
    }
  }
  return true;
}

Group sylow_subgroup(const Group& g, std::uint64_t p) {
  const std::uint64_t target = p_part(g.order(), p);
  const auto& t = g.table();
  Group s = Group::trivial(g.table_ptr());
  if (target == 1) return s;
  for (Elem x : g.elements()) {
    if (x != ElementTable::identity() && is_power_of(t.order(x), p)) {
      s = s.join(x);
      break;
    }
  }
  while (s.order() < target) {
    Group n = normalizer(g, s);
    bool grown = false;
    for (Elem y : n.elements()) {
      if (s.contains(y)) continue;
      if (s.contains(t.power(y, p))) {
        s = s.join(y);
        grown = true;
        break;
      }
    }
    ensure(grown, "Sylow growth stalled");
  }
  ensure(s.order() == target, "Sylow subgroup has wrong order");
  return s;
}

std::vector<Group> conjugates(const Group& g, const Group& s) {
  std::unordered_map<std::vector<Elem>, std::size_t, ElementVectorHash> seen;
  std::vector<Group> orbit{s};
  seen.emplace(std::vector<Elem>(s.elements().begin(), s.elements().end()), 0);
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    for (Elem x : g.generators()) {
      Group c = orbit[head].conjugate(x);
      std::vector<Elem> key(c.elements().begin(), c.elements().end());
      if (seen.emplace(std::move(key), orbit.size()).second) orbit.push_back(std::move(c));
    }
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

Group p_core(const Group& g, std::uint64_t p) {
  Group s = sylow_subgroup(g, p);
  if (s.is_trivial()) return s;
  std::vector<Elem> core(s.elements().begin(), s.elements().end());
  for (const Group& c : conjugates(g, s)) {
    std::vector<Elem> next;
    std::set_intersection(core.begin(), core.end(), c.elements().begin(), c.elements().end(),
                          std::back_inserter(next));
    core = std::move(next);
    if (core.size() == 1) break;
  }
  Group o = Group::from_elements(g.table_ptr(), std::move(core));
  check_lagrange(g, o, "p_core");
  return o;
}

Group o_p_prime_residual(const Group& g, std::uint64_t p) {
  const auto& t = g.table();
  Group s = Group::trivial(g.table_ptr());
  for (Elem x : g.elements()) {
    if (x != ElementTable::identity() && is_power_of(t.order(x), p) && !s.contains(x)) s = s.join(x);
  }
  check_lagrange(g, s, "o_p_prime_residual");
  return s;
}

Group omega1(const Group& g, std::uint64_t p) {
  const auto& t = g.table();
  Group s = Group::trivial(g.table_ptr());
  for (Elem x : g.elements()) {
    if (t.order(x) == p && !s.contains(x)) s = s.join(x);
  }
  check_lagrange(g, s, "omega1");
  return s;
}

std::vector<SubgroupOrbit> subgroup_conjugacy_orbits(const Group& g, std::span<const Group> members) {
  std::unordered_map<std::vector<Elem>, std::size_t, ElementVectorHash> index;
  for (std::size_t i = 0; i < members.size(); ++i) {
    index.emplace(std::vector<Elem>(members[i].elements().begin(), members[i].elements().end()), i);
  }
  std::vector<bool> assigned(members.size(), false);
  std::vector<SubgroupOrbit> orbits;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (assigned[i]) continue;
    SubgroupOrbit orbit;
    orbit.members.push_back(i);
    assigned[i] = true;
    for (std::size_t head = 0; head < orbit.members.size(); ++head) {
      for (Elem x : g.generators()) {
        Group c = members[orbit.members[head]].conjugate(x);
        auto it = index.find(std::vector<Elem>(c.elements().begin(), c.elements().end()));
        ensure(it != index.end(), "conjugation does not permute the subgroup set");
        if (!assigned[it->second]) {
          assigned[it->second] = true;
          orbit.members.push_back(it->second);
        }
      }
    }
    std::sort(orbit.members.begin(), orbit.members.end());
    orbit.representative = *std::min_element(
        orbit.members.begin(), orbit.members.end(),
        [&](std::size_t a, std::size_t b) { return members[a] < members[b]; });
    orbits.push_back(std::move(orbit));
  }
  std::sort(orbits.begin(), orbits.end(), [&](const SubgroupOrbit& a, const SubgroupOrbit& b) {
    return members[a.representative] < members[b.representative];
  });
  return orbits;
}

SubgroupSet make_subgroup_set(const Group& g, std::vector<Group> members) {
  SubgroupSet set;
  set.members = std::move(members);
  for (const auto& m : set.members) {
    ensure(g.contains(m), "subgroup set member is not contained in the parent");
  }
  set.orbits = subgroup_conjugacy_orbits(g, set.members);
  return set;
}

}  // namespace pq
