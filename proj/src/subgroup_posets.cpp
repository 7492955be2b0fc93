#include "pq/subgroup_posets.hpp"

#include <algorithm>
#include <functional>
#include <unordered_set>

#include "pq/error.hpp"

namespace pq {

namespace {

using Key = std::vector<Elem>;
using KeySet = std::unordered_set<Key, ElementVectorHash>;

Key key_of(const Group& g) { return {g.elements().begin(), g.elements().end()}; }

void check_cap(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap)
    throw Error(ErrorCode::kCapExceeded, std::string(what) + " has more than " + std::to_string(cap) + " elements");
}

// Nontrivial elementary abelian p-subgroups all of whose nonidentity elements
// satisfy `allowed`, built rank by rank.
std::vector<Group> elementary_abelian(const Group& g, std::uint64_t p, const std::function<bool(Elem)>& allowed,
                                      std::size_t cap) {
  const auto& t = g.table();
  std::vector<Elem> xs;
  for (Elem e : g.elements())
    if (t.order(e) == p && allowed(e)) xs.push_back(e);
  std::vector<std::vector<std::uint32_t>> comm(xs.size());
  for (std::uint32_t i = 0; i < xs.size(); ++i)
    for (std::uint32_t j = i + 1; j < xs.size(); ++j)
      if (t.commute(xs[i], xs[j])) comm[i].push_back(j), comm[j].push_back(i);
  std::vector<std::uint32_t> pos(t.size(), UINT32_MAX);
  for (std::uint32_t i = 0; i < xs.size(); ++i) pos[xs[i]] = i;

  std::vector<Group> all;
  std::vector<Group> level;
  // Generators are canonical: each is the least element outside the span of
  // the previous ones, so every subgroup arises exactly once.
  for (Elem x : xs) {
    Group c = Group::generated(g.table_ptr(), {x});
    if (c.elements()[1] == x) level.push_back(std::move(c));
  }
  while (!level.empty()) {
    check_cap(all.size() + level.size(), cap, "elementary abelian subgroup family");
    std::vector<Group> next;
    for (const Group& e : level) {
      const auto& gens = e.generators();
      std::vector<std::uint32_t> cand = comm[pos[gens[0]]];
      for (std::size_t k = 1; k < gens.size(); ++k) {
        std::vector<std::uint32_t> tmp;
        const auto& other = comm[pos[gens[k]]];
        std::set_intersection(cand.begin(), cand.end(), other.begin(), other.end(), std::back_inserter(tmp));
        cand = std::move(tmp);
      }
      for (std::uint32_t ci : cand) {
        Elem y = xs[ci];
        if (e.contains(y) || y < gens.back()) continue;
        std::vector<Elem> elems(e.elements().begin(), e.elements().end());
        bool ok = true;
        Elem yi = ElementTable::identity();
        for (std::uint64_t i = 1; i < p && ok; ++i) {
          yi = t.multiply(yi, y);
          for (Elem a : e.elements()) {
            Elem z = t.multiply(a, yi);
            if (z < y || !allowed(z)) {
              ok = false;
              break;
            }
            elems.push_back(z);
          }
        }
        if (!ok) continue;
        std::sort(elems.begin(), elems.end());
        auto ngens = gens;
        ngens.push_back(y);
        next.push_back(Group::from_parts(g.table_ptr(), std::move(elems), std::move(ngens)));
        check_cap(all.size() + level.size() + next.size(), cap, "elementary abelian subgroup family");
      }
    }
    for (auto& e : level) all.push_back(std::move(e));
    level = std::move(next);
  }
  return all;
}

// All G-conjugates of every member of `seeds`, optionally keeping only the
// classes whose representative passes `keep`.
std::vector<Group> conjugacy_closure(const Group& g, const std::vector<Group>& seeds,
                                     const std::function<bool(const Group&)>& keep, std::size_t cap,
                                     const char* what) {
  KeySet seen;
  std::vector<Group> out;
  for (const Group& s : seeds) {
    if (seen.count(key_of(s))) continue;
    std::vector<Group> orbit{s};
    seen.insert(key_of(s));
    for (std::size_t h = 0; h < orbit.size(); ++h)
      for (Elem x : g.generators()) {
        Group c = orbit[h].conjugate(x);
        if (seen.insert(key_of(c)).second) orbit.push_back(std::move(c));
      }
    if (!keep(s)) continue;
    for (auto& m : orbit) out.push_back(std::move(m));
    check_cap(out.size(), cap, what);
  }
  return out;
}

}  // namespace

std::vector<Group> subgroups_of_p_group(const Group& s, std::uint64_t p, std::size_t cap) {
  ensure(is_p_group(s, p), "subgroups_of_p_group needs a p-group");
  const auto& t = s.table();
  std::vector<Group> all{Group::trivial(s.table_ptr())};
  KeySet seen{key_of(all[0])};
  for (std::size_t head = 0; head < all.size(); ++head) {
    Group cur = all[head];
    if (cur.order() == s.order()) continue;
    for (Elem x : s.elements()) {
      if (cur.contains(x) || !cur.contains(t.power(x, p)) || !normalizes(x, cur)) continue;
      Group next = cur.join(x);
      if (seen.insert(key_of(next)).second) {
        all.push_back(std::move(next));
        check_cap(all.size(), cap, "subgroup lattice of a p-group");
      }
    }
  }
  std::sort(all.begin(), all.end());
  return all;
}

bool is_radical(const Group& g, const Group& r, std::uint64_t p) {
  return !r.is_trivial() && p_core(normalizer(g, r), p) == r;
}

Poset quillen_poset(const Group& g, std::uint64_t p, std::size_t cap) {
  auto members = elementary_abelian(g, p, [](Elem) { return true; }, cap);
  return Poset::of_subgroups(std::move(members)).with_conjugation_action(g);
}

Poset all_p_subgroups_poset(const Group& g, std::uint64_t p, std::size_t cap) {
  auto local = subgroups_of_p_group(sylow_subgroup(g, p), p, cap);
  std::erase_if(local, [](const Group& x) { return x.is_trivial(); });
  auto members = conjugacy_closure(g, local, [](const Group&) { return true; }, cap, "S_p");
  return Poset::of_subgroups(std::move(members)).with_conjugation_action(g);
}

Poset bouc_poset(const Group& g, std::uint64_t p, std::size_t cap) {
  auto local = subgroups_of_p_group(sylow_subgroup(g, p), p, cap);
  std::erase_if(local, [](const Group& x) { return x.is_trivial(); });
  // larger subgroups first: radical classes tend to be large
  std::stable_sort(local.begin(), local.end(), [](const Group& a, const Group& b) { return a.order() > b.order(); });
  auto members = conjugacy_closure(g, local, [&](const Group& r) { return is_radical(g, r, p); }, cap, "B_p");
  return Poset::of_subgroups(std::move(members)).with_conjugation_action(g);
}

FSets f_sets(const Group& g, const Group& h, std::uint64_t p, std::size_t cap) {
  if (!g.contains(h) || !is_normal(g, h)) throw Error(ErrorCode::kInvalidArgument, "F-sets need H normal in G");
  auto members = elementary_abelian(g, p, [&](Elem e) { return !h.contains(e); }, cap);
  std::vector<Group> prime;
  for (const Group& e : members)
    if (p_core(centralizer(h, e), p).is_trivial()) prime.push_back(e);
  FSets out;
  out.f = make_subgroup_set(g, std::move(members));
  out.f_prime = make_subgroup_set(g, std::move(prime));
  return out;
}

MixedPoset mixed_poset(const Group& h, const Group& k, std::uint64_t p, std::size_t cap) {
  Poset b = bouc_poset(h, p, cap);
  Poset fpart = Poset::of_subgroups(f_sets(k, h, p, cap).f.members);
  const std::size_t nb = b.size(), nf = fpart.size();
  check_cap(nb + nf, cap, "mixed poset");
  const auto& t = k.table();
  std::vector<Group> members(b.subgroups().begin(), b.subgroups().end());
  members.insert(members.end(), fpart.subgroups().begin(), fpart.subgroups().end());
  std::vector<std::vector<Index>> up(nb + nf);
  for (Index i = 0; i < nb; ++i) up[i].assign(b.up(i).begin(), b.up(i).end());
  for (Index i = 0; i < nf; ++i) {
    for (Index j : fpart.up(i)) up[nb + i].push_back(static_cast<Index>(nb + j));
    const Group& e = members[nb + i];
    for (Index r = 0; r < nb; ++r) {
      bool centralised = false;
      for (Elem x : members[r].elements()) {
        if (x == ElementTable::identity()) continue;
        bool all = true;
        for (Elem y : e.generators())
          if (!t.commute(x, y)) {
            all = false;
            break;
          }
        if (all) {
          centralised = true;
          break;
        }
      }
      if (centralised) up[nb + i].push_back(r);
    }
  }
  MixedPoset out;
  out.poset = Poset::of_subgroups(std::move(members), std::move(up)).with_conjugation_action(k);
  out.b_count = nb;
  return out;
}

Poset fixed_point_subposet(const Poset& x, const Group& q) {
  ensure(x.subgroups().size() == x.size(), "fixed points need a subgroup poset");
  std::vector<Index> keep;
  for (Index i = 0; i < x.size(); ++i) {
    bool fixed = true;
    for (Elem g : q.generators())
      if (!normalizes(g, x.subgroups()[i])) {
        fixed = false;
        break;
      }
    if (fixed) keep.push_back(i);
  }
  return x.induced(keep);
}

}  // namespace pq
