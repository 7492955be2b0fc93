#include <random>
#include <set>

#include "doctest.h"
#include "pq/catalog.hpp"
#include "pq/complex.hpp"
#include "pq/error.hpp"
#include "pq/homology.hpp"
#include "pq/subgroup_posets.hpp"
#include "test_support.hpp"

using namespace pq;
using namespace pq::testing;

namespace {

// Oracle: every subgroup generated by at most two elements that is a nontrivial p-group.
std::set<std::vector<Elem>> two_generated_p_subgroups(const Group& g, std::uint64_t p, bool elementary) {
  std::set<std::vector<Elem>> out;
  std::vector<Elem> pelts;
  for (Elem e : g.elements())
    if (e != ElementTable::identity() && is_power_of(g.table().order(e), p)) pelts.push_back(e);
  for (std::size_t i = 0; i < pelts.size(); ++i)
    for (std::size_t j = i; j < pelts.size(); ++j) {
      Group s = Group::generated(g.table_ptr(), {pelts[i], pelts[j]});
      if (!is_p_group(s, p)) continue;
      if (elementary && !is_elementary_abelian(s, p)) continue;
      out.insert(std::vector<Elem>(s.elements().begin(), s.elements().end()));
    }
  return out;
}

std::set<std::vector<Elem>> member_sets(const Poset& x) {
  std::set<std::vector<Elem>> out;
  for (const auto& s : x.subgroups()) out.insert(std::vector<Elem>(s.elements().begin(), s.elements().end()));
  return out;
}

std::size_t components(const Poset& x) {
  std::vector<Index> parent(x.size());
  for (Index i = 0; i < x.size(); ++i) parent[i] = i;
  auto find = [&](Index a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (Index i = 0; i < x.size(); ++i)
    for (Index j : x.up(i)) parent[find(i)] = find(j);
  std::size_t n = 0;
  for (Index i = 0; i < x.size(); ++i) n += find(i) == i;
  return n;
}

Group cyclic(std::size_t n) {
  std::vector<Point> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<Point>(i + 1);
  return from_perms({cycles(n, {c})});
}

Poset chain(std::size_t n) {
  std::vector<std::vector<Index>> up(n);
  for (Index i = 0; i < n; ++i)
    for (Index j = i + 1; j < n; ++j) up[i].push_back(j);
  return Poset::from_up_sets(up);
}

// Random poset: i < j decided by coin flips for i < j, then transitively closed.
Poset random_poset(std::mt19937& rng, std::size_t n, double density) {
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n, false));
  std::bernoulli_distribution coin(density);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) rel[i][j] = coin(rng);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (rel[i][k] && rel[k][j]) rel[i][j] = true;
  std::vector<std::vector<Index>> up(n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      if (rel[i][j]) up[i].push_back(j);
  return Poset::from_up_sets(up);
}

}  // namespace

TEST_CASE("quillen poset matches brute force") {
  auto s4 = symmetric(4);
  auto a5 = alternating_in(symmetric(5));
  for (const Group* g : {&s4, &a5}) {
    auto x = quillen_poset(*g, 2);
    CHECK(member_sets(x) == two_generated_p_subgroups(*g, 2, true));
  }
  auto a = quillen_poset(a5, 2);
  CHECK(a.size() == 20);
  CHECK(components(a) == 5);
  std::size_t fours = 0;
  for (const auto& s : a.subgroups()) fours += s.order() == 4;
  CHECK(fours == 5);

  CHECK(quillen_poset(symmetric(3), 3).size() == 1);
  CHECK(quillen_poset(cyclic(5), 5).size() == 1);
  CHECK(quillen_poset(cyclic(4), 3).empty());
}

TEST_CASE("all p-subgroups and radical subgroups") {
  auto s4 = symmetric(4);
  auto s = all_p_subgroups_poset(s4, 2);
  CHECK(s.size() == 19);
  CHECK(member_sets(s) == two_generated_p_subgroups(s4, 2, false));
  CHECK(all_p_subgroups_poset(cyclic(4), 2).size() == 2);
  CHECK(all_p_subgroups_poset(cyclic(3), 3).size() == 1);

  auto b = bouc_poset(s4, 2);
  CHECK(b.size() == 4);
  std::multiset<std::size_t> orders;
  for (const auto& r : b.subgroups()) orders.insert(r.order());
  CHECK(orders == std::multiset<std::size_t>{4, 8, 8, 8});
  CHECK(bouc_poset(cyclic(5), 5).size() == 1);

  auto s6 = symmetric(6);
  CHECK(bouc_poset(s6, 2).height() == 2);

  // Oracle for the radical test: direct O_p(N) computed as the intersection of Sylows.
  for (const auto& r : s.subgroups()) CHECK(is_radical(s4, r, 2) == (p_core(normalizer(s4, r), 2) == r));
}

TEST_CASE("subgroups of a p-group") {
  auto d8 = from_perms({cycles(4, {{1, 2, 3, 4}}), cycles(4, {{1, 3}})});
  auto all = subgroups_of_p_group(Group::whole(d8.table_ptr()), 2);
  CHECK(all.size() == 10);
  CHECK(std::is_sorted(all.begin(), all.end()));
}

TEST_CASE("F-sets") {
  auto s5 = symmetric(5);
  auto a5 = alternating_in(s5);
  auto f = f_sets(s5, a5, 2);
  CHECK(f.f.members.size() == 10);
  CHECK(f.f_prime.members.size() == 10);
  CHECK(f.f.orbits.size() == 1);
  for (const auto& e : f.f.members) {
    CHECK(e.order() == 2);
    Elem x = e.generators().front();
    // a transposition has 3 fixed points on 5 letters
    auto img = s5.table().images(x);
    std::size_t fixed = 0;
    for (std::size_t i = 0; i < img.size(); ++i) fixed += img[i] == i;
    CHECK(fixed == 3);
  }

  CHECK(f_sets(a5, a5, 2).f.members.empty());

  auto s6 = symmetric(6);
  auto a6 = alternating_in(s6);
  auto f6 = f_sets(s6, a6, 2);
  // Oracle: odd involutions of Sym(6) are the 15 transpositions and 15 triple transpositions.
  std::size_t odd_involutions = 0;
  for (Elem e : s6.elements()) odd_involutions += s6.table().order(e) == 2 && !a6.contains(e);
  CHECK(f6.f.members.size() == odd_involutions);
  CHECK(odd_involutions == 30);
  // F' members: O_2(C_H(E)) trivial, by brute force.
  std::size_t expect = 0;
  for (const auto& e : f6.f.members) expect += p_core(centralizer(a6, e), 2).is_trivial();
  CHECK(f6.f_prime.members.size() == expect);
  CHECK(f6.f_prime.members.size() < f6.f.members.size());

  CHECK_THROWS_AS(f_sets(s5, Group::generated(s5.table_ptr(), {s5.table().index_of(cycles(5, {{1, 2}}))}), 2),
                  Error);
}

TEST_CASE("mixed poset relation") {
  auto s5 = symmetric(5);
  auto a5 = alternating_in(s5);
  auto m = mixed_poset(a5, s5, 2);
  CHECK(m.b_count == 5);
  CHECK(m.poset.size() == 15);
  const auto& subs = m.poset.subgroups();
  for (Index i = 0; i < m.poset.size(); ++i)
    for (Index j = 0; j < m.poset.size(); ++j) {
      bool expect;
      if (i < m.b_count && j < m.b_count) expect = i != j && subs[j].contains(subs[i]);
      else if (i >= m.b_count && j >= m.b_count) expect = false;
      else if (i < m.b_count) expect = false;
      else expect = !centralizer(subs[j], subs[i]).is_trivial();
      CHECK(m.poset.less(i, j) == expect);
    }
  // Betti profile of the mixed poset matches A_2(Sym5).
  CHECK(homology(order_complex(m.poset)) == homology(order_complex(quillen_poset(s5, 2))));

  auto same = mixed_poset(a5, a5, 2);
  CHECK(same.poset.size() == bouc_poset(a5, 2).size());
}

TEST_CASE("fixed point subposets") {
  auto s6 = symmetric(6);
  auto a3 = quillen_poset(s6, 3);
  CHECK(fixed_point_subposet(a3, sylow_subgroup(s6, 2)).empty());
  CHECK(fixed_point_subposet(a3, Group::trivial(s6.table_ptr())).size() == a3.size());

  auto s5 = symmetric(5);
  auto a5 = alternating_in(s5);
  auto b = bouc_poset(a5, 2);
  auto t = Group::generated(s5.table_ptr(), {s5.table().index_of(cycles(5, {{1, 2}}))});
  CHECK(fixed_point_subposet(b, t).size() == 3);

  // Fixed points of B_p(H) under an order-p subgroup vs B_p(C_H(E)).
  auto bs = bouc_poset(a5, 2);
  for (const auto& e : f_sets(s5, a5, 2).f.members) {
    auto lhs = homology(order_complex(fixed_point_subposet(bs, e)));
    auto rhs = homology(order_complex(bouc_poset(centralizer(a5, e), 2)));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("euler characteristic golden values") {
  auto pgl = build_group("PGammaL(2,9)");
  auto psl = build_group("PSL(2,9)");
  CHECK(euler_mobius(quillen_poset(psl.group, 3)) == 9);
  CHECK(euler_mobius(quillen_poset(psl.group, 5)) == 35);
  auto s6 = build_group("Sym(6)");
  auto b = bouc_poset(s6.group, 2);
  CHECK(euler_orbit_formula(b) == -16);
  CHECK(euler_mobius(b) == -16);
  auto pgl29 = build_group("PGL(2,9)");
  auto b2 = bouc_poset(pgl29.group, 2);
  CHECK(euler_orbit_formula(b2) == -160);
  CHECK(euler_mobius(b2) == -160);
  CHECK(euler_mobius(Poset{}) == -1);
  CHECK(euler_mobius(chain(1)) == 0);
  CHECK(euler_mobius(quillen_poset(pgl.group, 5)) == 35);
}

TEST_CASE("three-way euler agreement across the corpus") {
  for (const auto& name : small_group_corpus()) {
    auto g = build_group(name).group;
    for (std::uint64_t p : {2, 3, 5}) {
      if (g.order() % p) continue;
      for (const auto& x : {quillen_poset(g, p), all_p_subgroups_poset(g, p), bouc_poset(g, p)}) {
        auto mob = euler_mobius(x);
        CHECK(mob == euler_orbit_formula(x));
        CHECK(mob == euler_from_chains(x));
        auto k = order_complex(x);
        CHECK(mob == k.euler_from_faces());
        CHECK(mob == homology(k).euler);
      }
    }
  }
}

TEST_CASE("A_p, S_p, B_p have the same homology; nontrivial O_p kills it") {
  for (const auto& name : small_group_corpus()) {
    auto g = build_group(name).group;
    for (std::uint64_t p : {2, 3}) {
      if (g.order() % p) continue;
      auto ha = homology(order_complex(quillen_poset(g, p)));
      auto hs = homology(order_complex(all_p_subgroups_poset(g, p)));
      auto hb = homology(order_complex(bouc_poset(g, p)));
      CHECK_MESSAGE(ha == hs, name);
      CHECK_MESSAGE(ha == hb, name);
      if (!p_core(g, p).is_trivial()) {
        CHECK(ha.support().empty());
        CHECK(ha.euler == 0);
      }
    }
  }
}

TEST_CASE("core reduction") {
  CHECK(core_reduce(chain(3)).size() == 1);
  auto anti = Poset::from_up_sets(std::vector<std::vector<Index>>(4));
  CHECK(core_reduce(anti).size() == 4);

  auto s = all_p_subgroups_poset(symmetric(4), 2);
  CHECK(homology(order_complex(core_reduce(s))) == homology(order_complex(s)));

  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    auto x = random_poset(rng, 4 + trial % 9, 0.15 + 0.05 * (trial % 5));
    auto r = core_reduce(x);
    CHECK(r.size() <= x.size());
    CHECK(homology(order_complex(r)) == homology(order_complex(x)));
    CHECK(euler_mobius(x) == euler_from_chains(x));
  }
}

TEST_CASE("poset validation and actions") {
  CHECK_THROWS_AS(Poset::from_up_sets({{0}}), Error);
  CHECK_THROWS_AS(Poset::from_up_sets({{1}, {2}, {}}), Error);
  auto x = chain(3);
  PosetAction swap{2, {{2, 1, 0}}};
  CHECK_THROWS_AS(x.with_action(swap), Error);
  auto anti = Poset::from_up_sets(std::vector<std::vector<Index>>(3));
  auto acted = anti.with_action(PosetAction{3, {{1, 2, 0}}});
  CHECK(euler_orbit_formula(acted) == 2);
  CHECK_THROWS_AS(quillen_poset(build_group("Sym(6)").group, 2, 10), Error);
}
