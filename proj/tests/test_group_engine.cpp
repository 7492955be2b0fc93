#include <random>

#include "doctest.h"
#include "pq/error.hpp"
#include "pq/group_ops.hpp"
#include "test_support.hpp"

using namespace pq;
using namespace pq::testing;

namespace {

// Oracle: count permutations commuting with x by direct Permutation arithmetic.
std::size_t brute_centralizer_order(const Group& g, const Permutation& x) {
  std::size_t n = 0;
  for (const auto& y : as_perms(g)) n += (x * y == y * x);
  return n;
}

std::size_t brute_normalizer_order(const Group& g, const Group& s) {
  auto ps = as_perms(s);
  std::sort(ps.begin(), ps.end());
  std::size_t n = 0;
  for (const auto& y : as_perms(g)) {
    std::vector<Permutation> conj;
    for (const auto& x : ps) conj.push_back(y.inverse() * x * y);
    std::sort(conj.begin(), conj.end());
    n += (conj == ps);
  }
  return n;
}

void check_normal_randomly(const Group& g, const Group& n, std::mt19937& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, g.order() - 1);
  for (int i = 0; i < 20; ++i) {
    Elem x = g.elements()[pick(rng)];
    CHECK(n.conjugate(x) == n);
  }
}

}  // namespace

TEST_CASE("enumeration orders and determinism") {
  auto s3 = from_perms({cycles(3, {{1, 2}}), cycles(3, {{1, 2, 3}})});
  CHECK(s3.order() == 6);
  CHECK(s3.table().permutation(0).is_identity());

  auto s5 = symmetric(5);
  auto a5 = alternating_in(s5);
  CHECK(a5.order() == 60);

  auto again = symmetric(5);
  CHECK(std::equal(s5.elements().begin(), s5.elements().end(), again.elements().begin()));
  for (Elem e = 1; e < s5.order(); ++e) {
    CHECK(s5.table().permutation(e - 1) < s5.table().permutation(e));
  }
}

TEST_CASE("enumeration cap is a clean error") {
  std::vector<Point> cyc(8);
  std::iota(cyc.begin(), cyc.end(), Point{1});
  try {
    ElementTable::enumerate({cycles(8, {{1, 2}}), cycles(8, {cyc})}, 1000);
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kCapExceeded);
  }
}

TEST_CASE("centralizers") {
  auto s4 = symmetric(4);
  Elem t = s4.table().index_of(cycles(4, {{1, 2}}));
  CHECK(centralizer(s4, t).order() == 4);

  auto s5 = symmetric(5);
  auto a5 = alternating_in(s5);
  auto x = cycles(5, {{1, 2}, {3, 4}});
  CHECK(brute_centralizer_order(a5, x) == 4);
  CHECK(centralizer(a5, s5.table().index_of(x)).order() == 4);

  auto c6 = from_perms({cycles(6, {{1, 2, 3, 4, 5, 6}})});
  CHECK(centralizer(c6, c6) == c6);
}

TEST_CASE("normalizers") {
  auto s4 = symmetric(4);
  auto c4 = Group::generated(s4.table_ptr(), {s4.table().index_of(cycles(4, {{1, 2, 3, 4}}))});
  CHECK(brute_normalizer_order(s4, c4) == 8);
  CHECK(normalizer(s4, c4).order() == 8);
  CHECK(normalizer(s4, s4) == s4);

  auto s5 = symmetric(5);
  auto c2 = Group::generated(s5.table_ptr(), {s5.table().index_of(cycles(5, {{1, 2}}))});
  CHECK(brute_normalizer_order(s5, c2) == 12);
  CHECK(normalizer(s5, c2).order() == 12);
}

TEST_CASE("sylow subgroups") {
  auto s4 = symmetric(4);
  CHECK(sylow_subgroup(s4, 2).order() == 8);
  auto c6 = from_perms({cycles(6, {{1, 2, 3, 4, 5, 6}})});
  CHECK(sylow_subgroup(c6, 5).is_trivial());

  auto s6 = symmetric(6);
  auto a6 = alternating_in(s6);
  auto p3 = sylow_subgroup(a6, 3);
  CHECK(p3.order() == 9);
  CHECK(is_elementary_abelian(p3, 3));

  // Sylow's theorem: number of conjugates is 1 mod p.
  for (std::uint64_t p : {2u, 3u, 5u}) {
    auto s = sylow_subgroup(s6, p);
    CHECK(s.order() == p_part(720, p));
    CHECK(conjugates(s6, s).size() % p == 1);
  }
}

TEST_CASE("p-core") {
  auto s4 = symmetric(4);
  auto o2 = p_core(s4, 2);
  CHECK(o2.order() == 4);
  for (auto pr : {std::vector<std::vector<Point>>{{1, 2}, {3, 4}}, {{1, 3}, {2, 4}}, {{1, 4}, {2, 3}}}) {
    CHECK(o2.contains(s4.table().index_of(cycles(4, pr))));
  }
  CHECK(p_core(symmetric(5), 2).is_trivial());
  auto d8 = sylow_subgroup(s4, 2);
  auto t = std::make_shared<const ElementTable>(s4.table());
  CHECK(p_core(Group::generated(s4.table_ptr(), d8.generators()), 2) == d8);
}

TEST_CASE("residual and omega1") {
  auto s3 = symmetric(3);
  CHECK(o_p_prime_residual(s3, 3).order() == 3);
  CHECK(o_p_prime_residual(s3, 2).order() == 6);

  auto c4 = from_perms({cycles(4, {{1, 2, 3, 4}})});
  CHECK(omega1(c4, 2).order() == 2);
  CHECK(omega1(symmetric(5), 2).order() == 120);

  // Q8 in its regular representation: i, j.
  auto q8 = from_perms({cycles(8, {{1, 2, 3, 4}, {5, 6, 7, 8}}), cycles(8, {{1, 5, 3, 7}, {2, 8, 4, 6}})});
  CHECK(q8.order() == 8);
  CHECK(omega1(q8, 2).order() == 2);
}

TEST_CASE("conjugacy orbits") {
  auto s5 = symmetric(5);
  std::vector<Group> transpositions;
  for (Point a = 1; a <= 5; ++a)
    for (Point b = a + 1; b <= 5; ++b)
      transpositions.push_back(Group::generated(s5.table_ptr(), {s5.table().index_of(cycles(5, {{a, b}}))}));
  auto set = make_subgroup_set(s5, transpositions);
  REQUIRE(set.orbits.size() == 1);
  CHECK(set.orbits[0].members.size() == 10);

  auto s4 = symmetric(4);
  auto v4 = p_core(s4, 2);
  CHECK(subgroup_conjugacy_orbits(s4, std::vector<Group>{v4}).size() == 1);
  auto d8s = conjugates(s4, sylow_subgroup(s4, 2));
  CHECK(d8s.size() == 3);
  auto orbits = subgroup_conjugacy_orbits(s4, d8s);
  REQUIRE(orbits.size() == 1);
  CHECK(orbits[0].representative == 0);
}

TEST_CASE("self-centralising") {
  auto s5 = symmetric(5);
  CHECK(is_self_centralising(s5, alternating_in(s5)));
  auto v = from_perms({cycles(4, {{1, 2}}), cycles(4, {{3, 4}})});
  auto first = Group::generated(v.table_ptr(), {v.table().index_of(cycles(4, {{1, 2}}))});
  CHECK_FALSE(is_self_centralising(v, first));
  CHECK(is_self_centralising(s5, s5));
}

TEST_CASE("structural invariants on small groups") {
  std::mt19937 rng(7);
  for (std::size_t n : {4u, 5u, 6u}) {
    auto g = symmetric(n);
    for (std::uint64_t p : {2u, 3u, 5u}) {
      auto op = p_core(g, p);
      auto om = omega1(g, p);
      auto res = o_p_prime_residual(g, p);
      check_normal_randomly(g, op, rng);
      check_normal_randomly(g, om, rng);
      check_normal_randomly(g, res, rng);
      auto s = sylow_subgroup(g, p);
      CHECK(g.order() % s.order() == 0);
      CHECK(normalizer(g, s).contains(centralizer(g, s)));
      CHECK(sylow_subgroup(g, p) == s);
    }
  }
}
