#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "pq/catalog.hpp"
#include "pq/error.hpp"
#include "pq/field.hpp"
#include "pq/group_ops.hpp"

using namespace pq;

namespace {

// Oracle: multiset of conjugacy class sizes by orbit closure under the generators.
std::multiset<std::size_t> class_sizes(const Group& g) {
  const auto& t = g.table();
  std::vector<bool> seen(t.size(), false);
  std::multiset<std::size_t> out;
  for (Elem e : g.elements()) {
    if (seen[e]) continue;
    std::vector<Elem> orbit{e};
    seen[e] = true;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (Elem s : g.generators()) {
        Elem c = t.conjugate(orbit[i], s);
        if (!seen[c]) seen[c] = true, orbit.push_back(c);
      }
    out.insert(orbit.size());
  }
  return out;
}

std::size_t involutions_outside(const Group& g, const Group& h) {
  std::size_t n = 0;
  for (Elem e : g.elements()) n += !h.contains(e) && g.table().order(e) == 2;
  return n;
}

ErrorCode error_of(const std::string& spec) {
  try {
    build_group(spec);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error for " << spec);
  return ErrorCode::kInvariantViolated;
}

}  // namespace

TEST_CASE("finite field axioms for every supported q") {
  std::mt19937 rng(3);
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 25u, 27u, 32u, 49u, 64u, 79u, 81u}) {
    const auto& f = GaloisField::get(q);
    CAPTURE(q);
    std::size_t fixed = 0;
    std::set<GaloisField::Value> frob_image;
    for (std::uint32_t a = 0; a < q; ++a) {
      auto x = static_cast<GaloisField::Value>(a);
      if (a) CHECK(f.mul(x, f.inv(x)) == 1);
      CHECK(f.add(x, f.neg(x)) == 0);
      fixed += f.frobenius(x) == x;
      frob_image.insert(f.frobenius(x));
      CHECK(f.frobenius(x, f.degree()) == x);
    }
    CHECK(fixed == f.characteristic());
    CHECK(frob_image.size() == q);
    std::uniform_int_distribution<std::uint32_t> pick(0, q - 1);
    for (int i = 0; i < 200; ++i) {
      auto a = static_cast<GaloisField::Value>(pick(rng));
      auto b = static_cast<GaloisField::Value>(pick(rng));
      auto c = static_cast<GaloisField::Value>(pick(rng));
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      CHECK(f.frobenius(f.mul(a, b)) == f.mul(f.frobenius(a), f.frobenius(b)));
      CHECK(f.frobenius(f.add(a, b)) == f.add(f.frobenius(a), f.frobenius(b)));
    }
    CHECK(f.pow(f.primitive(), q - 1) == 1);
  }
  CHECK_THROWS_AS(GaloisField::get(6), Error);
  CHECK_THROWS_AS(GaloisField::get(121), Error);
}

TEST_CASE("spec grammar round-trips") {
  for (std::string s : {"Sym(5)", "Alt(6)", "Cyc(7)", "Dih(12)", "SL(2,3)", "PSL(3,4):frob(1):graph",
                        "PGammaL(2,9):sub(M10)", "Sp(4,2)", "PSigmaL(2,27)", "Perm[(1,2,3)(4,5),()]"}) {
    auto spec = GroupSpec::parse(s);
    CHECK(spec.print() == s);
    CHECK(GroupSpec::parse(spec.print()) == spec);
  }
  CHECK(GroupSpec::parse(" PSL( 2 , 9 ) ").print() == "PSL(2,9)");
  for (std::string bad : {"Foo(3)", "PSL(2)", "Sym(3):bar", "Perm[1,2]", "Sym(3)x"})
    CHECK_THROWS_AS(GroupSpec::parse(bad), Error);
}

TEST_CASE("orders match the closed-form formulas") {
  struct Row {
    const char* spec;
    std::uint64_t order;
  };
  const Row rows[] = {
      {"Sym(3)", 6},          {"Alt(5)", 60},           {"Dih(7)", 14},           {"Cyc(9)", 9},
      {"SL(2,3)", 24},        {"SL(2,5)", 120},         {"PSL(2,4)", 60},         {"PSL(2,5)", 60},
      {"PSL(2,7)", 168},      {"PSL(2,8)", 504},        {"PSL(2,9)", 360},        {"PGL(2,9)", 720},
      {"PSL(3,2)", 168},      {"PSL(3,3)", 5616},       {"PSigmaL(2,4)", 120},    {"PGammaL(2,9)", 1440},
      {"PSigmaL(2,8)", 1512}, {"Sp(4,2)", 720},         {"PGL(2,7)", 336},        {"PSL(2,25)", 7800},
      {"PSigmaL(2,27)", 29484}, {"PSL(2,49)", 58800},   {"SL(3,2)", 168},
  };
  for (const auto& r : rows) {
    CAPTURE(r.spec);
    auto g = build_group(r.spec);
    CHECK(g.group.order() == r.order);
    if (g.spec.is_matrix() && g.spec.extensions.empty())
      CHECK(family_order(g.spec.base, g.spec.n, g.spec.q) == r.order);
  }
}

TEST_CASE("Lie tags") {
  auto g = build_group("PSL(2,9)");
  auto tags = g.tags();
  REQUIRE(tags.size() == 1);
  CHECK(tags[0].family == "A1");
  CHECK(tags[0].q == 9);
  CHECK(tags[0].rank == 1);
  CHECK(tags[0].characteristic == 3);

  auto s6 = build_group("Sym(6)");
  CHECK(s6.group.order() == 720);
  auto s6tags = s6.tags();
  REQUIRE(s6tags.size() == 1);
  CHECK(s6tags[0].name() == "B2(2)");
  CHECK(s6tags[0].characteristic == 2);

  auto s5 = build_group("Sym(5)");
  REQUIRE(s5.candidates.size() == 1);
  CHECK(s5.candidates[0].subgroup.order() == 60);
  CHECK(s5.candidates[0].tags.size() == 2);

  auto ree = build_group("PGammaL(2,8)");
  bool has_ree = false;
  for (const auto& t : ree.tags()) has_ree |= t.name() == "2G2(3)" && t.characteristic == 3;
  CHECK(has_ree);

  for (const auto& spec : small_group_corpus()) {
    auto c = build_group(spec);
    for (const auto& cand : c.candidates) {
      CHECK(is_normal(c.group, cand.subgroup));
      CHECK(is_self_centralising(c.group, cand.subgroup));
      for (const auto& t : cand.tags) CHECK(is_power_of(t.q, t.characteristic));
    }
  }
}

TEST_CASE("frobenius extensions") {
  CHECK(build_group("PSL(2,4):frob(1)").group.order() == 120);
  auto g = build_group("PSL(2,9):frob(1)");
  CHECK(g.group.order() == 720);
  CHECK(build_group("PSL(2,9):frob(2)").group.order() == 360);
  CHECK(build_group("PSL(2,8):frob(1)").group.order() == 1512);

  for (std::string s : {"PSigmaL(2,8)", "PSL(2,16):frob(1)", "PSL(3,4):frob(1):graph"}) {
    auto x = build_group(s);
    const auto& h = x.candidates.at(0).subgroup;
    std::uint32_t a = GaloisField::get(x.spec.q).degree();
    REQUIRE_FALSE(x.frobenius_witnesses.empty());
    for (Elem w : x.frobenius_witnesses) {
      CHECK(normalizes(w, h));
      CHECK(h.contains(x.group.table().power(w, a)));
    }
  }
  CHECK(error_of("Sym(5):frob(1)") == ErrorCode::kNotAMatrixGroup);
  CHECK(error_of("PSL(2,9):frob(3)") == ErrorCode::kUnsupportedSpec);
}

TEST_CASE("graph extensions") {
  auto g = build_group("PSL(3,2):graph");
  CHECK(g.group.order() == 336);
  REQUIRE(g.graph_witnesses.size() == 1);
  const auto& h = g.candidates.at(0).subgroup;
  Elem tau = g.graph_witnesses[0];
  CHECK(normalizes(tau, h));
  CHECK(h.contains(g.group.table().multiply(tau, tau)));
  CHECK(g.candidates[0].gdf.value() == h);

  auto pgl27 = build_group("PGL(2,7)");
  CHECK(class_sizes(g.group) == class_sizes(pgl27.group));

  CHECK(build_group("PSL(3,4):graph").group.order() == 40320);
  CHECK(error_of("PSL(2,9):graph") == ErrorCode::kActionNotDoubled);
  CHECK(error_of("SL(3,2):graph") == ErrorCode::kActionNotDoubled);
}

TEST_CASE("named subgroups of PGammaL(2,9)") {
  auto big = build_group("PGammaL(2,9)");
  auto psl = big.candidates.at(0).subgroup;
  REQUIRE(psl.order() == 360);

  // Oracle: index-2 subgroups containing PSL are <PSL, x> of order 720.
  std::set<std::vector<Elem>> index_two;
  for (Elem x : big.group.elements()) {
    if (psl.contains(x)) continue;
    auto k = psl.join(x);
    if (k.order() == 720) index_two.insert({k.elements().begin(), k.elements().end()});
  }
  CHECK(index_two.size() == 3);

  std::map<std::string, std::size_t> outer_involutions;
  for (std::string name : {"M10", "PGL29", "S6"}) {
    auto sub = build_group("PGammaL(2,9):sub(" + name + ")");
    CHECK(sub.group.order() == 720);
    auto inner = sub.candidates.at(0).subgroup;
    CHECK(inner.order() == 360);
    CHECK(is_normal(sub.group, inner));
    outer_involutions[name] = involutions_outside(sub.group, inner);
  }
  CHECK(outer_involutions["M10"] == 0);
  CHECK(outer_involutions["PGL29"] > 0);
  CHECK(outer_involutions["S6"] > 0);
  CHECK(error_of("PGammaL(2,9):sub(A7)") == ErrorCode::kUnknownName);
  CHECK(error_of("PSL(2,9):sub(M10)") == ErrorCode::kUnknownName);
}

TEST_CASE("embedding annotated subgroups") {
  auto m10 = build_group("PGammaL(2,9):sub(M10)");
  auto psl = build_group("PSL(2,9)");
  auto c = embed_candidate(m10, psl);
  CHECK(c.subgroup.order() == 360);
  CHECK(c.tags.size() == 1);
  CHECK_THROWS_AS(embed_candidate(m10, build_group("Sym(5)")), Error);
}

TEST_CASE("capacity and refusals") {
  CHECK(error_of("PSL(3,81)") == ErrorCode::kActionTooLarge);
  CHECK(error_of("Sym(5000)") == ErrorCode::kActionTooLarge);
  CHECK(error_of("PSL(2,6)") == ErrorCode::kUnsupportedSpec);
  CHECK(error_of("2F4(2)") == ErrorCode::kUnsupportedSpec);
  CHECK_THROWS_AS(build_group("Sym(10)", 1000), Error);
  bool refusal = false;
  for (const auto& e : catalog_entries()) refusal |= e.spec.empty() && e.name == "2F4(2)";
  CHECK(refusal);
  for (const auto& e : catalog_entries()) {
    if (e.spec.empty() || e.order > 20000) continue;
    CAPTURE(e.name);
    CHECK(build_group(e.spec).group.order() == e.order);
  }
}
