#include <random>

#include "doctest.h"
#include "pq/error.hpp"
#include "pq/group_ops.hpp"
#include "pq/lie_verify.hpp"

using namespace pq;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::kInvalidArgument;
}

void require_pass(const VerificationReport& r) {
  INFO(r.to_json().dump());
  CHECK(r.verdict == Verdict::kPass);
}

}  // namespace

TEST_CASE("lie rank from radical chains") {
  CHECK(lie_rank(build_group("PSL(3,2)").group, 2) == 2);
  CHECK(lie_rank(build_group("PSL(2,9)").group, 3) == 1);
  auto s6 = build_group("Sym(6)");
  auto tags = s6.tags();
  REQUIRE(tags.size() == 1);
  CHECK(lie_rank(s6.group, 2, &tags[0]) == 2);
  LieTag wrong = tags[0];
  wrong.rank = 3;
  CHECK(code_of([&] { lie_rank(s6.group, 2, &wrong); }) == ErrorCode::kTagMismatch);
}

TEST_CASE("SCNL detection") {
  auto s5 = build_group("Sym(5)");
  auto h = find_scnl(s5, 2);
  REQUIRE(h.has_value());
  CHECK(h->h.order() == 60);
  CHECK(h->tag.name() == "A1(4)");

  auto s6 = build_group("Sym(6)");
  auto h6 = find_scnl(s6, 2);
  REQUIRE(h6.has_value());
  CHECK(h6->h == s6.group);
  auto h63 = find_scnl(s6, 3);
  REQUIRE(h63.has_value());
  CHECK(h63->h.order() == 360);

  auto c6 = build_group("Cyc(6)");
  CHECK_FALSE(find_scnl(c6, 2).has_value());
  CHECK(code_of([&] { require_scnl(c6, 2); }) == ErrorCode::kNoTaggedCandidate);

  // A second, distinct tagged candidate in the same characteristic breaks uniqueness.
  auto bad = s6;
  bad.candidates.push_back(LieCandidate{s6.group, {LieTag{"A1", 1, 9, 1, 3}}, std::nullopt});
  CHECK(code_of([&] { find_scnl(bad, 3); }) == ErrorCode::kMultipleCandidates);
}

TEST_CASE("F classification") {
  auto s5 = build_group("Sym(5)");
  auto cls = classify_f(s5, 2);
  REQUIRE(cls.classes.size() == 1);
  const auto& c = cls.classes[0];
  CHECK(c.bucket == Bucket::kField);
  CHECK(c.orbit_size == 10);
  CHECK(c.m_e == 1);
  CHECK(c.normalizer_order == 12);
  CHECK(cls.rank_two.empty());

  CHECK(classify_f(build_group("Alt(5)"), 2).classes.empty());

  auto g = build_group("PSL(3,2):graph");
  auto gc = classify_f(g, 2);
  REQUIRE(gc.classes.size() == 1);
  CHECK(gc.classes[0].bucket == Bucket::kGraph);
  CHECK(gc.classes[0].m_e == 1);
  CHECK(gc.classes[0].orbit_size == 28);
  // Table row: graph automorphisms of A_{n-1}(2^a) centralise B_{[n/2]}(2^a); n = 3 gives rank 1.
  auto rows = table_reference(2, "A_{n-1}(2^a)");
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].centralizer == "B_{[n/2]}(2^a)");
  CHECK(gc.classes[0].m_e == 3 / 2);
}

TEST_CASE("classification is conjugation invariant") {
  auto g = build_group("Sym(8)");
  auto s = require_scnl(g, 2);
  auto cls = classify_f(g, 2);
  std::mt19937 rng(3);
  std::uniform_int_distribution<std::size_t> pick(0, g.group.order() - 1);
  std::size_t core = 0;
  for (const auto& c : cls.classes) {
    for (int trial = 0; trial < 4; ++trial) {
      Group e = c.representative.conjugate(g.group.elements()[pick(rng)]);
      Group ch = centralizer(s.h, e);
      bool is_core = !p_core(ch, 2).is_trivial();
      CHECK(is_core == (c.bucket == Bucket::kCentralizerCore));
      if (!is_core) CHECK(bouc_poset(ch, 2).height() == c.m_e);
    }
    if (c.bucket != Bucket::kCentralizerCore) continue;
    ++core;
    // B_p(K)^E is acyclic for K in {H, G}.
    for (const Group* k : {&s.h, &g.group}) {
      auto fixed = fixed_point_subposet(bouc_poset(*k, 2), c.representative);
      auto h = homology(order_complex(fixed));
      CHECK(h.support().empty());
    }
  }
  CHECK(core == 1);
  auto graph = cls.bucket(Bucket::kGraph);
  REQUIRE(graph.size() == 1);
  // A_3(2) graph class centralises B_2(2), rank [4/2].
  CHECK(graph[0]->m_e == 2);
  CHECK(graph[0]->orbit_size == 28);
}

TEST_CASE("Solomon-Tits") {
  struct Case {
    const char* spec;
    std::uint64_t p;
    int degree;
    std::uint64_t rank;
  };
  for (auto c : {Case{"PSL(3,2)", 2, 1, 8}, Case{"PSL(2,9)", 3, 0, 9}, Case{"PSL(3,3)", 3, 1, 27},
                 Case{"Sym(6)", 2, 1, 16}}) {
    auto r = verify_solomon_tits(build_group(c.spec), c.p);
    require_pass(r);
    CHECK(r.data["degree"] == c.degree);
    CHECK(r.data["rank"] == c.rank);
  }
}

TEST_CASE("field case") {
  auto r = verify_field_case(build_group("PSigmaL(2,4)"), 2);
  require_pass(r);
  CHECK(r.data["dimension"] == 1);
  CHECK(r.data["top_rank"] == 16);

  auto r27 = verify_field_case(build_group("PSigmaL(2,27)"), 3);
  require_pass(r27);
  CHECK(r27.data["top_rank"] == 819 * 3 - 27);

  // Frobenius of GF(9) has order 2, so at p = 3 there are no field vertices.
  auto r9 = verify_field_case(build_group("PSigmaL(2,9)"), 3);
  require_pass(r9);
  CHECK(r9.data["dimension"] == 0);
  CHECK(r9.data["top_rank"] == 9);

  CHECK(verify_field_case(build_group("PSL(3,2):graph"), 2).verdict == Verdict::kSkipped);
}

TEST_CASE("no-field case") {
  auto r = verify_no_field_case(build_group("PSL(3,2):graph"), 2);
  require_pass(r);
  CHECK(r.data["chi"] == -64);
  require_pass(verify_no_field_case(build_group("PSL(3,2)"), 2));
  require_pass(verify_no_field_case(build_group("Sym(8)"), 2));
  CHECK(verify_no_field_case(build_group("Sym(5)"), 2).verdict == Verdict::kSkipped);
}

TEST_CASE("main theorem delegation and G_df") {
  auto d = verify_main(build_group("Sym(5)"), 2);
  require_pass(d);
  CHECK(d.theorem == "field-case");
  auto nf = verify_main(build_group("PSL(3,2):graph"), 2);
  require_pass(nf);
  CHECK(nf.theorem == "no-field-case");

  auto g = build_group("PSL(3,4):frob(1):graph");
  for (auto& c : g.candidates) c.gdf.reset();
  CHECK(code_of([&] { verify_main(g, 2); }) == ErrorCode::kGdfMissing);
  CHECK(code_of([&] { euler_prediction(g, 2); }) == ErrorCode::kGdfMissing);
}

TEST_CASE("spherical B_p of Omega_1") {
  auto r = verify_spherical_bp(build_group("PSigmaL(2,4)"), 2);
  require_pass(r);
  CHECK(r.data["rank"] == 16);
  require_pass(verify_spherical_bp(build_group("PSigmaL(2,27)"), 3));
  CHECK(verify_spherical_bp(build_group("PSL(3,2)"), 2).verdict == Verdict::kSkipped);
}

TEST_CASE("Euler prediction") {
  auto s5 = euler_prediction(build_group("Sym(5)"), 2);
  CHECK(s5.predicted == -16);
  CHECK(s5.building_term == 4);
  CHECK(s5.field_term == 20);
  CHECK(euler_prediction(build_group("PSL(3,2)"), 2).predicted == -8);
  auto g = euler_prediction(build_group("PSL(3,2):graph"), 2);
  CHECK(g.gdf_from_h);
  CHECK(g.predicted == -64);
  for (const char* spec : {"Sym(5)", "PSL(3,2)", "PSL(3,2):graph", "PSigmaL(2,8)", "Alt(6)", "Sym(6)"})
    for (std::uint64_t p : {2, 3}) {
      auto cg = build_group(spec);
      if (!find_scnl(cg, p)) continue;
      require_pass(verify_euler(cg, p));
    }
}

TEST_CASE("cross characteristic") {
  for (auto [spec, p, r] : {std::tuple{"Sym(6)", 3, 2}, std::tuple{"Sym(6)", 5, 2}, std::tuple{"PSL(3,2)", 3, 2}}) {
    auto rep = verify_cross_characteristic(build_group(spec), p, r);
    require_pass(rep);
  }
  auto rep = verify_cross_characteristic(build_group("Sym(6)"), 3, 2);
  CHECK(rep.data["chi"] == 9);
  CHECK(code_of([&] { verify_cross_characteristic(build_group("Sym(6)"), 2, 2); }) == ErrorCode::kInvalidArgument);
}

TEST_CASE("reference tables") {
  auto d4 = table_reference(3, "D_4");
  REQUIRE(d4.size() == 2);
  CHECK(d4[0].centralizer == "G_2(3^a)");
  CHECK(d4[1].centralizer == "3D_4(3^a)");
  auto tw = table_reference(2, "2A");
  REQUIRE(tw.size() == 1);
  CHECK(tw[0].centralizer == "B_{[n/2]}(q)");
  CHECK(reference_rows().size() == 14);
  for (const auto& row : reference_rows()) CHECK((row.p == 2 || row.p == 3));
}
