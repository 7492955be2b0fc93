#include "pq/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <set>

#include "pq/catalog.hpp"
#include "pq/error.hpp"
#include "pq/group_ops.hpp"
#include "pq/subgroup_posets.hpp"

namespace pq {

namespace {

using json = nlohmann::json;

const std::vector<std::string> kCommands = {"group", "poset", "complex", "homology", "verify", "suite", "list"};
const std::vector<std::string> kKinds = {"A", "S", "B", "mixed"};

bool member(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

CatalogGroup load_group(const RunConfig& c) {
  if (c.group.empty()) throw Error(ErrorCode::kInvalidArgument, "--group is required");
  auto g = build_group(c.group, c.element_cap);
  if (!c.h.empty()) g.candidates = {embed_candidate(g, build_group(c.h, c.element_cap))};
  if (!c.gdf.empty()) {
    Group gdf = embed_candidate(g, build_group(c.gdf, c.element_cap)).subgroup;
    for (auto& cand : g.candidates) cand.gdf = gdf;
  }
  return g;
}

void require_p(const RunConfig& c) {
  if (!is_prime(c.p)) throw Error(ErrorCode::kInvalidArgument, "--p must be a prime");
}

Poset poset_of(const RunConfig& c, const CatalogGroup& g) {
  require_p(c);
  if (c.kind == "A") return quillen_poset(g.group, c.p, c.poset_cap);
  if (c.kind == "S") return all_p_subgroups_poset(g.group, c.p, c.poset_cap);
  if (c.kind == "B") return bouc_poset(g.group, c.p, c.poset_cap);
  if (c.h.empty()) throw Error(ErrorCode::kInvalidArgument, "the mixed poset needs --H");
  return mixed_poset(g.candidates.front().subgroup, g.group, c.p, c.poset_cap).poset;
}

json tags_json(const std::vector<LieTag>& tags) {
  json out = json::array();
  for (const auto& t : tags) out.push_back(t.name());
  return out;
}

json group_result(const RunConfig& c) {
  auto g = load_group(c);
  json cands = json::array();
  for (const auto& cand : g.candidates) {
    json j = {{"order", cand.subgroup.order()}, {"tags", tags_json(cand.tags)}};
    if (cand.gdf) j["gdf_order"] = cand.gdf->order();
    cands.push_back(j);
  }
  json out = {{"spec", g.spec.print()},
              {"order", g.group.order()},
              {"degree", g.group.table().degree()},
              {"generators", g.group.generators().size()},
              {"tags", tags_json(g.tags())},
              {"candidates", cands}};
  if (c.p != 0) {
    require_p(c);
    out["p_part"] = p_part(g.group.order(), c.p);
    out["p_core_order"] = p_core(g.group, c.p).order();
    out["omega1_sylow_order"] = omega1(sylow_subgroup(g.group, c.p), c.p).order();
  }
  return out;
}

json poset_result(const RunConfig& c) {
  auto g = load_group(c);
  Poset x = poset_of(c, g);
  if (!x.action() && !x.subgroups().empty()) x = x.with_conjugation_action(g.group);
  json out = {{"kind", c.kind},
              {"size", x.size()},
              {"height", x.height()},
              {"relations", x.relation_size()},
              {"euler_mobius", euler_mobius(x)},
              {"euler_chains", euler_from_chains(x)},
              {"core_size", core_reduce(x).size()}};
  if (x.action()) out["euler_orbit"] = euler_orbit_formula(x);
  return out;
}

json complex_result(const RunConfig& c) {
  auto g = load_group(c);
  auto k = order_complex(poset_of(c, g), c.simplex_cap);
  return {{"kind", c.kind},
          {"vertices", k.vertex_count()},
          {"dimension", k.dimension()},
          {"f_vector", k.face_counts()},
          {"euler", k.euler_from_faces()}};
}

json homology_result(const RunConfig& c) {
  auto g = load_group(c);
  auto k = order_complex(poset_of(c, g), c.simplex_cap);
  auto h = homology(k, c.simplex_cap);
  json out = {{"kind", c.kind}, {"dimension", k.dimension()}, {"homology", homology_to_json(h)},
              {"summary", h.summary()}};
  auto s = h.support();
  out["spherical_degree"] = s.size() == 1 && h.concentrated_free(s[0]) ? json(s[0]) : json(nullptr);
  return out;
}

VerificationReport dispatch(const std::string& id, const CatalogGroup& g, std::uint64_t p,
                            std::optional<std::uint64_t> r, const VerifyOptions& opt) {
  if (id == "solomon-tits") return verify_solomon_tits(g, p, opt);
  if (id == "field-case") return verify_field_case(g, p, opt);
  if (id == "no-field-case") return verify_no_field_case(g, p, opt);
  if (id == "main") return verify_main(g, p, opt);
  if (id == "spherical-bp") return verify_spherical_bp(g, p, opt);
  if (id == "euler") return verify_euler(g, p, opt);
  if (id == "cross-characteristic") {
    if (!r) throw Error(ErrorCode::kInvalidArgument, "cross-characteristic needs --r");
    return verify_cross_characteristic(g, p, *r, opt);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown verifier " + id);
}

json verify_result(const RunConfig& c) {
  require_p(c);
  if (c.r && !is_prime(*c.r)) throw Error(ErrorCode::kInvalidArgument, "--r must be a prime");
  auto g = load_group(c);
  return dispatch(c.verifier, g, c.p, c.r, VerifyOptions{c.poset_cap, c.simplex_cap}).to_json();
}

/// Runs `compute` unless the cache holds the payload for `key`.
json cached(const Cache* cache, const json& key, const std::function<json()>& compute) {
  if (!cache) return compute();
  std::string k = Cache::key_for(key.dump());
  if (auto hit = cache->get(k)) {
    auto parsed = json::parse(*hit, nullptr, false);
    if (!parsed.is_discarded()) return parsed;
  }
  json out = compute();
  cache->put(k, out.dump());
  return out;
}

std::string verdict_of(const RunConfig& c, const json& result) {
  if (c.command == "verify") return result.at("verdict").get<std::string>();
  if (c.command == "suite") return result.at("verdict").get<std::string>();
  if (c.command == "poset") {
    bool ok = result["euler_mobius"] == result["euler_chains"] &&
              (!result.contains("euler_orbit") || result["euler_orbit"] == result["euler_mobius"]);
    return ok ? "pass" : "fail";
  }
  if (c.command == "complex" || c.command == "homology") {
    if (c.command == "homology" && result["homology"]["euler"] != result["homology"]["euler_from_ranks"])
      return "fail";
    return "pass";
  }
  return "pass";
}

std::int64_t compute_golden(const Golden& gd, const VerifyOptions& opt, json& detail) {
  auto g = build_group(gd.spec);
  if (gd.quantity == "chi_quillen") return euler_mobius(quillen_poset(g.group, gd.p, opt.poset_cap));
  if (gd.quantity == "chi_bouc") return euler_mobius(bouc_poset(g.group, gd.p, opt.poset_cap));
  if (gd.quantity == "quillen_top" || gd.quantity == "bouc_top") {
    Poset x = gd.quantity == "quillen_top" ? quillen_poset(g.group, gd.p, opt.poset_cap)
                                           : bouc_poset(g.group, gd.p, opt.poset_cap);
    auto h = homology(order_complex(x, opt.simplex_cap), opt.simplex_cap);
    detail["homology"] = h.summary();
    return h.concentrated_free(gd.degree) ? static_cast<std::int64_t>(h.rank(gd.degree)) : -1;
  }
  if (gd.quantity.starts_with("verify:")) {
    std::optional<std::uint64_t> r;
    if (gd.r) r = gd.r;
    auto rep = dispatch(gd.quantity.substr(7), g, gd.p, r, opt);
    detail["verdict"] = to_string(rep.verdict);
    detail["data"] = rep.data;
    return rep.verdict == Verdict::kPass ? 1 : 0;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown golden quantity " + gd.quantity);
}

json golden_json(const Golden& g) {
  json j = {{"id", g.id},           {"spec", g.spec},       {"p", g.p},
            {"quantity", g.quantity}, {"expected", g.expected}, {"provenance", to_string(g.provenance)},
            {"slow", g.slow}};
  if (g.quantity.ends_with("_top")) j["degree"] = g.degree;
  if (g.r) j["r"] = g.r;
  return j;
}

}  // namespace

const std::vector<std::string>& verifier_ids() {
  static const std::vector<std::string> ids = {"solomon-tits", "field-case", "no-field-case", "main",
                                               "spherical-bp", "euler",      "cross-characteristic"};
  return ids;
}

void RunConfig::validate() const {
  if (!member(kCommands, command)) throw Error(ErrorCode::kInvalidArgument, "unknown command " + command);
  if (command == "verify" && !member(verifier_ids(), verifier))
    throw Error(ErrorCode::kInvalidArgument, "unknown verifier " + verifier);
  if (!member(kKinds, kind)) throw Error(ErrorCode::kInvalidArgument, "unknown poset kind " + kind);
  if (element_cap == 0 || poset_cap == 0 || simplex_cap == 0)
    throw Error(ErrorCode::kInvalidArgument, "caps must be positive");
}

json RunConfig::to_json() const {
  json j = {{"command", command},         {"group", group},           {"p", p},
            {"element_cap", element_cap}, {"poset_cap", poset_cap},   {"simplex_cap", simplex_cap},
            {"slow", slow}};
  if (command == "verify") j["verifier"] = verifier;
  if (command == "poset" || command == "complex" || command == "homology") j["kind"] = kind;
  if (!h.empty()) j["H"] = h;
  if (!gdf.empty()) j["Gdf"] = gdf;
  if (r) j["r"] = *r;
  return j;
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

json homology_to_json(const HomologyProfile& h) {
  std::int64_t alt = 0;
  for (int d = -1; d <= h.top_degree; ++d) alt += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(h.rank(d));
  return {{"top_degree", h.top_degree},
          {"ranks", h.ranks},
          {"torsion", h.torsion},
          {"euler", h.euler},
          {"euler_from_ranks", alt}};
}

HomologyProfile homology_from_json(const json& j) {
  HomologyProfile h;
  h.top_degree = j.at("top_degree").get<int>();
  h.ranks = j.at("ranks").get<std::vector<std::uint64_t>>();
  h.torsion = j.at("torsion").get<std::vector<std::vector<std::string>>>();
  h.euler = j.at("euler").get<std::int64_t>();
  return h;
}

RunResult run(const RunConfig& c) {
  auto t0 = std::chrono::steady_clock::now();
  RunResult out;
  json result;
  std::string verdict;
  try {
    c.validate();
    std::optional<Cache> cache;
    if (c.cache_dir) cache.emplace(*c.cache_dir);
    const Cache* cp = cache ? &*cache : nullptr;
    json key = {{"tool_version", kToolVersion}, {"config", c.to_json()}};
    if (c.command == "group") {
      result = group_result(c);
    } else if (c.command == "poset") {
      result = cached(cp, key, [&] { return poset_result(c); });
    } else if (c.command == "complex") {
      result = cached(cp, key, [&] { return complex_result(c); });
    } else if (c.command == "homology") {
      result = cached(cp, key, [&] { return homology_result(c); });
    } else if (c.command == "verify") {
      result = cached(cp, key, [&] { return verify_result(c); });
    } else if (c.command == "suite") {
      result = run_suite(c.slow, VerifyOptions{c.poset_cap, c.simplex_cap}, cp);
    } else {
      result = list_catalog();
    }
    verdict = verdict_of(c, result);
    out.exit_code = verdict == "fail" ? 1 : 0;
    if (cp) out.cache_hits = cp->hits();
  } catch (const Error& e) {
    result = {{"error", std::string(to_string(e.code()))}, {"message", e.what()}};
    verdict = "error";
    out.exit_code = 2;
  }
  out.report = {{"tool_version", kToolVersion},
                {"config", c.to_json()},
                {"result", result},
                {"verdict", verdict},
                {"timing_ms", std::llround(elapsed_ms(t0))}};
  return out;
}

std::string to_string(Provenance p) { return p == Provenance::kLiterature ? "literature" : "derived-oracle"; }

const std::vector<Golden>& goldens() {
  using P = Provenance;
  static const std::vector<Golden> g = [] {
    std::vector<Golden> v;
    v.push_back({"alt6-a3-chi", "Alt(6)", 3, 0, "chi_quillen", 0, 9, P::kLiterature, false});
    for (const char* s : {"PSL(2,9)", "Sym(6)", "PGL(2,9)", "PGammaL(2,9):sub(M10)", "PGammaL(2,9)"})
      v.push_back({std::string("a5-chi ") + s, s, 5, 0, "chi_quillen", 0, 35, P::kLiterature, false});
    for (const char* s : {"PSL(2,9)", "Sym(6)", "PGammaL(2,9):sub(M10)"}) {
      v.push_back({std::string("b2-chi ") + s, s, 2, 0, "chi_bouc", 0, -16, P::kLiterature, false});
      v.push_back({std::string("b2-h1 ") + s, s, 2, 0, "bouc_top", 1, 16, P::kDerivedOracle, false});
    }
    for (const char* s : {"PGL(2,9)", "PGammaL(2,9)"}) {
      v.push_back({std::string("b2-chi ") + s, s, 2, 0, "chi_bouc", 0, -160, P::kLiterature, false});
      v.push_back({std::string("b2-h1 ") + s, s, 2, 0, "bouc_top", 1, 160, P::kDerivedOracle, false});
    }
    v.push_back({"psigmal24-a2-h1", "PSigmaL(2,4)", 2, 0, "quillen_top", 1, 16, P::kLiterature, false});
    v.push_back({"steinberg PSL(2,9)", "PSL(2,9)", 3, 0, "bouc_top", 0, 9, P::kDerivedOracle, false});
    v.push_back({"steinberg PSL(3,2)", "PSL(3,2)", 2, 0, "bouc_top", 1, 8, P::kDerivedOracle, false});
    v.push_back({"steinberg PSL(3,3)", "PSL(3,3)", 3, 0, "bouc_top", 1, 27, P::kDerivedOracle, false});
    v.push_back({"steinberg Sym(6)", "Sym(6)", 2, 0, "bouc_top", 1, 16, P::kDerivedOracle, false});
    v.push_back({"sym5-a2-chi", "Sym(5)", 2, 0, "chi_quillen", 0, -16, P::kLiterature, false});
    for (auto [s, p] : {std::pair{"Sym(5)", 2}, std::pair{"PSigmaL(2,9)", 3}, std::pair{"PSL(3,2):graph", 2}})
      v.push_back({std::string("euler ") + s, s, static_cast<std::uint64_t>(p), 0, "verify:euler", 0, 1,
                   P::kDerivedOracle, false});
    for (std::uint64_t p : {3, 5})
      v.push_back({"cross Sym(6) p=" + std::to_string(p), "Sym(6)", p, 2, "verify:cross-characteristic", 0, 1,
                   P::kDerivedOracle, false});
    v.push_back({"field-case PSigmaL(2,4)", "PSigmaL(2,4)", 2, 0, "verify:field-case", 0, 1, P::kDerivedOracle, false});
    v.push_back({"no-field PSL(3,2):graph", "PSL(3,2):graph", 2, 0, "verify:no-field-case", 0, 1, P::kDerivedOracle,
                 false});
    v.push_back({"psigmal216-a2-h1", "PSigmaL(2,16)", 2, 0, "quillen_top", 1, 256, P::kLiterature, true});
    v.push_back({"main PSL(3,4):frob(1):graph", "PSL(3,4):frob(1):graph", 2, 0, "verify:main", 0, 1,
                 P::kDerivedOracle, true});
    return v;
  }();
  return g;
}

json list_catalog() {
  json entries = json::array();
  for (const auto& e : catalog_entries()) {
    json j = {{"name", e.name}, {"order", e.order}, {"note", e.note}};
    if (e.spec.empty()) {
      j["refused"] = true;
      j["reason"] = "beyond element cap; predicted 2^12 spheres";
      j["goldens"] = json::array({{{"quantity", "bouc_top"},
                                   {"p", 2},
                                   {"degree", 1},
                                   {"expected", 4096},
                                   {"provenance", to_string(Provenance::kLiterature)}}});
      entries.push_back(j);
      continue;
    }
    j["spec"] = e.spec;
    j["refused"] = false;
    auto cg = build_group(e.spec);
    j["tags"] = tags_json(cg.tags());
    json cands = json::array();
    for (const auto& c : cg.candidates) cands.push_back({{"order", c.subgroup.order()}, {"tags", tags_json(c.tags)}});
    j["candidates"] = cands;
    auto canon = cg.spec.print();
    json gl = json::array();
    for (const auto& g : goldens())
      if (GroupSpec::parse(g.spec).print() == canon) gl.push_back(golden_json(g));
    j["goldens"] = gl;
    entries.push_back(j);
  }
  std::set<std::string> seen;
  for (const auto& e : catalog_entries())
    if (!e.spec.empty()) seen.insert(GroupSpec::parse(e.spec).print());
  for (const auto& g : goldens()) {
    auto canon = GroupSpec::parse(g.spec).print();
    if (seen.contains(canon)) continue;
    seen.insert(canon);
    auto cg = build_group(g.spec);
    json gl = json::array();
    for (const auto& other : goldens())
      if (GroupSpec::parse(other.spec).print() == canon) gl.push_back(golden_json(other));
    entries.push_back({{"name", canon},
                       {"spec", g.spec},
                       {"order", cg.group.order()},
                       {"note", ""},
                       {"refused", false},
                       {"tags", tags_json(cg.tags())},
                       {"goldens", gl}});
  }
  return {{"entries", entries}, {"verifiers", verifier_ids()}};
}

json run_suite(bool slow, const VerifyOptions& opt, const Cache* cache) {
  json records = json::array();
  bool all = true;
  for (const auto& g : goldens()) {
    json rec = golden_json(g);
    if (g.slow && !slow) {
      rec["status"] = "skipped";
      records.push_back(rec);
      continue;
    }
    json key = {{"tool_version", kToolVersion},
                {"golden", golden_json(g)},
                {"poset_cap", opt.poset_cap},
                {"simplex_cap", opt.simplex_cap}};
    json computed = cached(cache, key, [&] {
      json detail = json::object();
      std::int64_t v = compute_golden(g, opt, detail);
      return json{{"value", v}, {"detail", detail}};
    });
    rec["computed"] = computed["value"];
    rec["detail"] = computed["detail"];
    bool ok = computed["value"] == g.expected;
    rec["status"] = ok ? "pass" : "fail";
    all = all && ok;
    records.push_back(rec);
  }
  return {{"records", records}, {"verdict", all ? "pass" : "fail"}};
}

}  // namespace pq
