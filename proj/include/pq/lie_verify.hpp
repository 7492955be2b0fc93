#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pq/catalog.hpp"
#include "pq/complex.hpp"
#include "pq/homology.hpp"
#include "pq/subgroup_posets.hpp"

namespace pq {

struct VerifyOptions {
  std::size_t poset_cap = kDefaultPosetCap;
  std::size_t simplex_cap = kDefaultSimplexCap;
};

/// Longest chain length in B_p(K). Throws TagMismatch when `tag` is given and
/// its rank differs.
std::uint32_t lie_rank(const Group& k, std::uint64_t p, const LieTag* tag = nullptr,
                       std::size_t cap = kDefaultPosetCap);

/// The self-centralising normal subgroup of Lie type in characteristic p.
struct Scnl {
  Group h;
  LieTag tag;
  std::optional<Group> gdf;
};

/// Scans the tagged candidates of `g`. Absent when no candidate qualifies;
/// throws MultipleCandidates when two distinct subgroups do.
std::optional<Scnl> find_scnl(const CatalogGroup& g, std::uint64_t p);
/// As find_scnl, but throws NoTaggedCandidate when absent.
Scnl require_scnl(const CatalogGroup& g, std::uint64_t p);

enum class Bucket { kField, kGraph, kCentralizerCore };
char bucket_letter(Bucket b);

/// One G-class of order-p members of F_G(H).
struct FClass {
  Group representative;
  std::size_t orbit_size = 0;
  std::uint64_t normalizer_order = 0;
  std::uint64_t centralizer_order = 0;  // |C_H(E)|
  Bucket bucket = Bucket::kField;
  std::uint32_t m_e = 0;                // longest chain in B_p(C_H(E))
  std::int32_t m_e_star = 0;            // graph classes only
  bool commutes_with_field = false;     // some F_f generator commutes with E
  bool field_in_centralizer = false;    // C_{G_df}(E) has an order-p element outside H
};

struct FClassification {
  std::uint32_t lie_rank = 0;
  std::vector<FClass> classes;
  /// Representatives of the classes of F_G(H) of rank >= 2; never bucketed.
  std::vector<Group> rank_two;
  /// The two commuting tests disagree on some graph class.
  bool commuting_tests_disagree = false;

  std::vector<const FClass*> bucket(Bucket b) const;
  bool has(Bucket b) const { return !bucket(b).empty(); }
};

/// `gdf` feeds only the second commuting test (skipped when absent).
FClassification classify_f(const Group& g, const Group& h, std::uint64_t p, std::uint32_t n,
                           const std::optional<Group>& gdf, std::size_t cap = kDefaultPosetCap);
FClassification classify_f(const CatalogGroup& g, std::uint64_t p, std::size_t cap = kDefaultPosetCap);

enum class Verdict { kPass, kFail, kSkipped };
std::string to_string(Verdict v);

struct Check {
  std::string name;
  nlohmann::json predicted;
  nlohmann::json computed;
  bool ok = false;
};

struct VerificationReport {
  std::string theorem;
  std::string instance;
  std::vector<Check> checks;
  nlohmann::json data = nlohmann::json::object();
  Verdict verdict = Verdict::kPass;
  std::string reason;
  double timing_ms = 0;

  void check(std::string name, nlohmann::json predicted, nlohmann::json computed);
  /// Pass iff every check matched; a report with no checks and a reason is skipped.
  void finish();
  nlohmann::json to_json() const;
};

VerificationReport verify_solomon_tits(const CatalogGroup& h, std::uint64_t p, const VerifyOptions& opt = {});
VerificationReport verify_field_case(const CatalogGroup& g, std::uint64_t p, const VerifyOptions& opt = {});
VerificationReport verify_no_field_case(const CatalogGroup& g, std::uint64_t p, const VerifyOptions& opt = {});
VerificationReport verify_main(const CatalogGroup& g, std::uint64_t p, const VerifyOptions& opt = {});
VerificationReport verify_spherical_bp(const CatalogGroup& g, std::uint64_t p, const VerifyOptions& opt = {});
VerificationReport verify_cross_characteristic(const CatalogGroup& g, std::uint64_t p, std::uint64_t r,
                                               const VerifyOptions& opt = {});

struct EulerPrediction {
  std::int64_t predicted = 0;
  std::int64_t building_term = 0;  // (-1)^{n-1} |H|_p
  std::int64_t field_term = 0;     // (-1)^{n-1} sum [G:N] |C_H(E)|_p
  std::int64_t graph_term = 0;     // sum [G:N] chi~(A_p(C_{G_df}(E)))
  bool gdf_from_h = false;         // G_df replaced by H because F_f is empty
};
EulerPrediction euler_prediction(const CatalogGroup& g, std::uint64_t p, const VerifyOptions& opt = {});
/// euler_prediction against euler_mobius(A_p(G)).
VerificationReport verify_euler(const CatalogGroup& g, std::uint64_t p, const VerifyOptions& opt = {});

struct TableRow {
  std::uint64_t p;
  std::string h;             // family of H, e.g. "A_{n-1}(2^a)"
  std::string h_rank;
  std::string automorphism;  // "graph", "graph-field" or "field"
  std::string centralizer;
  std::string centralizer_rank;
  std::string table;         // "twisted-field" or "centralizer"
};
const std::vector<TableRow>& reference_rows();
/// Rows for (p, family) where `family` matches the start of the H column, e.g. "D4".
std::vector<TableRow> table_reference(std::uint64_t p, const std::string& family);

}  // namespace pq
