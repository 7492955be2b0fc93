#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "pq/cache.hpp"
#include "pq/homology.hpp"
#include "pq/lie_verify.hpp"

namespace pq {

inline constexpr const char* kToolVersion = "0.3.0";

/// Registered verifier ids, in display order.
const std::vector<std::string>& verifier_ids();

struct RunConfig {
  std::string command;  // group, poset, complex, homology, verify, suite, list
  std::string verifier;
  std::string group;
  std::string h;        // overrides the Lie-type annotation
  std::string gdf;      // overrides the G_df annotation
  std::string kind = "A";  // poset kind: A, S, B or mixed (needs h)
  std::uint64_t p = 0;
  std::optional<std::uint64_t> r;
  std::size_t element_cap = kDefaultElementCap;
  std::size_t poset_cap = kDefaultPosetCap;
  std::size_t simplex_cap = kDefaultSimplexCap;
  std::optional<std::string> cache_dir;  // unset: no cache
  std::string out;
  bool slow = false;

  /// Throws InvalidArgument on zero caps or an unknown command, verifier or kind.
  void validate() const;
  /// The fields that determine the result (no paths).
  nlohmann::json to_json() const;
};

struct RunResult {
  int exit_code = 0;  // 0 pass or skipped, 1 a check failed, 2 input or capacity error
  nlohmann::json report;
  std::size_t cache_hits = 0;
};

/// Never throws for pq::Error; such failures become exit code 2 with verdict "error".
RunResult run(const RunConfig& config);

/// Sorted keys, two-space indent, trailing newline.
std::string canonical_dump(const nlohmann::json& j);

nlohmann::json homology_to_json(const HomologyProfile& h);
HomologyProfile homology_from_json(const nlohmann::json& j);

enum class Provenance { kLiterature, kDerivedOracle };
std::string to_string(Provenance p);

/// A known value for a catalog instance.
struct Golden {
  std::string id;
  std::string spec;
  std::uint64_t p = 0;
  std::uint64_t r = 0;
  /// chi_quillen, chi_bouc, quillen_top, bouc_top, or verify:<id>.
  std::string quantity;
  int degree = 0;           // for *_top
  std::int64_t expected = 0;  // for verify:<id>, 1 means the verdict is pass
  Provenance provenance = Provenance::kDerivedOracle;
  bool slow = false;
};

const std::vector<Golden>& goldens();

/// Catalog entries with their tags and goldens, refusals included.
nlohmann::json list_catalog();

/// Runs the goldens (slow ones only when `slow`), one record per golden.
nlohmann::json run_suite(bool slow, const VerifyOptions& opt = {}, const Cache* cache = nullptr);

}  // namespace pq
