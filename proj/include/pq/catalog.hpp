#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pq/group.hpp"
#include "pq/group_spec.hpp"

namespace pq {

inline constexpr std::size_t kMaxActionDegree = 4000;

/// Lie-type data asserted by the catalog for groups it constructs; never
/// inferred from structure.
struct LieTag {
  std::string family;  // e.g. "A1", "B2", "G2"
  std::uint32_t twist = 1;
  std::uint32_t q = 0;
  std::uint32_t rank = 0;
  std::uint32_t characteristic = 0;

  /// "A1(9)", "2G2(3)"
  std::string name() const;
  friend bool operator==(const LieTag&, const LieTag&) = default;
};

/// A normal subgroup the catalog knows to be of Lie type, with the optional
/// G_df annotation (preimage of inner-diagonal and field automorphisms).
struct LieCandidate {
  Group subgroup;
  std::vector<LieTag> tags;
  std::optional<Group> gdf;
};

struct CatalogGroup {
  GroupSpec spec;
  Group group;
  std::vector<LieCandidate> candidates;
  std::vector<Elem> frobenius_witnesses;
  std::vector<Elem> graph_witnesses;

  /// Tags of the whole group (those of a candidate equal to it).
  std::vector<LieTag> tags() const;
};

/// Throws UnsupportedSpec, ActionTooLarge, NotAMatrixGroup, ActionNotDoubled,
/// UnknownName, CapExceeded.
CatalogGroup build_group(const GroupSpec& spec, std::size_t element_cap = kDefaultElementCap);
CatalogGroup build_group(std::string_view spec, std::size_t element_cap = kDefaultElementCap);

/// Expresses `sub` (built on the same points) inside `g`, keeping its tags.
/// Throws InvalidArgument when degrees differ or `sub` is not contained in `g`.
LieCandidate embed_candidate(const CatalogGroup& g, const CatalogGroup& sub);

/// Closed-form order of a matrix base (no extensions), for reference checks.
std::uint64_t family_order(BaseKind base, std::uint32_t n, std::uint32_t q);

struct CatalogEntry {
  std::string name;
  std::string spec;  // empty for refusals
  std::uint64_t order = 0;
  std::string note;
};

/// Named groups used by the examples, including documented refusals.
const std::vector<CatalogEntry>& catalog_entries();

/// Specs of the small-group corpus used by the property suites.
const std::vector<std::string>& small_group_corpus();

}  // namespace pq
