#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pq/complex.hpp"

namespace pq {

/// Reduced integral homology in degrees -1..dim.
struct HomologyProfile {
  int top_degree = -1;
  std::vector<std::uint64_t> ranks;                // ranks[d + 1]
  std::vector<std::vector<std::string>> torsion;   // invariant factors > 1, decimal, divisibility chain
  std::int64_t euler = -1;

  std::uint64_t rank(int d) const;
  const std::vector<std::string>& torsion_at(int d) const;
  bool has_torsion() const;
  /// Degrees with nonzero rank or torsion.
  std::vector<int> support() const;
  /// Nonzero homology only in degree d, and free there.
  bool concentrated_free(int d) const;
  /// Nonzero degrees only, e.g. "H0=Z^3 H1=Z^2+Z/2"; "0" when acyclic.
  std::string summary() const;

  /// Same groups in every degree; the dimension of the underlying complex is ignored.
  friend bool operator==(const HomologyProfile& a, const HomologyProfile& b);
};

/// Invariant factors and rank of an integer matrix given by sparse columns.
struct SmithResult {
  std::uint64_t rank = 0;
  std::vector<std::string> invariant_factors;  // > 1 only
};

using SparseColumn = std::vector<std::pair<Index, std::int64_t>>;
SmithResult smith_normal_form(std::size_t rows, const std::vector<SparseColumn>& columns);

/// Throws MatrixTooLarge when the complex exceeds `cap` simplices.
HomologyProfile homology(const SimplicialComplex& k, std::size_t cap = kDefaultSimplexCap);

bool is_homology_spherical(const SimplicialComplex& k, int d);

struct CohenMacaulayResult {
  bool ok = true;
  std::optional<Simplex> witness;  // first simplex whose link fails (empty = the whole complex)
};
CohenMacaulayResult is_cohen_macaulay(const SimplicialComplex& k);

struct MvReport {
  bool rank_identity_mode = false;  // every link is below the top degree of a homology-spherical L
  bool holds = false;
  std::vector<std::uint64_t> ranks_k;          // rational ranks of K, degrees -1..
  std::vector<std::uint64_t> predicted_ranks;  // rank_m(L) + sum rank_{m-1}(Lk)
  std::int64_t euler_k = 0;
  std::int64_t euler_predicted = 0;            // chi~(L) - sum chi~(Lk)
  std::size_t new_vertices = 0;
};

/// K must contain L as the full subcomplex on L's vertices, and no simplex of K
/// may contain two vertices outside L (throws InvalidArgument otherwise).
MvReport mv_rank_identity_check(const SimplicialComplex& k, const SimplicialComplex& l);

}  // namespace pq
