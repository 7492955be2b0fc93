#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pq/poset.hpp"

namespace pq {

inline constexpr std::size_t kDefaultSimplexCap = 500'000;

using Simplex = std::vector<Index>;

/// Abstract simplicial complex on the vertex universe {0, ..., vertex_count-1}.
/// Simplices are sorted vertex tuples stored per dimension in lexicographic
/// order; the empty simplex is implicit. Vertices of the universe need not be
/// 0-simplices (links and full subcomplexes keep the universe).
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  explicit SimplicialComplex(std::size_t vertex_count) : vertex_count_(vertex_count) {}

  /// Downward closure of `facets`. Throws MatrixTooLarge past `cap` simplices.
  static SimplicialComplex from_facets(std::size_t vertex_count, std::vector<Simplex> facets,
                                       std::size_t cap = kDefaultSimplexCap);
  /// Throws InvariantViolated unless `simplices` is downward closed and duplicate free.
  static SimplicialComplex from_simplices(std::size_t vertex_count, std::vector<Simplex> simplices);

  std::size_t vertex_count() const { return vertex_count_; }
  /// -1 for the empty complex.
  int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
  std::size_t count(int d) const {
    return d < 0 ? 1 : static_cast<std::size_t>(d) < by_dim_.size() ? by_dim_[d].size() / (d + 1) : 0;
  }
  std::size_t total_simplices() const;
  std::span<const Index> simplex(int d, std::size_t i) const {
    return {by_dim_[d].data() + i * (d + 1), static_cast<std::size_t>(d + 1)};
  }
  /// Position of a sorted simplex within its dimension.
  std::optional<std::size_t> find(std::span<const Index> s) const;
  bool contains(std::span<const Index> s) const { return s.empty() || find(s).has_value(); }
  std::vector<Simplex> simplices() const;
  /// f-vector entry per dimension 0..dim.
  std::vector<std::size_t> face_counts() const;
  std::int64_t euler_from_faces() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  void insert_sorted(std::vector<Simplex>& all);

  std::size_t vertex_count_ = 0;
  std::vector<std::vector<Index>> by_dim_;
};

/// Chains of `x`; vertex i is poset element i.
SimplicialComplex order_complex(const Poset& x, std::size_t cap = kDefaultSimplexCap);

/// L plus one vertex per entry of `fixed` (numbered from L.vertex_count());
/// sigma + {E} is a simplex iff every vertex of sigma is marked in fixed[E].
SimplicialComplex extend_complex(const SimplicialComplex& l, const std::vector<std::vector<bool>>& fixed,
                                 std::size_t cap = kDefaultSimplexCap);

SimplicialComplex link(const SimplicialComplex& k, std::span<const Index> sigma);
SimplicialComplex star(const SimplicialComplex& k, std::span<const Index> sigma);
SimplicialComplex full_subcomplex(const SimplicialComplex& k, std::span<const Index> vertices);
/// Simplices of K that are not in L.
std::vector<Simplex> difference(const SimplicialComplex& k, const SimplicialComplex& l);
/// Vertices of K2 are shifted by K1.vertex_count().
SimplicialComplex join(const SimplicialComplex& k1, const SimplicialComplex& k2, std::size_t cap = kDefaultSimplexCap);
/// Renames vertex v to perm[v].
SimplicialComplex relabel(const SimplicialComplex& k, std::span<const Index> perm);

}  // namespace pq
