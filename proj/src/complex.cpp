#include "pq/complex.hpp"

#include <algorithm>

#include "pq/error.hpp"

namespace pq {

namespace {

void check_cap(std::size_t n, std::size_t cap) {
  if (n > cap) throw Error(ErrorCode::kMatrixTooLarge, "complex has more than " + std::to_string(cap) + " simplices");
}

bool lex_less(std::span<const Index> a, std::span<const Index> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

void SimplicialComplex::insert_sorted(std::vector<Simplex>& all) {
  std::sort(all.begin(), all.end(), [](const Simplex& a, const Simplex& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  all.erase(std::unique(all.begin(), all.end()), all.end());
  by_dim_.clear();
  for (const auto& s : all) {
    if (s.empty()) continue;
    for (Index v : s) ensure(v < vertex_count_, "simplex vertex outside the vertex universe");
    std::size_t d = s.size() - 1;
    if (by_dim_.size() <= d) by_dim_.resize(d + 1);
    by_dim_[d].insert(by_dim_[d].end(), s.begin(), s.end());
  }
}

SimplicialComplex SimplicialComplex::from_facets(std::size_t vertex_count, std::vector<Simplex> facets,
                                                 std::size_t cap) {
  std::vector<Simplex> all;
  for (auto& f : facets) {
    std::sort(f.begin(), f.end());
    ensure(std::adjacent_find(f.begin(), f.end()) == f.end(), "simplex has a repeated vertex");
    ensure(f.size() < 63, "simplex dimension too large");
    std::uint64_t subsets = (std::uint64_t{1} << f.size()) - 1;
    check_cap(all.size() + subsets, cap * 8);
    for (std::uint64_t mask = 1; mask <= subsets; ++mask) {
      Simplex s;
      for (std::size_t i = 0; i < f.size(); ++i)
        if (mask >> i & 1) s.push_back(f[i]);
      all.push_back(std::move(s));
    }
  }
  SimplicialComplex k(vertex_count);
  k.insert_sorted(all);
  check_cap(k.total_simplices(), cap);
  return k;
}

SimplicialComplex SimplicialComplex::from_simplices(std::size_t vertex_count, std::vector<Simplex> simplices) {
  for (auto& s : simplices) std::sort(s.begin(), s.end());
  std::vector<Simplex> copy = simplices;
  std::sort(copy.begin(), copy.end());
  ensure(std::adjacent_find(copy.begin(), copy.end()) == copy.end(), "duplicate simplex");
  SimplicialComplex k(vertex_count);
  k.insert_sorted(simplices);
  for (int d = 1; d <= k.dimension(); ++d)
    for (std::size_t i = 0; i < k.count(d); ++i) {
      auto s = k.simplex(d, i);
      Simplex face;
      for (std::size_t skip = 0; skip < s.size(); ++skip) {
        face.clear();
        for (std::size_t j = 0; j < s.size(); ++j)
          if (j != skip) face.push_back(s[j]);
        ensure(k.contains(face), "simplex family is not downward closed");
      }
    }
  return k;
}

std::size_t SimplicialComplex::total_simplices() const {
  std::size_t n = 0;
  for (int d = 0; d <= dimension(); ++d) n += count(d);
  return n;
}

std::optional<std::size_t> SimplicialComplex::find(std::span<const Index> s) const {
  if (s.empty() || s.size() > by_dim_.size()) return std::nullopt;
  int d = static_cast<int>(s.size()) - 1;
  std::size_t lo = 0, hi = count(d);
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (lex_less(simplex(d, mid), s)) lo = mid + 1;
    else hi = mid;
  }
  if (lo < count(d) && std::equal(s.begin(), s.end(), simplex(d, lo).begin())) return lo;
  return std::nullopt;
}

std::vector<Simplex> SimplicialComplex::simplices() const {
  std::vector<Simplex> out;
  for (int d = 0; d <= dimension(); ++d)
    for (std::size_t i = 0; i < count(d); ++i) {
      auto s = simplex(d, i);
      out.emplace_back(s.begin(), s.end());
    }
  return out;
}

std::vector<std::size_t> SimplicialComplex::face_counts() const {
  std::vector<std::size_t> f;
  for (int d = 0; d <= dimension(); ++d) f.push_back(count(d));
  return f;
}

std::int64_t SimplicialComplex::euler_from_faces() const {
  std::int64_t chi = -1;
  for (int d = 0; d <= dimension(); ++d) chi += (d % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(count(d));
  return chi;
}

SimplicialComplex order_complex(const Poset& x, std::size_t cap) {
  std::vector<Simplex> chains;
  Simplex chain;
  // extend chains upward from every element
  auto grow = [&](auto&& self, Index top) -> void {
    chain.push_back(top);
    Simplex s = chain;
    std::sort(s.begin(), s.end());
    chains.push_back(std::move(s));
    check_cap(chains.size(), cap);
    for (Index next : x.up(top)) self(self, next);
    chain.pop_back();
  };
  for (Index v = 0; v < x.size(); ++v) grow(grow, v);
  return SimplicialComplex::from_simplices(x.size(), std::move(chains));
}

SimplicialComplex extend_complex(const SimplicialComplex& l, const std::vector<std::vector<bool>>& fixed,
                                 std::size_t cap) {
  std::vector<Simplex> all = l.simplices();
  const Index base = static_cast<Index>(l.vertex_count());
  for (Index e = 0; e < fixed.size(); ++e) {
    ensure(fixed[e].size() == l.vertex_count(), "fixed-vertex mask has the wrong length");
    all.push_back({base + e});
    for (int d = 0; d <= l.dimension(); ++d)
      for (std::size_t i = 0; i < l.count(d); ++i) {
        auto s = l.simplex(d, i);
        if (!std::all_of(s.begin(), s.end(), [&](Index v) { return fixed[e][v]; })) continue;
        Simplex t(s.begin(), s.end());
        t.push_back(base + e);
        all.push_back(std::move(t));
      }
    check_cap(all.size(), cap);
  }
  return SimplicialComplex::from_simplices(l.vertex_count() + fixed.size(), std::move(all));
}

SimplicialComplex link(const SimplicialComplex& k, std::span<const Index> sigma) {
  if (sigma.empty()) return k;
  std::vector<Simplex> out;
  for (int d = static_cast<int>(sigma.size()); d <= k.dimension(); ++d)
    for (std::size_t i = 0; i < k.count(d); ++i) {
      auto s = k.simplex(d, i);
      if (!std::includes(s.begin(), s.end(), sigma.begin(), sigma.end())) continue;
      Simplex t;
      std::set_difference(s.begin(), s.end(), sigma.begin(), sigma.end(), std::back_inserter(t));
      out.push_back(std::move(t));
    }
  return SimplicialComplex::from_simplices(k.vertex_count(), std::move(out));
}

SimplicialComplex star(const SimplicialComplex& k, std::span<const Index> sigma) {
  std::vector<Simplex> facets;
  for (int d = 0; d <= k.dimension(); ++d)
    for (std::size_t i = 0; i < k.count(d); ++i) {
      auto s = k.simplex(d, i);
      if (std::includes(s.begin(), s.end(), sigma.begin(), sigma.end())) facets.emplace_back(s.begin(), s.end());
    }
  return SimplicialComplex::from_facets(k.vertex_count(), std::move(facets), SIZE_MAX / 16);
}

SimplicialComplex full_subcomplex(const SimplicialComplex& k, std::span<const Index> vertices) {
  std::vector<bool> in(k.vertex_count(), false);
  for (Index v : vertices) in.at(v) = true;
  std::vector<Simplex> out;
  for (int d = 0; d <= k.dimension(); ++d)
    for (std::size_t i = 0; i < k.count(d); ++i) {
      auto s = k.simplex(d, i);
      if (std::all_of(s.begin(), s.end(), [&](Index v) { return in[v]; })) out.emplace_back(s.begin(), s.end());
    }
  return SimplicialComplex::from_simplices(k.vertex_count(), std::move(out));
}

std::vector<Simplex> difference(const SimplicialComplex& k, const SimplicialComplex& l) {
  std::vector<Simplex> out;
  for (int d = 0; d <= k.dimension(); ++d)
    for (std::size_t i = 0; i < k.count(d); ++i) {
      auto s = k.simplex(d, i);
      if (!l.contains(s)) out.emplace_back(s.begin(), s.end());
    }
  return out;
}

SimplicialComplex join(const SimplicialComplex& k1, const SimplicialComplex& k2, std::size_t cap) {
  const Index shift = static_cast<Index>(k1.vertex_count());
  auto a = k1.simplices(), b = k2.simplices();
  a.insert(a.begin(), Simplex{});
  b.insert(b.begin(), Simplex{});
  check_cap(a.size() * b.size(), cap);
  std::vector<Simplex> out;
  for (const auto& s : a)
    for (const auto& t : b) {
      if (s.empty() && t.empty()) continue;
      Simplex u = s;
      for (Index v : t) u.push_back(v + shift);
      out.push_back(std::move(u));
    }
  return SimplicialComplex::from_simplices(k1.vertex_count() + k2.vertex_count(), std::move(out));
}

SimplicialComplex relabel(const SimplicialComplex& k, std::span<const Index> perm) {
  ensure(perm.size() == k.vertex_count(), "relabelling has the wrong length");
  std::vector<Simplex> out;
  for (auto s : k.simplices()) {
    for (auto& v : s) v = perm[v];
    out.push_back(std::move(s));
  }
  return SimplicialComplex::from_simplices(k.vertex_count(), std::move(out));
}

}  // namespace pq
