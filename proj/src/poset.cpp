#include "pq/poset.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "pq/error.hpp"

namespace pq {

namespace {

void build_down(const std::vector<std::vector<Index>>& up, std::vector<std::vector<Index>>& down) {
  down.assign(up.size(), {});
  for (Index i = 0; i < up.size(); ++i)
    for (Index j : up[i]) down[j].push_back(i);
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::kCapExceeded, "Euler characteristic overflows 64 bits");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::kCapExceeded, "Euler characteristic overflows 64 bits");
  return r;
}

}  // namespace

Poset Poset::from_up_sets(std::vector<std::vector<Index>> up, std::vector<std::string> labels) {
  Poset p;
  const std::size_t n = up.size();
  for (Index i = 0; i < n; ++i) {
    auto& u = up[i];
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    for (Index j : u) {
      ensure(j < n, "poset relation refers to a missing element");
      ensure(j != i, "poset relation is not irreflexive");
    }
  }
  for (Index i = 0; i < n; ++i)
    for (Index j : up[i])
      ensure(std::includes(up[i].begin(), up[i].end(), up[j].begin(), up[j].end()),
             "poset relation is not transitive");
  ensure(labels.empty() || labels.size() == n, "label count does not match the poset");
  p.up_ = std::move(up);
  build_down(p.up_, p.down_);
  p.labels_ = std::move(labels);
  return p;
}

Poset Poset::of_subgroups(std::vector<Group> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  Poset p;
  const std::size_t n = members.size();
  p.up_.assign(n, {});
  if (n > 0) {
    const auto& t = members[0].table();
    // containing[e] = members that contain element e
    std::vector<std::vector<Index>> containing(t.size());
    for (Index j = 0; j < n; ++j)
      for (Elem e : members[j].elements()) containing[e].push_back(j);
    for (Index i = 0; i < n; ++i) {
      const auto& gens = members[i].generators();
      std::vector<Index> cand;
      if (gens.empty()) {
        cand.resize(n);
        std::iota(cand.begin(), cand.end(), Index{0});
      } else {
        cand = containing[gens[0]];
        for (std::size_t g = 1; g < gens.size() && !cand.empty(); ++g) {
          std::vector<Index> next;
          std::set_intersection(cand.begin(), cand.end(), containing[gens[g]].begin(), containing[gens[g]].end(),
                                std::back_inserter(next));
          cand = std::move(next);
        }
      }
      for (Index j : cand)
        if (members[j].order() > members[i].order()) p.up_[i].push_back(j);
    }
  }
  build_down(p.up_, p.down_);
  p.subgroups_ = std::move(members);
  return p;
}

Poset Poset::of_subgroups(std::vector<Group> members, std::vector<std::vector<Index>> up) {
  ensure(members.size() == up.size(), "subgroup count does not match the relation");
  Poset p = from_up_sets(std::move(up));
  p.subgroups_ = std::move(members);
  return p;
}

bool Poset::less(Index a, Index b) const { return std::binary_search(up_[a].begin(), up_[a].end(), b); }

std::size_t Poset::relation_size() const {
  std::size_t n = 0;
  for (const auto& u : up_) n += u.size();
  return n;
}

std::string Poset::label(Index i) const {
  if (!subgroups_.empty()) return subgroups_[i].describe();
  if (!labels_.empty()) return labels_[i];
  return "x" + std::to_string(i);
}

Poset Poset::with_action(PosetAction action) const {
  for (const auto& g : action.generators) {
    ensure(g.size() == size(), "action generator has the wrong length");
    std::vector<bool> hit(size(), false);
    for (Index i = 0; i < size(); ++i) {
      ensure(g[i] < size() && !hit[g[i]], "action generator is not a permutation");
      hit[g[i]] = true;
      for (Index j : up_[i]) ensure(less(g[i], g[j]), "action does not preserve the order");
    }
  }
  Poset p = *this;
  p.action_ = std::move(action);
  return p;
}

Poset Poset::with_conjugation_action(const Group& g) const {
  ensure(subgroups_.size() == size(), "conjugation action needs a subgroup poset");
  std::unordered_map<std::vector<Elem>, Index, ElementVectorHash> index;
  for (Index i = 0; i < size(); ++i)
    index.emplace(std::vector<Elem>(subgroups_[i].elements().begin(), subgroups_[i].elements().end()), i);
  PosetAction action;
  action.group_order = g.order();
  for (Elem x : g.generators()) {
    std::vector<Index> img(size());
    for (Index i = 0; i < size(); ++i) {
      Group c = subgroups_[i].conjugate(x);
      auto it = index.find(std::vector<Elem>(c.elements().begin(), c.elements().end()));
      ensure(it != index.end(), "conjugation does not permute the poset");
      img[i] = it->second;
    }
    action.generators.push_back(std::move(img));
  }
  return with_action(std::move(action));
}

Poset Poset::induced(std::span<const Index> keep) const {
  std::vector<Index> pos(size(), static_cast<Index>(-1));
  for (Index k = 0; k < keep.size(); ++k) pos[keep[k]] = k;
  Poset p;
  p.up_.assign(keep.size(), {});
  for (Index k = 0; k < keep.size(); ++k)
    for (Index j : up_[keep[k]])
      if (pos[j] != static_cast<Index>(-1)) p.up_[k].push_back(pos[j]);
  for (auto& u : p.up_) std::sort(u.begin(), u.end());
  build_down(p.up_, p.down_);
  for (Index k : keep) {
    if (!labels_.empty()) p.labels_.push_back(labels_[k]);
    if (!subgroups_.empty()) p.subgroups_.push_back(subgroups_[k]);
  }
  return p;
}

std::vector<Index> Poset::linear_extension() const {
  std::vector<Index> order(size());
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Index a, Index b) { return down_[a].size() < down_[b].size(); });
  return order;
}

std::size_t Poset::height() const {
  std::vector<std::size_t> h(size(), 1);
  std::size_t best = 0;
  for (Index i : linear_extension()) {
    for (Index y : down_[i]) h[i] = std::max(h[i], h[y] + 1);
    best = std::max(best, h[i]);
  }
  return best;
}

std::int64_t euler_mobius(const Poset& x) {
  // f(v) = mu(0, v) = -(1 + sum_{u < v} f(u)); chi~ = mu(0, 1) = -(1 + sum f)
  std::vector<std::int64_t> f(x.size(), 0);
  std::int64_t total = 1;
  for (Index v : x.linear_extension()) {
    std::int64_t s = 1;
    for (Index u : x.down(v)) s = checked_add(s, f[u]);
    f[v] = -s;
    total = checked_add(total, f[v]);
  }
  return -total;
}

std::int64_t euler_orbit_formula(const Poset& x) {
  if (!x.action()) throw Error(ErrorCode::kInvalidArgument, "orbit formula needs a group action");
  const auto& gens = x.action()->generators;
  std::vector<bool> seen(x.size(), false);
  std::int64_t total = -1;
  for (Index r = 0; r < x.size(); ++r) {
    if (seen[r]) continue;
    std::vector<Index> orbit{r};
    seen[r] = true;
    for (std::size_t h = 0; h < orbit.size(); ++h)
      for (const auto& g : gens) {
        Index y = g[orbit[h]];
        if (!seen[y]) seen[y] = true, orbit.push_back(y);
      }
    ensure(x.action()->group_order % orbit.size() == 0, "orbit size does not divide the group order");
    std::int64_t below = euler_from_chains(x.induced(x.down(r)));
    total = checked_add(total, -checked_mul(static_cast<std::int64_t>(orbit.size()), below));
  }
  return total;
}

std::vector<std::uint64_t> chain_counts(const Poset& x) {
  std::vector<std::vector<unsigned __int128>> ends(x.size());
  std::vector<unsigned __int128> totals;
  for (Index v : x.linear_extension()) {
    auto& e = ends[v];
    e.assign(1, 1);
    for (Index u : x.down(v)) {
      const auto& eu = ends[u];
      if (e.size() < eu.size() + 1) e.resize(eu.size() + 1, 0);
      for (std::size_t k = 0; k < eu.size(); ++k) e[k + 1] += eu[k];
    }
    if (totals.size() < e.size()) totals.resize(e.size(), 0);
    for (std::size_t k = 0; k < e.size(); ++k) totals[k] += e[k];
  }
  std::vector<std::uint64_t> out;
  for (auto t : totals) {
    if (t > static_cast<unsigned __int128>(UINT64_MAX)) throw Error(ErrorCode::kCapExceeded, "chain count overflows 64 bits");
    out.push_back(static_cast<std::uint64_t>(t));
  }
  return out;
}

std::int64_t euler_from_chains(const Poset& x) {
  std::int64_t total = -1;
  auto counts = chain_counts(x);
  for (std::size_t k = 0; k < counts.size(); ++k) {
    auto c = static_cast<std::int64_t>(counts[k]);
    total = checked_add(total, k % 2 == 0 ? c : -c);
  }
  return total;
}

Poset core_reduce(const Poset& x) {
  const std::size_t n = x.size();
  std::vector<bool> alive(n, true);
  std::vector<std::size_t> nup(n), ndown(n);
  for (Index i = 0; i < n; ++i) nup[i] = x.up(i).size(), ndown[i] = x.down(i).size();
  auto is_beat = [&](Index v) {
    if (nup[v] > 0)
      for (Index m : x.up(v))
        if (alive[m] && nup[m] + 1 == nup[v]) return true;
    if (ndown[v] > 0)
      for (Index m : x.down(v))
        if (alive[m] && ndown[m] + 1 == ndown[v]) return true;
    return false;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (Index v = 0; v < n; ++v) {
      if (!alive[v] || !is_beat(v)) continue;
      alive[v] = false;
      for (Index u : x.up(v)) --ndown[u];
      for (Index d : x.down(v)) --nup[d];
      changed = true;
    }
  }
  std::vector<Index> keep;
  for (Index v = 0; v < n; ++v)
    if (alive[v]) keep.push_back(v);
  return x.induced(keep);
}

}  // namespace pq
