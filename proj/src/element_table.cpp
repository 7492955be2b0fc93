#include "pq/element_table.hpp"

#include <algorithm>
#include <numeric>

#include "pq/error.hpp"

namespace pq {

namespace {

constexpr Elem kEmptySlot = 0xFFFFFFFFu;

thread_local std::vector<Point> scratch;

std::span<Point> scratch_buffer(std::size_t n) {
  if (scratch.size() < n) scratch.resize(n);
  return {scratch.data(), n};
}

}  // namespace

std::uint64_t ElementTable::hash(std::span<const Point> images) const {
  std::uint64_t h = 0x9E3779B97F4A7C15ull;
  for (Point x : images) {
    h ^= x;
    h *= 0xBF58476D1CE4E5B9ull;
    h ^= h >> 29;
  }
  return h;
}

void ElementTable::insert_slot(Elem e) {
  std::uint64_t i = hash(images(e)) & mask_;
  while (slots_[i] != kEmptySlot) i = (i + 1) & mask_;
  slots_[i] = e;
}

std::optional<Elem> ElementTable::lookup(std::span<const Point> key) const {
  std::uint64_t i = hash(key) & mask_;
  while (slots_[i] != kEmptySlot) {
    auto cand = images(slots_[i]);
    if (std::equal(cand.begin(), cand.end(), key.begin())) return slots_[i];
    i = (i + 1) & mask_;
  }
  return std::nullopt;
}

void ElementTable::rebuild_hash() {
  std::size_t cap = 16;
  while (cap < 2 * count_ + 2) cap <<= 1;
  slots_.assign(cap, kEmptySlot);
  mask_ = cap - 1;
  for (Elem e = 0; e < count_; ++e) insert_slot(e);
}

std::shared_ptr<const ElementTable> ElementTable::enumerate(
    const std::vector<Permutation>& generators, std::size_t cap) {
  if (generators.empty()) throw Error(ErrorCode::kInvalidArgument, "no generators");
  std::shared_ptr<ElementTable> t(new ElementTable());
  t->degree_ = generators.front().degree();
  for (const auto& g : generators) {
    if (g.degree() != t->degree_) throw Error(ErrorCode::kInvalidArgument, "generator degree mismatch");
  }
  const std::size_t n = t->degree_;
  auto id = Permutation::identity(n);
  t->data_.assign(id.images().begin(), id.images().end());
  t->count_ = 1;
  t->slots_.assign(16, kEmptySlot);
  t->mask_ = 15;
  t->insert_slot(0);

  std::vector<Point> buf(n);
  for (std::size_t head = 0; head < t->count_; ++head) {
    for (const auto& g : generators) {
      auto x = t->images(static_cast<Elem>(head));
      for (std::size_t i = 0; i < n; ++i) buf[i] = g[x[i]];
      if (t->lookup(buf)) continue;
      if (t->count_ >= cap) {
        throw Error(ErrorCode::kCapExceeded,
                    "group closure exceeds element cap " + std::to_string(cap));
      }
      t->data_.insert(t->data_.end(), buf.begin(), buf.end());
      ++t->count_;
      if (2 * t->count_ + 2 > t->slots_.size()) {
        t->rebuild_hash();
      } else {
        t->insert_slot(static_cast<Elem>(t->count_ - 1));
      }
    }
  }

  // Renumber in lexicographic order.
  std::vector<Elem> order(t->count_);
  std::iota(order.begin(), order.end(), Elem{0});
  std::sort(order.begin(), order.end(), [&](Elem a, Elem b) {
    auto x = t->images(a);
    auto y = t->images(b);
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  });
  std::vector<Point> sorted;
  sorted.reserve(t->data_.size());
  for (Elem e : order) {
    auto x = t->images(e);
    sorted.insert(sorted.end(), x.begin(), x.end());
  }
  t->data_ = std::move(sorted);
  t->rebuild_hash();

  t->inverse_.resize(t->count_);
  t->order_.resize(t->count_);
  for (Elem e = 0; e < t->count_; ++e) {
    auto x = t->images(e);
    for (std::size_t i = 0; i < n; ++i) buf[x[i]] = static_cast<Point>(i);
    t->inverse_[e] = *t->lookup(buf);
    t->order_[e] = static_cast<std::uint32_t>(permutation_order(x));
  }
  for (const auto& g : generators) t->generators_.push_back(t->index_of(g));
  return t;
}

Permutation ElementTable::permutation(Elem e) const {
  auto x = images(e);
  return Permutation(std::vector<Point>(x.begin(), x.end()));
}

Elem ElementTable::multiply(Elem a, Elem b) const {
  auto buf = scratch_buffer(degree_);
  auto x = images(a);
  auto y = images(b);
  for (std::size_t i = 0; i < degree_; ++i) buf[i] = y[x[i]];
  return *lookup(buf);
}

Elem ElementTable::power(Elem a, std::uint64_t k) const {
  k %= order_[a];
  Elem result = identity();
  Elem base = a;
  while (k > 0) {
    if (k & 1) result = multiply(result, base);
    base = multiply(base, base);
    k >>= 1;
  }
  return result;
}

Elem ElementTable::conjugate(Elem x, Elem g) const {
  auto buf = scratch_buffer(degree_);
  auto gi = images(inverse_[g]);
  auto xi = images(x);
  auto gg = images(g);
  for (std::size_t i = 0; i < degree_; ++i) buf[i] = gg[xi[gi[i]]];
  return *lookup(buf);
}

bool ElementTable::commute(Elem a, Elem b) const {
  auto x = images(a);
  auto y = images(b);
  for (std::size_t i = 0; i < degree_; ++i) {
    if (y[x[i]] != x[y[i]]) return false;
  }
  return true;
}

std::optional<Elem> ElementTable::find(std::span<const Point> key) const {
  if (key.size() != degree_) return std::nullopt;
  return lookup(key);
}

Elem ElementTable::index_of(const Permutation& p) const {
  auto e = find(p.images());
  if (!e) throw Error(ErrorCode::kInvalidArgument, "permutation is not in the group");
  return *e;
}

}  // namespace pq
