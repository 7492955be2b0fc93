#include "pq/group.hpp"

#include <algorithm>

#include "pq/error.hpp"

namespace pq {

namespace {

// Closure of `start` (already a subgroup, sorted) under right multiplication
// by `gens`.
std::vector<Elem> close(const ElementTable& t, std::span<const Elem> start,
                        std::span<const Elem> gens) {
  ElemSet seen(t.size());
  std::vector<Elem> out;
  if (start.empty()) {
    out.push_back(ElementTable::identity());
    seen.set(ElementTable::identity());
  } else {
    out.assign(start.begin(), start.end());
    for (Elem e : start) seen.set(e);
  }
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (Elem g : gens) {
      Elem y = t.multiply(out[head], g);
      if (!seen.test(y)) {
        seen.set(y);
        out.push_back(y);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Group Group::whole(std::shared_ptr<const ElementTable> table) {
  Group g;
  g.elements_.resize(table->size());
  for (Elem e = 0; e < table->size(); ++e) g.elements_[e] = e;
  g.generators_ = table->generators();
  g.table_ = std::move(table);
  return g;
}

Group Group::trivial(std::shared_ptr<const ElementTable> table) {
  Group g;
  g.table_ = std::move(table);
  g.elements_ = {ElementTable::identity()};
  return g;
}

Group Group::generated(std::shared_ptr<const ElementTable> table, std::vector<Elem> gens) {
  Group g;
  std::erase(gens, ElementTable::identity());
  g.elements_ = close(*table, {}, gens);
  g.generators_ = std::move(gens);
  g.table_ = std::move(table);
  return g;
}

Group Group::from_elements(std::shared_ptr<const ElementTable> table, std::vector<Elem> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  Group g = trivial(table);
  for (Elem e : elements) {
    if (!g.contains(e)) g = g.join(e);
  }
  ensure(g.elements_ == elements, "element set is not closed under multiplication");
  return g;
}

Group Group::from_parts(std::shared_ptr<const ElementTable> table, std::vector<Elem> elements,
                        std::vector<Elem> gens) {
  Group g;
  g.table_ = std::move(table);
  g.elements_ = std::move(elements);
  g.generators_ = std::move(gens);
  return g;
}

bool Group::contains(Elem e) const {
  return std::binary_search(elements_.begin(), elements_.end(), e);
}

bool Group::contains(const Group& other) const {
  if (other.order() > order() || order() % other.order() != 0) return false;
  for (Elem g : other.generators_) {
    if (!contains(g)) return false;
  }
  return true;
}

Group Group::join(Elem x) const {
  if (contains(x)) return *this;
  Group g;
  g.table_ = table_;
  g.generators_ = generators_;
  g.generators_.push_back(x);
  g.elements_ = close(*table_, elements_, g.generators_);
  ensure(g.elements_.size() % elements_.size() == 0, "Lagrange violated in join");
  return g;
}

Group Group::conjugate(Elem g) const {
  Group out;
  out.table_ = table_;
  out.elements_.reserve(elements_.size());
  for (Elem x : elements_) out.elements_.push_back(table_->conjugate(x, g));
  std::sort(out.elements_.begin(), out.elements_.end());
  out.generators_.reserve(generators_.size());
  for (Elem x : generators_) out.generators_.push_back(table_->conjugate(x, g));
  return out;
}

std::string Group::describe() const {
  std::string out = "<";
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (i) out += ", ";
    out += table_->permutation(generators_[i]).cycle_string();
  }
  out += "> order " + std::to_string(order());
  return out;
}

std::size_t ElementVectorHash::operator()(const std::vector<Elem>& v) const noexcept {
  std::uint64_t h = 0xCBF29CE484222325ull ^ v.size();
  for (Elem e : v) {
    h ^= e;
    h *= 0x100000001B3ull;
    h ^= h >> 31;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace pq
