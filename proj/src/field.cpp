#include "pq/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "pq/error.hpp"

namespace pq {

namespace {

struct Modulus {
  std::uint32_t p, k;
  std::vector<std::uint32_t> coeffs;  // constant term first, monic
};

// Fixed irreducible polynomials, one per non-prime q <= 81.
const std::vector<Modulus>& modulus_table() {
  static const std::vector<Modulus> table = {
      {2, 2, {1, 1, 1}},
      {2, 3, {1, 1, 0, 1}},
      {2, 4, {1, 1, 0, 0, 1}},
      {2, 5, {1, 0, 1, 0, 0, 1}},
      {2, 6, {1, 1, 0, 1, 1, 0, 1}},
      {3, 2, {2, 2, 1}},
      {3, 3, {1, 2, 0, 1}},
      {3, 4, {2, 0, 0, 2, 1}},
      {5, 2, {2, 4, 1}},
      {7, 2, {3, 6, 1}},
  };
  return table;
}

bool prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

const GaloisField& GaloisField::get(std::uint32_t q) {
  static std::mutex mu;
  static std::map<std::uint32_t, std::unique_ptr<GaloisField>> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(q); it != cache.end()) return *it->second;
  if (q > 81 || q < 2) throw Error(ErrorCode::kUnsupportedSpec, "field size " + std::to_string(q) + " not in 2..81");
  std::unique_ptr<GaloisField> f;
  if (prime(q)) {
    f.reset(new GaloisField(q, 1, {0, 1}));
  } else {
    for (const auto& m : modulus_table()) {
      std::uint32_t pk = 1;
      for (std::uint32_t i = 0; i < m.k; ++i) pk *= m.p;
      if (pk == q) f.reset(new GaloisField(m.p, m.k, m.coeffs));
    }
  }
  if (!f) throw Error(ErrorCode::kUnsupportedSpec, "field size " + std::to_string(q) + " is not a prime power");
  return *cache.emplace(q, std::move(f)).first->second;
}

GaloisField::GaloisField(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus)
    : p_(p), k_(k), q_(1), modulus_(std::move(modulus)) {
  for (std::uint32_t i = 0; i < k; ++i) q_ *= p;
  auto digits = [&](std::uint32_t v) {
    std::vector<std::uint32_t> d(k_);
    for (auto& c : d) c = v % p_, v /= p_;
    return d;
  };
  auto pack = [&](const std::vector<std::uint32_t>& d) {
    std::uint32_t v = 0;
    for (std::size_t i = d.size(); i-- > 0;) v = v * p_ + d[i];
    return static_cast<Value>(v);
  };
  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  inv_.assign(q_, 0);
  for (std::uint32_t a = 0; a < q_; ++a) {
    auto da = digits(a);
    std::vector<std::uint32_t> n(k_);
    for (std::uint32_t i = 0; i < k_; ++i) n[i] = (p_ - da[i]) % p_;
    neg_[a] = pack(n);
    for (std::uint32_t b = 0; b < q_; ++b) {
      auto db = digits(b);
      std::vector<std::uint32_t> s(k_);
      for (std::uint32_t i = 0; i < k_; ++i) s[i] = (da[i] + db[i]) % p_;
      add_[a * q_ + b] = pack(s);
      // schoolbook product then reduce by the monic modulus
      std::vector<std::uint32_t> prod(2 * k_, 0);
      for (std::uint32_t i = 0; i < k_; ++i)
        for (std::uint32_t j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
      for (std::uint32_t d = 2 * k_ - 1; d >= k_; --d) {
        std::uint32_t c = prod[d];
        if (c == 0) continue;
        for (std::uint32_t i = 0; i <= k_; ++i) {
          std::uint32_t& t = prod[d - k_ + i];
          t = (t + (p_ - c) * modulus_[i]) % p_;
        }
      }
      prod.resize(k_);
      mul_[a * q_ + b] = pack(prod);
    }
  }
  for (std::uint32_t a = 1; a < q_; ++a)
    for (std::uint32_t b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) inv_[a] = static_cast<Value>(b);
  for (std::uint32_t a = 1; a < q_; ++a)
    ensure(inv_[a] != 0, "modulus for GF(" + std::to_string(q_) + ") is reducible");
  for (std::uint32_t a = 1; a < q_; ++a) {
    std::uint32_t ord = 1;
    for (Value x = static_cast<Value>(a); x != 1; x = mul(x, static_cast<Value>(a))) ++ord;
    if (ord == q_ - 1) {
      primitive_ = static_cast<Value>(a);
      break;
    }
  }
}

GaloisField::Value GaloisField::inv(Value a) const {
  if (a == 0) throw Error(ErrorCode::kInvalidArgument, "inverse of zero");
  return inv_[a];
}

GaloisField::Value GaloisField::pow(Value a, std::uint64_t e) const {
  Value r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

GaloisField::Value GaloisField::frobenius(Value a, std::uint32_t times) const {
  for (std::uint32_t i = 0; i < times; ++i) a = pow(a, p_);
  return a;
}

}  // namespace pq
