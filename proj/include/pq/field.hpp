#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace pq {

/// GF(p^k) for q <= 81. An element is stored as its coefficient vector over
/// GF(p) packed base p: c_0 + c_1 p + ... + c_{k-1} p^{k-1}, so 0 and 1 are
/// the field's zero and one. Arithmetic is table driven.
class GaloisField {
 public:
  using Value = std::uint8_t;

  /// Throws UnsupportedSpec unless q is a prime power <= 81.
  static const GaloisField& get(std::uint32_t q);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return k_; }
  std::uint32_t size() const { return q_; }
  /// Coefficients of the monic modulus, constant term first (length k+1).
  std::span<const std::uint32_t> modulus() const { return modulus_; }

  Value add(Value a, Value b) const { return add_[a * q_ + b]; }
  Value mul(Value a, Value b) const { return mul_[a * q_ + b]; }
  Value neg(Value a) const { return neg_[a]; }
  Value sub(Value a, Value b) const { return add(a, neg(b)); }
  /// Throws InvalidArgument on zero.
  Value inv(Value a) const;
  Value pow(Value a, std::uint64_t e) const;
  /// x -> x^(p^times)
  Value frobenius(Value a, std::uint32_t times = 1) const;
  /// Least generator of the multiplicative group.
  Value primitive() const { return primitive_; }

 private:
  GaloisField(std::uint32_t p, std::uint32_t k, std::vector<std::uint32_t> modulus);

  std::uint32_t p_, k_, q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<Value> add_, mul_, neg_, inv_;
  Value primitive_ = 1;
};

}  // namespace pq
