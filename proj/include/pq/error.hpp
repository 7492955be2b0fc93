#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pq {

enum class ErrorCode {
  kCapExceeded,
  kInvalidArgument,
  kUnsupportedSpec,
  kActionTooLarge,
  kNotAMatrixGroup,
  kActionNotDoubled,
  kUnknownName,
  kMatrixTooLarge,
  kTagMismatch,
  kMultipleCandidates,
  kNoTaggedCandidate,
  kRankTwoOuter,
  kGdfMissing,
  kInvariantViolated,
};

std::string_view to_string(ErrorCode code);

/// Base error for every failure raised by the library. Input and capacity
/// errors map to CLI exit code 2.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Throws kInvariantViolated when `cond` is false. Used for mathematical
/// invariants that are asserted unconditionally (Lagrange, boundary^2 = 0).
inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw Error(ErrorCode::kInvariantViolated, what);
}

}  // namespace pq
