#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pq {

enum class BaseKind { kSym, kAlt, kCyc, kDih, kSL, kPSL, kPGL, kSp, kPSigmaL, kPGammaL, kPerm };

enum class ExtKind { kFrob, kGraph, kSub };

struct SpecExtension {
  ExtKind kind = ExtKind::kGraph;
  std::uint32_t k = 0;  // frob(k)
  std::string name;     // sub(name)
  friend bool operator==(const SpecExtension&, const SpecExtension&) = default;
};

/// One generator of a Perm[...] base: disjoint cycles of 1-based points.
using CycleList = std::vector<std::vector<std::uint32_t>>;

/// Parsed group constructor expression:
///   spec := base (":" ext)*
///   base := Sym(n) | Alt(n) | Cyc(n) | Dih(n) | SL(n,q) | PSL(n,q) | PGL(n,q)
///         | Sp(n,q) | PSigmaL(n,q) | PGammaL(n,q) | Perm[cycles, ...]
///   ext  := frob(k) | graph | sub(name)
struct GroupSpec {
  BaseKind base = BaseKind::kSym;
  std::uint32_t n = 0;
  std::uint32_t q = 0;
  std::vector<CycleList> perm_generators;
  std::vector<SpecExtension> extensions;

  /// Throws UnsupportedSpec on syntax errors. Whitespace is ignored.
  static GroupSpec parse(std::string_view text);
  std::string print() const;

  bool is_matrix() const;
  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

}  // namespace pq
