#include "pq/group_spec.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "pq/error.hpp"

namespace pq {

namespace {

constexpr std::pair<std::string_view, BaseKind> kBaseNames[] = {
    {"PSigmaL", BaseKind::kPSigmaL}, {"PGammaL", BaseKind::kPGammaL}, {"PSL", BaseKind::kPSL},
    {"PGL", BaseKind::kPGL},         {"Sym", BaseKind::kSym},         {"Alt", BaseKind::kAlt},
    {"Cyc", BaseKind::kCyc},         {"Dih", BaseKind::kDih},         {"SL", BaseKind::kSL},
    {"Sp", BaseKind::kSp},           {"Perm", BaseKind::kPerm},
};

std::string_view base_name(BaseKind k) {
  for (auto [name, kind] : kBaseNames)
    if (kind == k) return name;
  return "?";
}

class Parser {
 public:
  explicit Parser(std::string text) : s_(std::move(text)) {}

  GroupSpec run() {
    GroupSpec spec;
    parse_base(spec);
    while (accept(':')) spec.extensions.push_back(parse_ext());
    if (pos_ != s_.size()) fail("trailing input");
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::kUnsupportedSpec,
                msg + " at offset " + std::to_string(pos_) + " in \"" + s_ + "\"");
  }
  bool accept(char c) {
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool accept_word(std::string_view w) {
    if (s_.compare(pos_, w.size(), w) == 0) {
      pos_ += w.size();
      return true;
    }
    return false;
  }
  std::uint32_t number() {
    std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<unsigned>(s_[pos_++] - '0');
      if (v > 1'000'000) fail("number too large");
    }
    if (pos_ == start) fail("expected a number");
    return static_cast<std::uint32_t>(v);
  }

  void parse_base(GroupSpec& spec) {
    for (auto [name, kind] : kBaseNames) {
      if (!accept_word(name)) continue;
      spec.base = kind;
      if (kind == BaseKind::kPerm) {
        expect('[');
        do spec.perm_generators.push_back(cycles());
        while (accept(','));
        expect(']');
        return;
      }
      expect('(');
      spec.n = number();
      if (spec.is_matrix()) {
        expect(',');
        spec.q = number();
      }
      expect(')');
      return;
    }
    fail("unknown base group");
  }

  CycleList cycles() {
    CycleList out;
    if (pos_ >= s_.size() || s_[pos_] != '(') fail("expected a cycle");
    while (accept('(')) {
      std::vector<std::uint32_t> cyc;
      if (!accept(')')) {
        do cyc.push_back(number());
        while (accept(','));
        expect(')');
      }
      if (!cyc.empty()) out.push_back(std::move(cyc));
    }
    return out;
  }

  SpecExtension parse_ext() {
    SpecExtension e;
    if (accept_word("frob(")) {
      e.kind = ExtKind::kFrob;
      e.k = number();
      expect(')');
    } else if (accept_word("graph")) {
      e.kind = ExtKind::kGraph;
    } else if (accept_word("sub(")) {
      e.kind = ExtKind::kSub;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) e.name += s_[pos_++];
      if (e.name.empty()) fail("expected a subgroup name");
      expect(')');
    } else {
      fail("unknown extension");
    }
    return e;
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

bool GroupSpec::is_matrix() const {
  switch (base) {
    case BaseKind::kSL:
    case BaseKind::kPSL:
    case BaseKind::kPGL:
    case BaseKind::kSp:
    case BaseKind::kPSigmaL:
    case BaseKind::kPGammaL: return true;
    default: return false;
  }
}

GroupSpec GroupSpec::parse(std::string_view text) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  return Parser(std::move(compact)).run();
}

std::string GroupSpec::print() const {
  std::string out(base_name(base));
  if (base == BaseKind::kPerm) {
    out += '[';
    for (std::size_t g = 0; g < perm_generators.size(); ++g) {
      if (g) out += ',';
      if (perm_generators[g].empty()) out += "()";
      for (const auto& cyc : perm_generators[g]) {
        out += '(';
        for (std::size_t i = 0; i < cyc.size(); ++i) out += (i ? "," : "") + std::to_string(cyc[i]);
        out += ')';
      }
    }
    out += ']';
  } else {
    out += '(' + std::to_string(n);
    if (is_matrix()) out += ',' + std::to_string(q);
    out += ')';
  }
  for (const auto& e : extensions) {
    switch (e.kind) {
      case ExtKind::kFrob: out += ":frob(" + std::to_string(e.k) + ")"; break;
      case ExtKind::kGraph: out += ":graph"; break;
      case ExtKind::kSub: out += ":sub(" + e.name + ")"; break;
    }
  }
  return out;
}

}  // namespace pq
