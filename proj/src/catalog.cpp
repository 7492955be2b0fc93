#include "pq/catalog.hpp"

#include <algorithm>
#include <numeric>

#include "pq/error.hpp"
#include "pq/field.hpp"
#include "pq/group_ops.hpp"

namespace pq {

namespace {

using Value = GaloisField::Value;
using Vec = std::vector<Value>;
using Matrix = std::vector<Value>;  // row-major n x n

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

Matrix identity_matrix(std::uint32_t n) {
  Matrix m(n * n, 0);
  for (std::uint32_t i = 0; i < n; ++i) m[i * n + i] = 1;
  return m;
}

Matrix inverse_transpose(const GaloisField& f, Matrix a, std::uint32_t n) {
  Matrix inv = identity_matrix(n);
  for (std::uint32_t c = 0; c < n; ++c) {
    std::uint32_t piv = c;
    while (a[piv * n + c] == 0) ++piv;
    for (std::uint32_t j = 0; j < n; ++j) {
      std::swap(a[c * n + j], a[piv * n + j]);
      std::swap(inv[c * n + j], inv[piv * n + j]);
    }
    Value s = f.inv(a[c * n + c]);
    for (std::uint32_t j = 0; j < n; ++j) {
      a[c * n + j] = f.mul(a[c * n + j], s);
      inv[c * n + j] = f.mul(inv[c * n + j], s);
    }
    for (std::uint32_t r = 0; r < n; ++r) {
      if (r == c || a[r * n + c] == 0) continue;
      Value t = f.neg(a[r * n + c]);
      for (std::uint32_t j = 0; j < n; ++j) {
        a[r * n + j] = f.add(a[r * n + j], f.mul(t, a[c * n + j]));
        inv[r * n + j] = f.add(inv[r * n + j], f.mul(t, inv[c * n + j]));
      }
    }
  }
  Matrix t(n * n);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) t[i * n + j] = inv[j * n + i];
  return t;
}

/// Points acted on by a matrix group: nonzero vectors, projective points, or
/// projective points followed by hyperplanes (given by normal vectors).
class Geometry {
 public:
  Geometry(const GaloisField& f, std::uint32_t n, bool projective, bool doubled)
      : f_(f), n_(n), projective_(projective), doubled_(doubled) {
    std::uint64_t total = ipow(f.size(), n);
    lookup_.assign(total, -1);
    for (std::uint64_t code = 1; code < total; ++code) {
      Vec v = decode(code);
      if (projective_ && normalize(v) != v) continue;
      lookup_[code] = static_cast<std::int32_t>(points_.size());
      points_.push_back(std::move(v));
    }
  }

  std::size_t degree() const { return points_.size() * (doubled_ ? 2 : 1); }

  Permutation act(const Matrix& a) const {
    std::vector<Point> img(degree());
    for (std::size_t i = 0; i < points_.size(); ++i) img[i] = index(times(points_[i], a));
    if (doubled_) {
      Matrix dual = inverse_transpose(f_, a, n_);
      std::size_t off = points_.size();
      for (std::size_t i = 0; i < points_.size(); ++i)
        img[off + i] = static_cast<Point>(off + index(times(points_[i], dual)));
    }
    return Permutation(std::move(img));
  }

  Permutation frobenius(std::uint32_t k) const {
    std::vector<Point> img(degree());
    for (std::size_t i = 0; i < points_.size(); ++i) {
      Vec v = points_[i];
      for (auto& x : v) x = f_.frobenius(x, k);
      img[i] = index(v);
      if (doubled_) img[points_.size() + i] = static_cast<Point>(points_.size() + img[i]);
    }
    return Permutation(std::move(img));
  }

  Permutation duality() const {
    std::vector<Point> img(degree());
    std::size_t off = points_.size();
    for (std::size_t i = 0; i < off; ++i) {
      img[i] = static_cast<Point>(off + i);
      img[off + i] = static_cast<Point>(i);
    }
    return Permutation(std::move(img));
  }

  const std::vector<Vec>& points() const { return points_; }

 private:
  Vec decode(std::uint64_t code) const {
    Vec v(n_);
    for (auto& x : v) x = static_cast<Value>(code % f_.size()), code /= f_.size();
    return v;
  }
  Vec normalize(Vec v) const {
    auto it = std::find_if(v.begin(), v.end(), [](Value x) { return x != 0; });
    Value s = f_.inv(*it);
    for (auto& x : v) x = f_.mul(x, s);
    return v;
  }
  Vec times(const Vec& v, const Matrix& a) const {
    Vec out(n_, 0);
    for (std::uint32_t i = 0; i < n_; ++i) {
      if (v[i] == 0) continue;
      for (std::uint32_t j = 0; j < n_; ++j) out[j] = f_.add(out[j], f_.mul(v[i], a[i * n_ + j]));
    }
    return out;
  }
  Point index(Vec v) const {
    if (projective_) v = normalize(std::move(v));
    std::uint64_t code = 0;
    for (std::size_t i = n_; i-- > 0;) code = code * f_.size() + v[i];
    return static_cast<Point>(lookup_[code]);
  }

  const GaloisField& f_;
  std::uint32_t n_;
  bool projective_, doubled_;
  std::vector<Vec> points_;
  std::vector<std::int32_t> lookup_;
};

struct CandidateDraft {
  std::vector<Permutation> gens;
  std::vector<LieTag> tags;
  bool gdf_is_subgroup = false;  // G_df = H rather than the non-graph part of G
};

struct Draft {
  std::size_t degree = 0;
  std::vector<Permutation> gens;
  std::vector<Permutation> graph_gens;
  std::vector<Permutation> frob_witnesses;
  std::vector<CandidateDraft> candidates;
  std::optional<Geometry> geometry;
  std::vector<Permutation> sl_gens;
  std::optional<Permutation> diag;
};

LieTag tag(std::string family, std::uint32_t rank, std::uint32_t q, std::uint32_t twist = 1) {
  std::uint32_t p = q;
  for (std::uint32_t d = 2; d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  return LieTag{std::move(family), twist, q, rank, p};
}

std::vector<LieTag> psl_tags(std::uint32_t n, std::uint32_t q) {
  auto a = [](std::uint32_t r, std::uint32_t qq) { return tag("A" + std::to_string(r), r, qq); };
  if (n == 2 && (q == 4 || q == 5)) return {a(1, 4), a(1, 5)};
  if ((n == 2 && q == 7) || (n == 3 && q == 2)) return {a(1, 7), a(2, 2)};
  return {a(n - 1, q)};
}

std::vector<LieTag> alt_tags(std::uint32_t n) {
  switch (n) {
    case 4: return psl_tags(2, 3);
    case 5: return psl_tags(2, 4);
    case 6: return psl_tags(2, 9);
    case 8: return psl_tags(4, 2);
    default: return {};
  }
}

std::vector<LieTag> sp_tags(std::uint32_t m, std::uint32_t q) {
  if (m == 1) return psl_tags(2, q);
  if (m == 2) return {tag("B2", 2, q)};
  return {tag("C" + std::to_string(m), m, q)};
}

Permutation cycle_perm(std::size_t degree, std::vector<Point> cyc) {
  if (cyc.size() < 2) return Permutation::identity(degree);
  return Permutation::from_cycles(degree, {cyc});
}

std::vector<Permutation> alt_generators(std::uint32_t n) {
  std::vector<Permutation> gens;
  for (Point i = 2; i < n; ++i) gens.push_back(cycle_perm(n, {0, 1, i}));
  if (gens.empty()) gens.push_back(Permutation::identity(n));
  return gens;
}

void check_degree(std::uint64_t degree) {
  if (degree > kMaxActionDegree)
    throw Error(ErrorCode::kActionTooLarge,
                "action degree " + std::to_string(degree) + " exceeds " + std::to_string(kMaxActionDegree));
  if (degree == 0) throw Error(ErrorCode::kUnsupportedSpec, "degree must be positive");
}

void build_permutation_base(const GroupSpec& spec, Draft& d) {
  std::uint32_t n = spec.n;
  switch (spec.base) {
    case BaseKind::kSym: {
      check_degree(n);
      d.degree = n;
      std::vector<Point> all(n);
      std::iota(all.begin(), all.end(), Point{0});
      d.gens = {cycle_perm(n, {0, 1}), cycle_perm(n, all)};
      if (n == 3) d.candidates.push_back({d.gens, psl_tags(2, 2)});
      if (n == 6) d.candidates.push_back({d.gens, sp_tags(2, 2)});
      if (auto tags = alt_tags(n); !tags.empty())
        d.candidates.push_back({alt_generators(n), tags, n == 8});
      return;
    }
    case BaseKind::kAlt:
      check_degree(n);
      d.degree = n;
      d.gens = alt_generators(n);
      if (auto tags = alt_tags(n); !tags.empty()) d.candidates.push_back({d.gens, tags});
      return;
    case BaseKind::kCyc: {
      check_degree(n);
      d.degree = n;
      std::vector<Point> all(n);
      std::iota(all.begin(), all.end(), Point{0});
      d.gens = {cycle_perm(n, all)};
      return;
    }
    case BaseKind::kDih: {
      if (n < 3) throw Error(ErrorCode::kUnsupportedSpec, "Dih(n) needs n >= 3");
      check_degree(n);
      d.degree = n;
      std::vector<Point> all(n), refl(n);
      std::iota(all.begin(), all.end(), Point{0});
      for (Point i = 0; i < n; ++i) refl[i] = static_cast<Point>((n - i) % n);
      d.gens = {cycle_perm(n, all), Permutation(refl)};
      return;
    }
    case BaseKind::kPerm: {
      std::uint32_t deg = 1;
      for (const auto& g : spec.perm_generators)
        for (const auto& c : g)
          for (auto x : c) {
            if (x == 0) throw Error(ErrorCode::kUnsupportedSpec, "points are 1-based");
            deg = std::max(deg, x);
          }
      check_degree(deg);
      d.degree = deg;
      for (const auto& g : spec.perm_generators) {
        std::vector<std::vector<Point>> cycles;
        for (const auto& c : g) cycles.emplace_back(c.begin(), c.end());
        for (auto& c : cycles)
          for (auto& x : c) --x;
        try {
          d.gens.push_back(Permutation::from_cycles(deg, cycles));
        } catch (const Error& e) {
          throw Error(ErrorCode::kUnsupportedSpec, std::string("bad permutation: ") + e.what());
        }
      }
      return;
    }
    default: break;
  }
}

void build_matrix_base(const GroupSpec& spec, bool doubled, Draft& d) {
  const GaloisField& f = GaloisField::get(spec.q);
  std::uint32_t n = spec.n;
  std::uint64_t q = spec.q;
  bool vectors = spec.base == BaseKind::kSL || spec.base == BaseKind::kSp;
  if (n < 2 || (spec.base == BaseKind::kSp && n % 2 != 0))
    throw Error(ErrorCode::kUnsupportedSpec, "unsupported dimension in " + spec.print());
  if (n > 12) check_degree(kMaxActionDegree + 1);
  std::uint64_t count = vectors ? ipow(q, n) - 1 : (ipow(q, n) - 1) / (q - 1);
  check_degree(count * (doubled ? 2 : 1));
  d.geometry.emplace(f, n, !vectors, doubled);
  const Geometry& geo = *d.geometry;
  d.degree = geo.degree();

  std::vector<Value> basis;  // GF(p)-basis of GF(q): 1, x, ..., x^{k-1}
  for (std::uint32_t t = 0, b = 1; t < f.degree(); ++t, b *= f.characteristic()) basis.push_back(static_cast<Value>(b));

  if (spec.base == BaseKind::kSp) {
    std::uint32_t m = n / 2;
    // form (u, v) = sum_i u_i v_{m+i} - u_{m+i} v_i
    auto form = [&](const Vec& u, const Vec& v) {
      Value s = 0;
      for (std::uint32_t i = 0; i < m; ++i) {
        s = f.add(s, f.mul(u[i], v[m + i]));
        s = f.sub(s, f.mul(u[m + i], v[i]));
      }
      return s;
    };
    std::vector<Vec> directions;
    for (const auto& v : geo.points()) {
      auto it = std::find_if(v.begin(), v.end(), [](Value x) { return x != 0; });
      if (*it == 1) directions.push_back(v);
    }
    for (const auto& u : directions)
      for (Value a : basis) {
        // transvection v -> v + a (v, u) u, as the matrix of the images of e_i
        Matrix t(n * n);
        for (std::uint32_t i = 0; i < n; ++i) {
          Vec e(n, 0);
          e[i] = 1;
          Value c = f.mul(a, form(e, u));
          for (std::uint32_t j = 0; j < n; ++j) t[i * n + j] = f.add(e[j], f.mul(c, u[j]));
        }
        d.gens.push_back(geo.act(t));
      }
    d.candidates.push_back({d.gens, sp_tags(m, spec.q)});
    return;
  }

  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      if (i == j) continue;
      for (Value a : basis) {
        Matrix t = identity_matrix(n);
        t[i * n + j] = a;
        d.sl_gens.push_back(geo.act(t));
      }
    }
  d.gens = d.sl_gens;
  if (spec.base == BaseKind::kSL) {
    d.candidates.push_back({d.gens, psl_tags(n, spec.q)});
    return;
  }
  d.candidates.push_back({d.sl_gens, psl_tags(n, spec.q)});
  Matrix diag = identity_matrix(n);
  diag[0] = f.primitive();
  d.diag = geo.act(diag);
  if (spec.base == BaseKind::kPGL || spec.base == BaseKind::kPGammaL) d.gens.push_back(*d.diag);
  if (spec.base == BaseKind::kPSigmaL || spec.base == BaseKind::kPGammaL) {
    Permutation fr = geo.frobenius(1);
    if (!fr.is_identity()) {
      d.gens.push_back(fr);
      d.frob_witnesses.push_back(fr);
    }
  }
  if (spec.base == BaseKind::kPSigmaL && n == 2 && spec.q == 9) d.candidates.push_back({d.gens, sp_tags(2, 2)});
  if (spec.base == BaseKind::kPGammaL && n == 2 && spec.q == 8)
    d.candidates.push_back({d.gens, {tag("G2", 1, 3, 2)}});
}

void apply_extension(const GroupSpec& spec, const SpecExtension& ext, Draft& d) {
  switch (ext.kind) {
    case ExtKind::kFrob: {
      if (!d.geometry) throw Error(ErrorCode::kNotAMatrixGroup, "frob needs a matrix group, got " + spec.print());
      const GaloisField& f = GaloisField::get(spec.q);
      if (ext.k == 0 || f.degree() % ext.k != 0)
        throw Error(ErrorCode::kUnsupportedSpec,
                    "frob(" + std::to_string(ext.k) + ") must divide the field degree " + std::to_string(f.degree()));
      Permutation fr = d.geometry->frobenius(ext.k);
      if (!fr.is_identity()) {
        d.gens.push_back(fr);
        d.frob_witnesses.push_back(fr);
      }
      return;
    }
    case ExtKind::kGraph:
      d.graph_gens.push_back(d.geometry->duality());
      return;
    case ExtKind::kSub: {
      bool pgaml29 = spec.base == BaseKind::kPGammaL && spec.n == 2 && spec.q == 9 && d.graph_gens.empty();
      if (!pgaml29) throw Error(ErrorCode::kUnknownName, "named subgroups are defined only in PGammaL(2,9)");
      Permutation fr = d.geometry->frobenius(1);
      std::vector<Permutation> gens = d.sl_gens;
      d.frob_witnesses.clear();
      d.candidates.resize(1);
      if (ext.name == "PGL29") {
        gens.push_back(*d.diag);
      } else if (ext.name == "S6") {
        gens.push_back(fr);
        d.frob_witnesses.push_back(fr);
        d.candidates.push_back({gens, sp_tags(2, 2)});
      } else if (ext.name == "M10") {
        gens.push_back(*d.diag * fr);
        d.frob_witnesses.push_back(gens.back());
      } else {
        throw Error(ErrorCode::kUnknownName, "unknown subgroup name '" + ext.name + "'");
      }
      d.gens = std::move(gens);
      return;
    }
  }
}

std::vector<Elem> indices(const ElementTable& t, const std::vector<Permutation>& perms) {
  std::vector<Elem> out;
  for (const auto& p : perms) out.push_back(t.index_of(p));
  return out;
}

}  // namespace

std::string LieTag::name() const {
  return (twist > 1 ? std::to_string(twist) : std::string()) + family + "(" + std::to_string(q) + ")";
}

std::vector<LieTag> CatalogGroup::tags() const {
  std::vector<LieTag> out;
  for (const auto& c : candidates)
    if (c.subgroup == group) out.insert(out.end(), c.tags.begin(), c.tags.end());
  return out;
}

CatalogGroup build_group(const GroupSpec& spec, std::size_t element_cap) {
  bool doubled = std::any_of(spec.extensions.begin(), spec.extensions.end(),
                             [](const SpecExtension& e) { return e.kind == ExtKind::kGraph; });
  Draft d;
  if (spec.is_matrix()) {
    if (doubled && (spec.base == BaseKind::kSL || spec.base == BaseKind::kSp))
      throw Error(ErrorCode::kActionNotDoubled, "graph automorphisms need a projective base, got " + spec.print());
    if (doubled && spec.n < 3)
      throw Error(ErrorCode::kActionNotDoubled, "graph automorphisms need dimension >= 3");
    build_matrix_base(spec, doubled, d);
  } else {
    if (doubled) throw Error(ErrorCode::kActionNotDoubled, "graph needs a matrix group acting on points and hyperplanes");
    build_permutation_base(spec, d);
  }
  for (const auto& ext : spec.extensions) apply_extension(spec, ext, d);

  std::vector<Permutation> all = d.gens;
  all.insert(all.end(), d.graph_gens.begin(), d.graph_gens.end());
  auto table = ElementTable::enumerate(all, element_cap);

  CatalogGroup out;
  out.spec = spec;
  out.group = Group::whole(table);
  out.frobenius_witnesses = indices(*table, d.frob_witnesses);
  out.graph_witnesses = indices(*table, d.graph_gens);
  Group nongraph = Group::generated(table, indices(*table, d.gens));
  for (const auto& c : d.candidates) {
    LieCandidate lc;
    lc.subgroup = Group::generated(table, indices(*table, c.gens));
    lc.tags = c.tags;
    lc.gdf = c.gdf_is_subgroup ? lc.subgroup : nongraph;
    out.candidates.push_back(std::move(lc));
  }
  return out;
}

CatalogGroup build_group(std::string_view spec, std::size_t element_cap) {
  for (const auto& e : catalog_entries())
    if (e.spec.empty() && e.name == spec) throw Error(ErrorCode::kUnsupportedSpec, e.name + ": " + e.note);
  return build_group(GroupSpec::parse(spec), element_cap);
}

LieCandidate embed_candidate(const CatalogGroup& g, const CatalogGroup& sub) {
  const ElementTable& t = g.group.table();
  if (sub.group.table().degree() != t.degree())
    throw Error(ErrorCode::kInvalidArgument, "subgroup " + sub.spec.print() + " acts on a different number of points");
  auto lift = [&](const Group& h) {
    std::vector<Elem> gens;
    for (Elem e : h.generators()) {
      auto idx = t.find(h.table().images(e));
      if (!idx) throw Error(ErrorCode::kInvalidArgument, sub.spec.print() + " is not contained in " + g.spec.print());
      gens.push_back(*idx);
    }
    return Group::generated(g.group.table_ptr(), gens);
  };
  LieCandidate c;
  c.subgroup = lift(sub.group);
  c.tags = sub.tags();
  return c;
}

std::uint64_t family_order(BaseKind base, std::uint32_t n, std::uint32_t q) {
  std::uint64_t p = q, a = 1;
  for (std::uint64_t d = 2; d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  for (std::uint64_t t = p; t < q; t *= p) ++a;
  if (base == BaseKind::kSp) {
    std::uint32_t m = n / 2;
    std::uint64_t o = ipow(q, m * m);
    for (std::uint32_t i = 1; i <= m; ++i) o *= ipow(q, 2 * i) - 1;
    return o;
  }
  std::uint64_t sl = ipow(q, n * (n - 1) / 2);
  for (std::uint32_t i = 2; i <= n; ++i) sl *= ipow(q, i) - 1;
  std::uint64_t psl = sl / std::gcd<std::uint64_t>(n, q - 1);
  switch (base) {
    case BaseKind::kSL: return sl;
    case BaseKind::kPSL: return psl;
    case BaseKind::kPGL: return sl;
    case BaseKind::kPSigmaL: return psl * a;
    case BaseKind::kPGammaL: return sl * a;
    default: throw Error(ErrorCode::kNotAMatrixGroup, "not a matrix family");
  }
}

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = {
      {"Alt6", "Alt(6)", 360, "isomorphic to PSL(2,9)"},
      {"Sym6", "Sym(6)", 720, "isomorphic to PSp(4,2)"},
      {"PSL29", "PSL(2,9)", 360, ""},
      {"PGL29", "PGL(2,9)", 720, ""},
      {"M10", "PGammaL(2,9):sub(M10)", 720, "outer coset contains no involutions"},
      {"PGammaL29", "PGammaL(2,9)", 1440, ""},
      {"PSigmaL24", "PSigmaL(2,4)", 120, "isomorphic to Sym(5)"},
      {"PSigmaL216", "PSigmaL(2,16)", 16320, ""},
      {"PSigmaL227", "PSigmaL(2,27)", 29484, ""},
      {"PSL32", "PSL(3,2)", 168, "isomorphic to PSL(2,7)"},
      {"PSL32graph", "PSL(3,2):graph", 336, "isomorphic to PGL(2,7)"},
      {"PSL33", "PSL(3,3)", 5616, ""},
      {"PSL34fg", "PSL(3,4):frob(1):graph", 80640, "field and graph extension"},
      {"Ree3", "PGammaL(2,8)", 1512, "isomorphic to 2G2(3)"},
      {"2F4(2)", "", 35942400, "order exceeds the element cap; not constructed"},
  };
  return entries;
}

const std::vector<std::string>& small_group_corpus() {
  static const std::vector<std::string> corpus = [] {
    std::vector<std::string> c = {"Sym(3)", "Sym(4)", "Sym(5)", "Sym(6)", "Alt(4)", "Alt(5)", "Alt(6)"};
    for (int n = 3; n <= 12; ++n) c.push_back("Dih(" + std::to_string(n) + ")");
    c.push_back("SL(2,3)");
    c.push_back("Perm[(1,2,3,4)(5,6,7,8),(1,5,3,7)(2,8,4,6)]");
    for (int q : {4, 5, 7, 8, 9}) c.push_back("PSL(2," + std::to_string(q) + ")");
    c.push_back("PSL(3,2)");
    return c;
  }();
  return corpus;
}

}  // namespace pq
