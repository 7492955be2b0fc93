#include "pq/homology.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

#include "pq/error.hpp"

namespace pq {

namespace {

using BigInt = boost::multiprecision::cpp_int;

struct Overflow {};

std::int64_t mul_sub(std::int64_t a, std::int64_t c, std::int64_t b) {
  std::int64_t prod, r;
  if (__builtin_mul_overflow(c, b, &prod) || __builtin_sub_overflow(a, prod, &r)) throw Overflow{};
  return r;
}
BigInt mul_sub(const BigInt& a, const BigInt& c, const BigInt& b) { return a - c * b; }

bool is_unit(std::int64_t v) { return v == 1 || v == -1; }
bool is_unit(const BigInt& v) { return v == 1 || v == -1; }

template <class T>
using Column = std::vector<std::pair<Index, T>>;

// col -= c * piv, both sorted by row
template <class T>
void axpy(Column<T>& col, const T& c, const Column<T>& piv) {
  Column<T> out;
  out.reserve(col.size() + piv.size());
  std::size_t i = 0, j = 0;
  while (i < col.size() || j < piv.size()) {
    if (j == piv.size() || (i < col.size() && col[i].first < piv[j].first)) {
      out.push_back(std::move(col[i++]));
    } else if (i == col.size() || piv[j].first < col[i].first) {
      out.emplace_back(piv[j].first, mul_sub(T(0), c, piv[j].second));
      ++j;
    } else {
      T v = mul_sub(col[i].second, c, piv[j].second);
      if (v != 0) out.emplace_back(col[i].first, std::move(v));
      ++i, ++j;
    }
  }
  col = std::move(out);
}

struct Reduction {
  std::uint64_t unit_pivots = 0;
  std::vector<Index> unit_pivot_rows;
  std::vector<Column<BigInt>> residual;  // entries only in non-pivot rows
};

// Column reduction with unit pivots only, then clearing of the residual
// columns against the pivot rows. The residual spans, modulo the pivot
// columns, the same lattice as the original columns.
template <class T>
Reduction reduce(std::size_t rows, const std::vector<SparseColumn>& input) {
  std::vector<std::int64_t> pivot_of_row(rows, -1);
  std::vector<Column<T>> pivots;
  std::vector<Column<T>> residual;
  for (const auto& raw : input) {
    Column<T> col;
    col.reserve(raw.size());
    for (const auto& [r, v] : raw)
      if (v != 0) col.emplace_back(r, T(v));
    while (!col.empty()) {
      Index low = col.back().first;
      std::int64_t pc = pivot_of_row[low];
      if (pc < 0) break;
      const Column<T>& piv = pivots[pc];
      T c = col.back().second * piv.back().second;  // pivot entries are +-1
      axpy(col, c, piv);
    }
    if (col.empty()) continue;
    if (is_unit(col.back().second)) {
      pivot_of_row[col.back().first] = static_cast<std::int64_t>(pivots.size());
      pivots.push_back(std::move(col));
    } else {
      residual.push_back(std::move(col));
    }
  }
  Reduction out;
  out.unit_pivots = pivots.size();
  for (const auto& p : pivots) out.unit_pivot_rows.push_back(p.back().first);
  for (auto& col : residual) {
    for (;;) {
      std::int64_t hit = -1;
      for (std::size_t i = col.size(); i-- > 0;)
        if (pivot_of_row[col[i].first] >= 0) {
          hit = static_cast<std::int64_t>(i);
          break;
        }
      if (hit < 0) break;
      const Column<T>& piv = pivots[pivot_of_row[col[hit].first]];
      T c = col[hit].second * piv.back().second;
      axpy(col, c, piv);
    }
    if (col.empty()) continue;
    Column<BigInt> big;
    for (auto& [r, v] : col) big.emplace_back(r, BigInt(v));
    out.residual.push_back(std::move(big));
  }
  return out;
}

constexpr std::size_t kDenseCellCap = 4'000'000;

// Diagonal entries of a dense elimination; not yet a divisibility chain.
std::vector<BigInt> dense_diagonal(std::vector<std::vector<BigInt>> a) {
  std::vector<BigInt> diag;
  const std::size_t m = a.size(), n = m ? a[0].size() : 0;
  for (std::size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      // smallest nonzero entry of the remaining block
      std::size_t bi = m, bj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (a[i][j] != 0 && (bi == m || abs(a[i][j]) < abs(a[bi][bj]))) bi = i, bj = j;
      if (bi == m) return diag;
      std::swap(a[t], a[bi]);
      for (auto& row : a) std::swap(row[t], row[bj]);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a[i][t] == 0) continue;
        BigInt q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < n; ++j) a[i][j] -= q * a[t][j];
        clean &= a[i][t] == 0;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (a[t][j] == 0) continue;
        BigInt q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < m; ++i) a[i][j] -= q * a[i][t];
        clean &= a[t][j] == 0;
      }
      if (clean) break;
    }
    diag.push_back(abs(a[t][t]));
  }
  return diag;
}

std::vector<std::string> invariant_factors(std::vector<BigInt> d) {
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      BigInt g = gcd(d[i], d[j]);
      BigInt l = d[i] / g * d[j];
      d[i] = g, d[j] = l;
    }
  std::vector<std::string> out;
  for (const auto& x : d)
    if (x > 1) out.push_back(x.str());
  return out;
}

struct Outcome {
  SmithResult smith;
  std::vector<Index> unit_pivot_rows;
};

Outcome smith_with_pivots(std::size_t rows, const std::vector<SparseColumn>& columns) {
  Reduction red;
  try {
    red = reduce<std::int64_t>(rows, columns);
  } catch (const Overflow&) {
    red = reduce<BigInt>(rows, columns);
  }
  Outcome out;
  out.smith.rank = red.unit_pivots;
  out.unit_pivot_rows = std::move(red.unit_pivot_rows);
  if (!red.residual.empty()) {
    std::vector<Index> used;
    for (const auto& c : red.residual)
      for (const auto& e : c) used.push_back(e.first);
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    if (used.size() * red.residual.size() > kDenseCellCap)
      throw Error(ErrorCode::kMatrixTooLarge, "residual block " + std::to_string(used.size()) + "x" +
                                                  std::to_string(red.residual.size()) + " too large for dense Smith form");
    std::vector<std::vector<BigInt>> dense(used.size(), std::vector<BigInt>(red.residual.size()));
    for (std::size_t j = 0; j < red.residual.size(); ++j)
      for (const auto& [r, v] : red.residual[j]) {
        auto i = static_cast<std::size_t>(std::lower_bound(used.begin(), used.end(), r) - used.begin());
        dense[i][j] = v;
      }
    auto diag = dense_diagonal(std::move(dense));
    out.smith.rank += diag.size();
    out.smith.invariant_factors = invariant_factors(std::move(diag));
  }
  return out;
}

// Boundary of every d-simplex as sparse columns over the (d-1)-simplices.
std::vector<SparseColumn> boundary(const SimplicialComplex& k, int d, const std::vector<bool>& skip) {
  std::vector<SparseColumn> cols;
  cols.reserve(k.count(d));
  Simplex face;
  for (std::size_t i = 0; i < k.count(d); ++i) {
    if (!skip.empty() && skip[i]) continue;
    SparseColumn col;
    if (d == 0) {
      col.emplace_back(0, 1);
    } else {
      auto s = k.simplex(d, i);
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        face.clear();
        for (std::size_t j = 0; j < s.size(); ++j)
          if (j != drop) face.push_back(s[j]);
        auto idx = k.find(face);
        ensure(idx.has_value(), "complex is not closed under faces");
        col.emplace_back(static_cast<Index>(*idx), drop % 2 == 0 ? 1 : -1);
      }
      std::sort(col.begin(), col.end());
    }
    cols.push_back(std::move(col));
  }
  return cols;
}

void assert_boundary_squared_zero(const SimplicialComplex& k, int d) {
  if (d < 1) return;
  auto top = boundary(k, d, {});
  auto below = boundary(k, d - 1, {});
  for (const auto& col : top) {
    std::map<Index, std::int64_t> acc;
    for (const auto& [f, c] : col)
      for (const auto& [g, c2] : below[f]) acc[g] += c * c2;
    for (const auto& [g, v] : acc) ensure(v == 0, "boundary squared is not zero");
  }
}

}  // namespace

SmithResult smith_normal_form(std::size_t rows, const std::vector<SparseColumn>& columns) {
  for (const auto& c : columns) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      ensure(c[i].first < rows, "matrix entry outside the row range");
      ensure(i == 0 || c[i - 1].first < c[i].first, "sparse column rows must be strictly increasing");
    }
  }
  return smith_with_pivots(rows, columns).smith;
}

bool operator==(const HomologyProfile& a, const HomologyProfile& b) {
  int top = std::max(a.top_degree, b.top_degree);
  for (int d = -1; d <= top; ++d)
    if (a.rank(d) != b.rank(d) || a.torsion_at(d) != b.torsion_at(d)) return false;
  return a.euler == b.euler;
}

std::uint64_t HomologyProfile::rank(int d) const {
  if (d < -1 || d > top_degree) return 0;
  return ranks[d + 1];
}

const std::vector<std::string>& HomologyProfile::torsion_at(int d) const {
  static const std::vector<std::string> none;
  if (d < -1 || d > top_degree) return none;
  return torsion[d + 1];
}

bool HomologyProfile::has_torsion() const {
  return std::any_of(torsion.begin(), torsion.end(), [](const auto& t) { return !t.empty(); });
}

std::vector<int> HomologyProfile::support() const {
  std::vector<int> out;
  for (int d = -1; d <= top_degree; ++d)
    if (rank(d) != 0 || !torsion_at(d).empty()) out.push_back(d);
  return out;
}

bool HomologyProfile::concentrated_free(int d) const {
  auto s = support();
  return torsion_at(d).empty() && (s.empty() || (s.size() == 1 && s[0] == d));
}

std::string HomologyProfile::summary() const {
  std::string out;
  for (int d = -1; d <= top_degree; ++d) {
    std::string parts;
    if (rank(d)) parts = "Z" + (rank(d) > 1 ? "^" + std::to_string(rank(d)) : std::string());
    for (const auto& t : torsion_at(d)) parts += (parts.empty() ? "" : "+") + ("Z/" + t);
    if (parts.empty()) continue;
    if (!out.empty()) out += ' ';
    out += "H" + std::to_string(d) + "=" + parts;
  }
  return out.empty() ? "0" : out;
}

HomologyProfile homology(const SimplicialComplex& k, std::size_t cap) {
  if (k.total_simplices() > cap)
    throw Error(ErrorCode::kMatrixTooLarge, "complex has " + std::to_string(k.total_simplices()) +
                                                " simplices, cap is " + std::to_string(cap));
  const int top = k.dimension();
  HomologyProfile h;
  h.top_degree = top;
  h.ranks.assign(top + 2, 0);
  h.torsion.assign(top + 2, {});
  // rank_of[d + 1] = rank of the boundary map out of degree d
  std::vector<std::uint64_t> rank_of(top + 3, 0);
  std::vector<std::vector<std::string>> factors_of(top + 3);
  std::vector<bool> cleared;
  for (int d = top; d >= 0; --d) {
    assert_boundary_squared_zero(k, d);
    auto cols = boundary(k, d, cleared);
    auto out = smith_with_pivots(k.count(d - 1), cols);
    rank_of[d + 1] = out.smith.rank;
    factors_of[d + 1] = std::move(out.smith.invariant_factors);
    cleared.assign(k.count(d - 1), false);
    for (Index r : out.unit_pivot_rows) cleared[r] = true;
  }
  for (int d = -1; d <= top; ++d) {
    std::uint64_t c = k.count(d);
    h.ranks[d + 1] = c - rank_of[d + 1] - rank_of[d + 2];
    h.torsion[d + 1] = factors_of[d + 2];
  }
  std::int64_t chi = 0;
  for (int d = -1; d <= top; ++d) chi += (((d % 2) + 2) % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(h.rank(d));
  h.euler = chi;
  ensure(chi == k.euler_from_faces(), "Euler characteristic from homology disagrees with face counts");
  return h;
}

bool is_homology_spherical(const SimplicialComplex& k, int d) {
  return k.dimension() == d && homology(k).concentrated_free(d);
}

CohenMacaulayResult is_cohen_macaulay(const SimplicialComplex& k) {
  CohenMacaulayResult r;
  if (!is_homology_spherical(k, k.dimension())) {
    r.ok = false;
    r.witness = Simplex{};
    return r;
  }
  for (int d = 0; d <= k.dimension(); ++d)
    for (std::size_t i = 0; i < k.count(d); ++i) {
      auto s = k.simplex(d, i);
      if (!is_homology_spherical(link(k, s), k.dimension() - d - 1)) {
        r.ok = false;
        r.witness = Simplex(s.begin(), s.end());
        return r;
      }
    }
  return r;
}

MvReport mv_rank_identity_check(const SimplicialComplex& k, const SimplicialComplex& l) {
  if (l.vertex_count() > k.vertex_count()) throw Error(ErrorCode::kInvalidArgument, "L has more vertices than K");
  std::vector<Index> lv(l.vertex_count());
  std::iota(lv.begin(), lv.end(), Index{0});
  auto restricted = full_subcomplex(k, lv);
  if (restricted.simplices() != l.simplices())
    throw Error(ErrorCode::kInvalidArgument, "L is not the full subcomplex of K on its vertices");
  for (std::size_t i = 0; i < k.count(1); ++i) {
    auto e = k.simplex(1, i);
    if (e[0] >= l.vertex_count() && e[1] >= l.vertex_count())
      throw Error(ErrorCode::kInvalidArgument, "vertices of K outside L are not discrete");
  }
  MvReport rep;
  auto hl = homology(l);
  auto hk = homology(k);
  const int n = l.dimension();
  bool spherical = l.dimension() == n && hl.concentrated_free(n);
  std::vector<HomologyProfile> links;
  bool below = true;
  for (std::size_t i = 0; i < k.count(0); ++i) {
    Index v = k.simplex(0, i)[0];
    if (v < l.vertex_count()) continue;
    Simplex sv{v};
    auto lk = link(k, sv);
    below &= lk.dimension() < n;
    links.push_back(homology(lk));
  }
  rep.new_vertices = links.size();
  rep.rank_identity_mode = spherical && below;
  rep.euler_k = hk.euler;
  rep.euler_predicted = hl.euler;
  for (const auto& h : links) rep.euler_predicted -= h.euler;
  int top = std::max(hk.top_degree, hl.top_degree);
  for (const auto& h : links) top = std::max(top, h.top_degree + 1);
  for (int m = -1; m <= top; ++m) {
    rep.ranks_k.push_back(hk.rank(m));
    std::uint64_t pred = hl.rank(m);
    for (const auto& h : links) pred += h.rank(m - 1);
    rep.predicted_ranks.push_back(pred);
  }
  rep.holds = rep.euler_k == rep.euler_predicted && (!rep.rank_identity_mode || rep.ranks_k == rep.predicted_ranks);
  return rep;
}

}  // namespace pq
