// Literal threshold-scan evaluation of Γ, kept independent of the echelon
// shortcut in gamma.cpp: its own dense elimination, its own construction of
// the D1 U^j functionals (Laurent-level composition, then restriction).

#include <algorithm>

#include "sogamma/gamma.hpp"

namespace sogamma {

namespace {

using Dense = std::vector<std::vector<Rational>>;

/// Naive elimination to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> dense_rref(Dense& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
    std::size_t pick = row;
    while (pick < a.size() && a[pick][c].is_zero()) ++pick;
    if (pick == a.size()) continue;
    std::swap(a[row], a[pick]);
    const Rational inv = a[row][c].inverse();
    for (auto& x : a[row]) x *= inv;
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == row || a[r][c].is_zero()) continue;
      const Rational f = a[r][c];
      for (std::size_t k = 0; k < cols; ++k) a[r][k] -= f * a[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

std::size_t dense_rank(Dense a, std::size_t cols) { return dense_rref(a, cols).size(); }

/// Columns `keep` of the dense matrix rows.
Dense select(const Dense& rows, const std::vector<std::size_t>& keep) {
  Dense out;
  out.reserve(rows.size());
  for (const auto& r : rows) {
    std::vector<Rational> sub;
    sub.reserve(keep.size());
    for (auto c : keep) sub.push_back(r[c]);
    out.push_back(std::move(sub));
  }
  return out;
}

std::vector<std::vector<Rational>> null_space(Dense a, std::size_t cols) {
  const auto pivots = dense_rref(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(cols);
    v[f] = Rational(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational acc;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!a[k].is_zero() && !b[k].is_zero()) acc += a[k] * b[k];
  return acc;
}

std::vector<Rational> levels_ascending(const SliceBasis& slice) {
  std::vector<Rational> levels;
  for (const auto& e : slice.elements) levels.push_back(e.level);
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  return levels;
}

std::vector<std::size_t> columns_up_to(const SliceBasis& slice, const Rational& r) {
  std::vector<std::size_t> keep;
  for (std::size_t e = 0; e < slice.size(); ++e)
    if (slice.elements[e].level <= r) keep.push_back(e);
  return keep;
}

void require_small(const SliceBasis& slice) {
  if (slice.size() > kOracleMaxSliceDim)
    throw std::length_error("gamma_oracle: slice dimension " + std::to_string(slice.size()) + " exceeds limit " +
                            std::to_string(kOracleMaxSliceDim));
}

GammaResult oracle_positive(const SOComplex& s, int i) {
  GammaResult result{i, GammaValue::infinity(), std::nullopt};
  const int k = 4 * i - 3;
  auto slice = std::make_shared<const SliceBasis>(slice_basis(*s.module, k));
  require_small(*slice);
  if (slice->empty()) return result;

  Dense constraints = restrict_to_slice(s.d, k).dense();
  std::vector<Rational> last;
  LambdaMap d1_u = s.d1;
  for (int j = 0; j < i; ++j) {
    auto row = restrict_to_slice(d1_u, k).dense();
    std::vector<Rational> functional = row.empty() ? std::vector<Rational>(slice->size()) : row.front();
    if (j + 1 < i)
      constraints.push_back(std::move(functional));
    else
      last = std::move(functional);
    d1_u = compose(d1_u, s.u);
  }

  for (const auto& r : levels_ascending(*slice)) {
    const auto keep = columns_up_to(*slice, r);
    const Dense m = select(constraints, keep);
    Dense with_last = m;
    with_last.push_back(select(Dense{last}, keep).front());
    if (dense_rank(with_last, keep.size()) == dense_rank(m, keep.size())) continue;

    const std::vector<Rational> l = select(Dense{last}, keep).front();
    for (const auto& v : null_space(m, keep.size())) {
      if (dot(l, v).is_zero()) continue;
      std::vector<Rational> coords(slice->size());
      for (std::size_t q = 0; q < keep.size(); ++q) coords[keep[q]] = v[q];
      result.value = GammaValue::finite(r);
      result.witness = GammaWitness{QVector{slice, std::move(coords)}, {}};
      return result;
    }
    throw std::logic_error("gamma_oracle: rank test and null space disagree");
  }
  return result;
}

GammaResult oracle_nonpositive(const SOComplex& s, int i) {
  GammaResult result{i, GammaValue::infinity(), std::nullopt};
  const int k = 4 * i - 3;
  auto slice = std::make_shared<const SliceBasis>(slice_basis(*s.module, k));
  require_small(*slice);
  const SliceBasis target = slice_basis(*s.module, k - 1);
  const Dense d = restrict_to_slice(s.d, k).dense();

  // rhs_j = U^j D2 (x^((i+j)/2)) as a dense vector in slice k-1, built at Laurent level.
  const auto line = BigradedModule::lambda_line();
  std::vector<std::pair<int, std::vector<Rational>>> free_cols;
  std::vector<Rational> b(target.size());
  for (int j = 0; j <= -i; ++j) {
    if ((i + j) % 2 != 0) continue;
    LambdaVector v = s.d2.apply(LambdaVector{{0, LaurentPoly::x((i + j) / 2)}});
    for (int t = 0; t < j; ++t) v = s.u.apply(v);
    std::vector<Rational> col(target.size());
    for (const auto& [g, p] : v) {
      auto pos = target.position(g);
      if (!pos) throw std::logic_error("gamma_oracle: right-hand side leaves slice");
      col[*pos] = p.coeff(target.elements[*pos].power);
    }
    if (j == -i)
      b = std::move(col);
    else
      free_cols.emplace_back(j, std::move(col));
  }

  std::vector<Rational> thresholds{Rational(0)};
  for (const auto& r : levels_ascending(*slice))
    if (Rational(0) < r) thresholds.push_back(r);

  for (const auto& r : thresholds) {
    const auto keep = columns_up_to(*slice, r);
    const std::size_t n = free_cols.size() + keep.size();
    Dense sys(target.size(), std::vector<Rational>(n + 1));
    for (std::size_t row = 0; row < target.size(); ++row) {
      for (std::size_t q = 0; q < free_cols.size(); ++q) sys[row][q] = -free_cols[q].second[row];
      for (std::size_t q = 0; q < keep.size(); ++q) sys[row][free_cols.size() + q] = d[row][keep[q]];
      sys[row][n] = b[row];
    }
    Dense reduced = sys;
    const auto pivots = dense_rref(reduced, n + 1);
    if (!pivots.empty() && pivots.back() == n) continue;

    std::vector<Rational> x(n);
    for (std::size_t p = 0; p < pivots.size(); ++p) x[pivots[p]] = reduced[p][n];
    GammaWitness w;
    std::vector<Rational> coords(slice->size());
    for (std::size_t q = 0; q < keep.size(); ++q) coords[keep[q]] = x[free_cols.size() + q];
    w.alpha = QVector{slice, std::move(coords)};
    for (std::size_t q = 0; q < free_cols.size(); ++q) {
      const int j = free_cols[q].first;
      if (!x[q].is_zero()) w.a_coeffs.emplace_back(j, LaurentPoly::monomial(x[q], (i + j) / 2));
    }
    w.a_coeffs.emplace_back(-i, LaurentPoly(1));
    result.value = GammaValue::finite(r);
    result.witness = std::move(w);
    return result;
  }
  return result;
}

}  // namespace

GammaResult gamma_oracle(const SOComplex& s, int i) {
  const auto report = validate(s);
  if (!report.ok) throw InvalidComplex("gamma_oracle: " + report.str());
  return i >= 1 ? oracle_positive(s, i) : oracle_nonpositive(s, i);
}

}  // namespace sogamma
