#include "sogamma/linalg.hpp"

#include <map>

namespace sogamma::linalg {

SparseVec axpy(const SparseVec& y, const Rational& a, const SparseVec& x) {
  SparseVec out;
  out.reserve(y.size() + x.size());
  auto i = y.begin();
  auto j = x.begin();
  while (i != y.end() || j != x.end()) {
    if (j == x.end() || (i != y.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == y.end() || j->first < i->first) {
      out.emplace_back(j->first, -(a * j->second));
      ++j;
    } else {
      Rational v = i->second - a * j->second;
      if (!v.is_zero()) out.emplace_back(i->first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

std::vector<SparseVec> kernel_from(const Echelon& e) {
  std::vector<bool> is_pivot(e.cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  // free column -> (pivot column, entry) pairs
  std::map<std::size_t, std::vector<std::pair<std::size_t, Rational>>> by_free;
  for (std::size_t r = 0; r < e.rows.size(); ++r)
    for (const auto& [c, v] : e.rows[r])
      if (!is_pivot[c]) by_free[c].emplace_back(e.pivots[r], v);

  std::vector<SparseVec> basis;
  for (std::size_t f = 0; f < e.cols; ++f) {
    if (is_pivot[f]) continue;
    SparseVec v;
    if (auto it = by_free.find(f); it != by_free.end())
      for (const auto& [p, val] : it->second) v.emplace_back(p, -val);
    v.emplace_back(f, Rational(1));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<SparseVec> kernel(const QMatrix& m) { return kernel_from(rref(m)); }

std::size_t rank(const QMatrix& m) { return rref(m).rank(); }

std::optional<SparseVec> solve(const QMatrix& m, const SparseVec& b) {
  QMatrix aug(m.rows, m.cols + 1);
  aug.data = m.data;
  for (const auto& [r, v] : b) aug.data[r].emplace_back(m.cols, v);
  const Echelon e = rref(aug);
  SparseVec x;
  for (std::size_t r = 0; r < e.rank(); ++r) {
    if (e.pivots[r] == m.cols) return std::nullopt;
    const auto& row = e.rows[r];
    if (!row.empty() && row.back().first == m.cols) x.emplace_back(e.pivots[r], row.back().second);
  }
  return x;
}

}  // namespace sogamma::linalg
