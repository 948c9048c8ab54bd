#include "sogamma/linalg.hpp"

#include <algorithm>

namespace sogamma::linalg::parallel {

namespace {

bool contains(const SparseVec& v, std::size_t col, Rational* out) {
  auto it = std::lower_bound(v.begin(), v.end(), col,
                             [](const auto& e, std::size_t i) { return e.first < i; });
  if (it == v.end() || it->first != col) return false;
  *out = it->second;
  return true;
}

}  // namespace

Echelon rref(const QMatrix& m) {
  std::vector<SparseVec> work = m.data;
  std::vector<std::vector<std::size_t>> bucket(m.cols);
  for (std::size_t i = 0; i < work.size(); ++i)
    if (!work[i].empty()) bucket[work[i].front().first].push_back(i);

  std::vector<std::size_t> pivot_cols;
  std::vector<std::size_t> pivot_rows;

  // Forward elimination, one leading column at a time.
  for (std::size_t c = 0; c < m.cols; ++c) {
    auto& rows = bucket[c];
    if (rows.empty()) continue;
    auto best = std::min_element(rows.begin(), rows.end(), [&](std::size_t a, std::size_t b) {
      if (work[a].size() != work[b].size()) return work[a].size() < work[b].size();
      return a < b;
    });
    const std::size_t p = *best;
    const Rational inv = work[p].front().second.inverse();
    for (auto& [col, v] : work[p]) v *= inv;

    std::vector<std::size_t> others;
    others.reserve(rows.size() - 1);
    for (auto r : rows)
      if (r != p) others.push_back(r);

    const auto n_others = static_cast<long>(others.size());
#pragma omp parallel for schedule(dynamic, 4) if (n_others > 8)
    for (long k = 0; k < n_others; ++k) {
      SparseVec& row = work[others[k]];
      const Rational lead = row.front().second;
      row = axpy(row, lead, work[p]);
    }
    for (auto r : others)
      if (!work[r].empty()) bucket[work[r].front().first].push_back(r);

    pivot_cols.push_back(c);
    pivot_rows.push_back(p);
    rows.clear();
    rows.shrink_to_fit();
  }

  // Back substitution: clear each pivot column from the rows above it.
  for (std::size_t k = pivot_cols.size(); k-- > 0;) {
    const SparseVec& pivot = work[pivot_rows[k]];
    const std::size_t pc = pivot_cols[k];
    const auto n_above = static_cast<long>(k);
#pragma omp parallel for schedule(dynamic, 8) if (n_above > 16)
    for (long j = 0; j < n_above; ++j) {
      SparseVec& row = work[pivot_rows[j]];
      Rational v;
      if (contains(row, pc, &v)) row = axpy(row, v, pivot);
    }
  }

  Echelon e;
  e.cols = m.cols;
  e.pivots = std::move(pivot_cols);
  e.rows.reserve(pivot_rows.size());
  for (auto r : pivot_rows) e.rows.push_back(std::move(work[r]));
  return e;
}

}  // namespace sogamma::linalg::parallel
