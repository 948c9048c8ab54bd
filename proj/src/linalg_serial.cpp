#include "sogamma/linalg.hpp"

#include <utility>

namespace sogamma::linalg::serial {

Echelon rref(const QMatrix& m) {
  std::vector<SparseVec> rows = m.data;
  Echelon e;
  e.cols = m.cols;
  std::size_t next = 0;
  for (std::size_t c = 0; c < m.cols && next < rows.size(); ++c) {
    std::size_t pick = rows.size();
    for (std::size_t i = next; i < rows.size(); ++i) {
      if (!rows[i].empty() && rows[i].front().first == c) {
        pick = i;
        break;
      }
    }
    if (pick == rows.size()) continue;
    std::swap(rows[next], rows[pick]);
    const Rational inv = rows[next].front().second.inverse();
    for (auto& [col, v] : rows[next]) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == next) continue;
      for (const auto& [col, v] : rows[i]) {
        if (col > c) break;
        if (col == c) {
          rows[i] = axpy(rows[i], v, rows[next]);
          break;
        }
      }
    }
    e.pivots.push_back(c);
    ++next;
  }
  rows.resize(next);
  e.rows = std::move(rows);
  return e;
}

}  // namespace sogamma::linalg::serial
