#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "sogamma/grmod.hpp"

namespace sogamma::linalg {

/// Reduced row echelon form: rows[r] has a 1 in column pivots[r], zeros in
/// every other pivot column, and pivots is strictly increasing.
struct Echelon {
  std::size_t cols = 0;
  std::vector<SparseVec> rows;
  std::vector<std::size_t> pivots;

  std::size_t rank() const { return pivots.size(); }
  friend bool operator==(const Echelon&, const Echelon&) = default;
};

/// Returns y - a * x.
SparseVec axpy(const SparseVec& y, const Rational& a, const SparseVec& x);

namespace serial {
/// Textbook Gauss-Jordan elimination. Reference implementation.
Echelon rref(const QMatrix& m);
}  // namespace serial

namespace parallel {
/// Sparse elimination with shortest-row pivoting; the independent row
/// updates for each pivot run under OpenMP.
Echelon rref(const QMatrix& m);
}  // namespace parallel

inline Echelon rref(const QMatrix& m) { return parallel::rref(m); }

/// Null-space basis read off the RREF: one vector per free column f, whose
/// last nonzero coordinate is f itself (coefficient 1). Leading positions
/// are therefore pairwise distinct.
std::vector<SparseVec> kernel_from(const Echelon& e);
std::vector<SparseVec> kernel(const QMatrix& m);

std::size_t rank(const QMatrix& m);

/// Some x with m x = b (free variables set to zero), or nullopt.
std::optional<SparseVec> solve(const QMatrix& m, const SparseVec& b);

}  // namespace sogamma::linalg
