#include <gtest/gtest.h>

#include <gmpxx.h>

#include <random>

#include "sogamma/linalg.hpp"

using sogamma::QMatrix;
using sogamma::Rational;
using sogamma::SparseVec;
namespace linalg = sogamma::linalg;

namespace {

// Fraction-free Bareiss elimination on an integer copy; rank only.
std::size_t bareiss_rank(const std::vector<std::vector<long>>& in, std::size_t cols) {
  std::vector<std::vector<mpz_class>> a;
  for (const auto& r : in) a.emplace_back(r.begin(), r.end());
  mpz_class prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t p = rank;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[rank], a[p]);
    for (std::size_t r = rank + 1; r < a.size(); ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) a[r][k] = (a[rank][c] * a[r][k] - a[r][c] * a[rank][k]) / prev;
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

struct Case {
  QMatrix m;
  std::vector<std::vector<long>> ints;
};

Case random_case(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int zero_percent, bool low_rank) {
  std::uniform_int_distribution<long> val(-9, 9);
  std::uniform_int_distribution<int> pct(1, 100);
  std::vector<std::vector<long>> ints(rows, std::vector<long>(cols));
  for (auto& r : ints)
    for (auto& x : r) x = pct(rng) <= zero_percent ? 0 : val(rng);
  if (low_rank && rows > 2) {
    // Make the last rows combinations of the first two.
    for (std::size_t r = rows / 2; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) ints[r][c] = 2 * ints[0][c] - 3 * ints[1][c];
  }
  QMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (ints[r][c] != 0) m.add(r, c, Rational(ints[r][c]));
  return {m, ints};
}

std::vector<Rational> densify(const SparseVec& v, std::size_t n) {
  std::vector<Rational> out(n);
  for (const auto& [k, c] : v) out[k] = c;
  return out;
}

}  // namespace

TEST(Linalg, AxpyCancelsExactly) {
  const SparseVec x{{0, Rational(2)}, {3, Rational(4)}};
  const SparseVec y{{0, Rational(1)}, {2, Rational(5)}, {3, Rational(2)}};
  const SparseVec z = linalg::axpy(y, sogamma::rat(1, 2), x);
  ASSERT_EQ(z.size(), 1u);
  EXPECT_EQ(z[0].first, 2u);
  EXPECT_EQ(z[0].second, Rational(5));
}

TEST(Linalg, IdentityAndZero) {
  QMatrix id(4, 4);
  for (std::size_t k = 0; k < 4; ++k) id.add(k, k, Rational(1));
  EXPECT_EQ(linalg::rank(id), 4u);
  EXPECT_TRUE(linalg::kernel(id).empty());
  const QMatrix zero(3, 5);
  EXPECT_EQ(linalg::rank(zero), 0u);
  EXPECT_EQ(linalg::kernel(zero).size(), 5u);
}

TEST(Linalg, EmptyShapes) {
  EXPECT_EQ(linalg::rank(QMatrix(0, 3)), 0u);
  EXPECT_EQ(linalg::kernel(QMatrix(0, 3)).size(), 3u);
  EXPECT_TRUE(linalg::kernel(QMatrix(2, 0)).empty());
}

TEST(Linalg, SerialAndParallelAgree) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> dim(1, 40);
  for (int t = 0; t < 120; ++t) {
    const auto c = random_case(rng, dim(rng), dim(rng), 60, t % 3 == 0);
    EXPECT_EQ(linalg::serial::rref(c.m), linalg::parallel::rref(c.m)) << "case " << t;
  }
}

TEST(Linalg, RankMatchesBareissOracle) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::size_t> dim(1, 40);
  for (int t = 0; t < 150; ++t) {
    const std::size_t rows = dim(rng), cols = dim(rng);
    const auto c = random_case(rng, rows, cols, t % 2 ? 70 : 20, t % 4 == 0);
    EXPECT_EQ(linalg::rank(c.m), bareiss_rank(c.ints, cols)) << "case " << t;
  }
}

TEST(Linalg, KernelIsNullSpaceOfRightSize) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> dim(1, 40);
  for (int t = 0; t < 100; ++t) {
    const std::size_t rows = dim(rng), cols = dim(rng);
    const auto c = random_case(rng, rows, cols, 50, t % 3 == 0);
    const auto ker = linalg::kernel(c.m);
    ASSERT_EQ(ker.size() + bareiss_rank(c.ints, cols), cols);
    std::size_t prev_lead = 0;
    for (std::size_t k = 0; k < ker.size(); ++k) {
      const auto dense = densify(ker[k], cols);
      for (const auto& x : c.m.apply(dense)) EXPECT_TRUE(x.is_zero());
      // Last nonzero coordinate is strictly increasing and equal to 1.
      ASSERT_FALSE(ker[k].empty());
      const auto lead = ker[k].back().first;
      EXPECT_EQ(ker[k].back().second, Rational(1));
      if (k) EXPECT_GT(lead, prev_lead);
      prev_lead = lead;
    }
  }
}

TEST(Linalg, SolveFindsConsistentSystems) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::size_t> dim(1, 25);
  std::uniform_int_distribution<long> val(-4, 4);
  for (int t = 0; t < 100; ++t) {
    const std::size_t rows = dim(rng), cols = dim(rng);
    const auto c = random_case(rng, rows, cols, 50, t % 2 == 0);
    std::vector<Rational> x(cols);
    for (auto& v : x) v = Rational(val(rng));
    const auto b = c.m.apply(x);
    SparseVec bs;
    for (std::size_t r = 0; r < rows; ++r)
      if (!b[r].is_zero()) bs.emplace_back(r, b[r]);
    const auto sol = linalg::solve(c.m, bs);
    ASSERT_TRUE(sol.has_value()) << "case " << t;
    EXPECT_EQ(c.m.apply(densify(*sol, cols)), b);
  }
}

TEST(Linalg, SolveDetectsInconsistency) {
  QMatrix m(2, 2);
  m.add(0, 0, Rational(1));
  m.add(0, 1, Rational(1));
  m.add(1, 0, Rational(2));
  m.add(1, 1, Rational(2));
  EXPECT_FALSE(linalg::solve(m, {{0, Rational(1)}, {1, Rational(1)}}).has_value());
  EXPECT_TRUE(linalg::solve(m, {{0, Rational(1)}, {1, Rational(2)}}).has_value());
}
