#include <gtest/gtest.h>

#include "sogamma/grmod.hpp"
#include "sogamma/socx.hpp"

using namespace sogamma;

TEST(Grmod, FloorDivMod) {
  EXPECT_EQ(floor_div(-3, 8), -1);
  EXPECT_EQ(floor_mod(-3, 8), 5);
  EXPECT_EQ(floor_div(16, 8), 2);
  EXPECT_EQ(floor_mod(16, 8), 0);
}

TEST(Grmod, SliceBasisOfY1) {
  const auto y1 = build_y1();
  const auto s1 = slice_basis(*y1.module, 1);
  ASSERT_EQ(s1.size(), 1u);
  EXPECT_EQ((*y1.module)[s1.elements[0].gen].id, "α");
  EXPECT_EQ(s1.elements[0].power, 0);

  const auto sm3 = slice_basis(*y1.module, -3);
  ASSERT_EQ(sm3.size(), 1u);
  EXPECT_EQ((*y1.module)[sm3.elements[0].gen].id, "β");
  EXPECT_EQ(sm3.elements[0].power, -1);
  EXPECT_EQ(sm3.elements[0].level, rat(49, 120) - Rational(1));

  EXPECT_TRUE(slice_basis(*y1.module, 2).empty());
  EXPECT_EQ(slice_basis(*y1.module, 9).elements[0].level, rat(121, 120));
}

TEST(Grmod, SliceOrderIsByLevelThenIndex) {
  auto m = std::make_shared<const BigradedModule>(
      std::vector<Generator>{{"a", 1, rat(1, 2)}, {"b", 1, rat(1, 3)}, {"c", 9, rat(1, 3)}});
  const auto s = slice_basis(*m, 1);
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s.elements[0].gen, 2u);  // c at x^-1, level -2/3
  EXPECT_EQ(s.elements[1].gen, 1u);
  EXPECT_EQ(s.elements[2].gen, 0u);
  EXPECT_EQ(s.position(0), std::optional<std::size_t>(2));
}

TEST(Grmod, RestrictionOfU) {
  const auto y1 = build_y1();
  const auto u5 = restrict_to_slice(y1.u, 5);
  ASSERT_EQ(u5.rows, 1u);
  ASSERT_EQ(u5.cols, 1u);
  EXPECT_EQ(u5.at(0, 0), Rational(4));
  EXPECT_EQ(restrict_to_slice(y1.u, 1).at(0, 0), Rational(6));
}

TEST(Grmod, CheckedRejectsInhomogeneousEntry) {
  const auto y1 = build_y1();
  using Entry = std::tuple<std::size_t, std::size_t, LaurentPoly>;
  EXPECT_THROW(LambdaMap::checked(y1.module, y1.module, -4, {Entry{1, 0, LaurentPoly::x(1)}}), InvalidMap);
  EXPECT_NO_THROW(LambdaMap::checked(y1.module, y1.module, -4, {Entry{1, 0, LaurentPoly(4)}}));
}

TEST(Grmod, ComposeOfUWithItself) {
  const auto y1 = build_y1();
  const auto u2 = compose(y1.u, y1.u);
  EXPECT_EQ(u2.degree(), -8);
  EXPECT_EQ(u2.entry(0, 0), LaurentPoly::monomial(Rational(24), -1));
  EXPECT_EQ(u2.entry(1, 1), LaurentPoly::monomial(Rational(24), -1));
  EXPECT_TRUE(u2.entry(0, 1).is_zero());
}

TEST(Grmod, QVectorDegree) {
  const auto y1 = build_y1();
  auto slice = std::make_shared<const SliceBasis>(slice_basis(*y1.module, 1));
  QVector v{slice, {Rational(0)}};
  EXPECT_FALSE(v.deg_I().has_value());
  v.coords[0] = Rational(3);
  EXPECT_EQ(v.deg_I(), std::optional<Rational>(rat(1, 120)));
  const auto lam = v.to_lambda();
  ASSERT_EQ(lam.size(), 1u);
  EXPECT_EQ(lam.at(0), LaurentPoly(3));
}
