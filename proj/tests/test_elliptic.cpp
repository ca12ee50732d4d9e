#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "aps/elliptic.hpp"

using namespace aps;

namespace {
bool contains(const std::vector<Point>& v, const Point& p) { return std::find(v.begin(), v.end(), p) != v.end(); }
}  // namespace

TEST(Elliptic, GroupLaw) {
  const Curve E = FactoredCurve(0, 3, -5).curve();
  EXPECT_EQ(ec_add(E, {-1, 4}, {-3, -6}), (Point{27, -144}));
  EXPECT_EQ(ec_add(E, {0, 0}, {0, 0}), Point::infinity());
  const Curve S = FactoredCurve(0, 1, -3).curve();
  EXPECT_EQ(ec_add(S, {-1, 2}, {-1, 2}), (Point{1, 0}));
  EXPECT_THROW(ec_add(E, {1, 1}, {0, 0}), std::invalid_argument);
}

TEST(Elliptic, ScalarMultiplication) {
  const Curve E = FactoredCurve(0, 3, -5).curve();
  const Point P{-1, 4};
  EXPECT_EQ(scalar_mul(E, 3, P), ec_add(E, P, ec_add(E, P, P)));
  EXPECT_EQ(scalar_mul(E, -2, P), ec_neg(ec_add(E, P, P)));
  EXPECT_EQ(scalar_mul(E, 0, P), Point::infinity());
  EXPECT_EQ(point_order(E, P), 0);
}

TEST(Elliptic, Torsion) {
  EXPECT_EQ(torsion_subgroup(FactoredCurve(0, -1, -4)).str(), "Z/2 x Z/4");
  // No root difference pair is a pair of squares, so no 4-torsion: the
  // trivial images on y^2 = x(x - 2)(x + 4) are not all of order 4.
  EXPECT_EQ(torsion_subgroup(FactoredCurve(0, 2, -4)).str(), "Z/2 x Z/2");
  EXPECT_EQ(torsion_nagell_lutz(FactoredCurve(0, 2, -4).curve()).str(), "Z/2 x Z/2");
  const Rat t = make_rat(16, 9);
  EXPECT_EQ(torsion_subgroup(FactoredCurve(0, -1, -t * t)).str(), "Z/2 x Z/8");
  EXPECT_EQ(torsion_subgroup(FactoredCurve(0, 3, -5)).str(), "Z/2 x Z/2");
}

TEST(Elliptic, NagellLutzAgreesWithHalving) {
  for (long a = -6; a <= 6; ++a)
    for (long b = a + 1; b <= 7; ++b) {
      if (a == 0 || b == 0) continue;
      const FactoredCurve F(0, a, b);
      EXPECT_EQ(torsion_nagell_lutz(F.curve()).order(), torsion_subgroup(F).order()) << a << "," << b;
    }
}

TEST(Elliptic, PointSearch) {
  const auto pts = point_search(FactoredCurve(0, 2, -4).curve(), 10);
  EXPECT_TRUE(contains(pts, {4, 8}));
  EXPECT_TRUE(contains(pts, {-1, 3}));
  EXPECT_EQ(point_search(FactoredCurve(0, -1, -4).curve(), 50).size(), 7u);  // affine torsion
  EXPECT_TRUE(contains(point_search(FactoredCurve(0, 3, -5).curve(), 10), {-1, 4}));
}

TEST(Elliptic, PointCountsAgreeWithHasse) {
  const Curve E = FactoredCurve(0, 3, -5).curve();
  for (long p : {7L, 11L, 13L, 17L, 19L, 23L}) {
    const long n = count_points_mod_p(E, p);
    EXPECT_LE(std::abs(n - p - 1), 2 * std::sqrt(double(p)));
    EXPECT_EQ(n % 4, 0);  // full 2-torsion injects
  }
  EXPECT_THROW(count_points_mod_p(E, 3), std::invalid_argument);
}

TEST(Elliptic, RootNumber) {
  EXPECT_EQ(root_number(1, 2), 1);
  EXPECT_EQ(root_number(2, 5), -1);
  EXPECT_EQ(root_number(1, 4), 1);
  EXPECT_THROW(root_number(2, 4), std::invalid_argument);
}

TEST(Elliptic, Cohn) {
  EXPECT_TRUE(cohn_predicts_infinite(5));
  EXPECT_FALSE(cohn_predicts_infinite(7));
  EXPECT_FALSE(cohn_predicts_infinite(3));
  EXPECT_THROW(cohn_predicts_infinite(4), std::invalid_argument);
}
