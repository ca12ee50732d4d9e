#include <gtest/gtest.h>

#include <numeric>

#include "aps/ap.hpp"
#include "aps/curves.hpp"

using namespace aps;

TEST(Curves, Genus) {
  EXPECT_EQ(genus_of(4), 1);
  EXPECT_EQ(genus_of(5), 5);
  EXPECT_EQ(genus_of(6), 17);
}

TEST(Curves, FourSubsetModel) {
  auto M = model_four({0, 1, 2, 5});
  EXPECT_EQ(M.m0, 1);
  EXPECT_EQ(M.m1, 3);
  EXPECT_EQ(M.curve.curve().str(), "y^2 = x^3 + 2*x^2 - 15*x");
  M = model_four({0, 1, 2, 4});
  EXPECT_EQ(M.m1, 2);
  M = model_four({0, 1, 2, 3});
  EXPECT_EQ(M.m0, M.m1);
}

TEST(Curves, TrivialImages) {
  const auto pts = trivial_images(1, 3);
  ASSERT_EQ(pts.size(), 8u);
  EXPECT_EQ(pts[5], (Point{-1, 4}));
  EXPECT_EQ(pts[4], (Point{-3, -6}));
  const Curve E = model_from_m(1, 3).curve.curve();
  for (const Point& P : pts) EXPECT_TRUE(E.on_curve(P));
}

TEST(Curves, TrivialImagesSymmetricHaveOrderFour) {
  const Curve E = model_from_m(1, 1).curve.curve();
  const auto pts = trivial_images(1, 1);
  for (int i = 4; i < 8; ++i) {
    EXPECT_EQ(point_order(E, pts[i]), 4);
    EXPECT_EQ(ec_add(E, pts[i], pts[i]), (Point{1, 0}));
  }
}

TEST(Curves, RemarkProgression) {
  EXPECT_EQ(*remark_ap({0, 1, 2, 4}), (ArithProgression{120, 49}));
  EXPECT_EQ(*remark_ap({0, 1, 2, 5}), (ArithProgression{24, 1}));
  EXPECT_EQ(*remark_ap({0, 1, 3, 6}), (ArithProgression{8, 1}));
  EXPECT_FALSE(remark_ap({0, 1, 2, 3}).has_value());
  EXPECT_THROW(remark_ap({0, 2, 4, 6}), std::invalid_argument);
}

TEST(Curves, RemarkProgressionSelfValidates) {
  enumerate_classes(20, 4, false, [](const Subset& I) {
    if (auto ap = remark_ap(I)) EXPECT_TRUE(squares_at(*ap, I)) << format_subset(I);
  });
}

TEST(Curves, SymmetricTorsion) {
  EXPECT_EQ(torsion_class_symmetric(9, 16), SymmetricTorsion::z2_z8);
  EXPECT_EQ(torsion_class_symmetric(1, 2), SymmetricTorsion::z2_z4);
  EXPECT_EQ(torsion_class_symmetric(2, 3), SymmetricTorsion::z2_z4);
  EXPECT_EQ(to_string(SymmetricTorsion::z2_z8), "Z/2 x Z/8");
}

TEST(Curves, SymmetricTorsionMatchesComputedGroup) {
  for (long a = 1; a < 12; ++a)
    for (long b = a + 1; b < 14; ++b) {
      if (std::gcd(a, b) != 1) continue;
      const auto t = torsion_subgroup(model_four({0, a, b, a + b}).curve);
      const long expect = torsion_class_symmetric(a, b) == SymmetricTorsion::z2_z8 ? 16 : 8;
      EXPECT_EQ(t.order(), expect) << a << "," << b;
    }
}

TEST(Curves, OrderTwelveFamily) {
  EXPECT_TRUE(order12_family_check(make_rat(1, 3), make_rat(5, 3)));
  EXPECT_FALSE(order12_family_check(1, 1));
  EXPECT_FALSE(order12_family_check(1, 2));
}

TEST(Curves, ParametricSquare) {
  const ParametricPoint p = parametric_square(2, 3);
  EXPECT_EQ(p.t, make_rat(35, 24));
  EXPECT_EQ(p.x, make_rat(-25, 24));
  EXPECT_EQ(abs(p.y), make_rat(125, 576));
  EXPECT_TRUE(symmetric_curve(p.t).curve().on_curve({p.x, p.y}));
  const ParametricPoint q = parametric_square(2, -3);
  EXPECT_EQ(q.x, make_rat(1, 24));
  EXPECT_TRUE(symmetric_curve(q.t).curve().on_curve({q.x, q.y}));
  EXPECT_THROW(parametric_square(1, 2), std::invalid_argument);
  EXPECT_THROW(parametric_square(0, 2), std::invalid_argument);
  EXPECT_THROW(parametric_square(2, -2), std::invalid_argument);
}

TEST(Curves, IntersectionOfQuadrics) {
  const Subset I{0, 1, 2, 5, 7};
  const std::vector<Rat> rudin{1, 5, 7, 11, 13};
  EXPECT_TRUE(on_ci(I, rudin));
  EXPECT_EQ(sign_act(0b10, {1, 1, 1, 1, 1}), (std::vector<Rat>{1, -1, 1, 1, 1}));
  for (SignMask m = 0; m < 32; ++m) {
    const auto p = sign_act(m, rudin);
    EXPECT_TRUE(on_ci(I, p));
    if (p[0] > 0) EXPECT_EQ(point_to_ap(I, p), (ArithProgression{24, 1}));
  }
  EXPECT_FALSE(on_ci(I, {1, 5, 7, 11, 12}));
}
