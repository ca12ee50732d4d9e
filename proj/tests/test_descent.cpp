#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "aps/curves.hpp"
#include "aps/descent.hpp"

using namespace aps;

TEST(Descent, SquareClasses) {
  EXPECT_EQ(square_class(make_rat(-12, 5)), -15);
  EXPECT_EQ(class_mul(6, -10), -15);
  EXPECT_TRUE(is_padic_square(17, 2));
  EXPECT_FALSE(is_padic_square(5, 2));
  EXPECT_TRUE(is_padic_square(make_rat(4, 9), 3));
  EXPECT_FALSE(is_padic_square(3, 3));
  EXPECT_TRUE(is_padic_square(7, 3));
}

TEST(Descent, DescentImage) {
  const Curve E = FactoredCurve(0, 3, -5).curve();
  const Point T{0, 0};
  EXPECT_EQ(descent_image(E, T, {-1, 4}), -1);
  EXPECT_EQ(descent_image(E, T, T), -15);
  EXPECT_EQ(descent_image(E, T, Point::infinity()), 1);
}

TEST(Descent, IsogenySelmer) {
  const Curve E = FactoredCurve(0, -1, -4).curve();
  const SelmerGroup S = two_isogeny_selmer(E, {0, 0});
  EXPECT_TRUE(S.contains(1));
  EXPECT_TRUE(S.contains(descent_image(E, {0, 0}, {0, 0})));
  EXPECT_TRUE(S.contains(descent_image(E, {0, 0}, {2, 6})));
  EXPECT_EQ(descent_image(E, {0, 0}, {2, 6}), 2);
}

TEST(Descent, IsogenousCurve) {
  const Curve E = FactoredCurve(0, -1, -4).curve();
  const auto [E2, T2] = isogenous_curve(E, {0, 0});
  EXPECT_EQ(T2, (Point{0, 0}));
  EXPECT_EQ(E2.a2, -10);
  EXPECT_EQ(E2.a4, 9);
}

TEST(Descent, FullDescentBounds) {
  EXPECT_EQ(full_two_descent(FactoredCurve(0, -1, -4)).rank_upper, 0);
  EXPECT_EQ(full_two_descent(FactoredCurve(0, 2, -4)).rank_upper, 1);
  EXPECT_EQ(full_two_descent(FactoredCurve(0, 3, -5)).rank_upper, 1);
}

TEST(Descent, FullDescentBoundsIsogenyBound) {
  // rank <= dim Sel(phi) + dim Sel(phi^) - 2 for every 2-torsion point.
  for (const FactoredCurve& F : {FactoredCurve(0, -1, -4), FactoredCurve(0, 2, -4), FactoredCurve(0, 3, -5),
                                 FactoredCurve(0, 1, -3), FactoredCurve(0, 6, -10)}) {
    const Curve E = F.curve();
    const int full = full_two_descent(F).rank_upper;
    for (const Point& T : F.two_torsion()) {
      const auto [E2, T2] = isogenous_curve(E, T);
      EXPECT_LE(full, two_isogeny_selmer(E, T).dim + two_isogeny_selmer(E2, T2).dim - 2) << F.str();
    }
  }
}

TEST(Descent, RankWindows) {
  auto w = rank_window(FactoredCurve(0, -1, -4));
  EXPECT_EQ(w.lower, 0);
  EXPECT_EQ(w.upper, 0);
  w = rank_window(FactoredCurve(0, 2, -4));
  EXPECT_EQ(w.lower, 1);
  EXPECT_EQ(w.upper, 1);
  w = rank_window(FactoredCurve(0, 1, -3));
  EXPECT_EQ(w.upper, 0);
}

TEST(Descent, LocalSolubilityMatchesBruteForce) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> c(-9, 9);
  for (int i = 0; i < 150; ++i) {
    Quartic q;
    for (auto& x : q) x = c(rng);
    if (q[0] == 0 && q[4] == 0) continue;
    for (long p : {2L, 3L, 5L}) {
      const int k = p == 2 ? 7 : 4;
      if (quartic_soluble_bruteforce(q, p, k)) {
        EXPECT_TRUE(quartic_padic_soluble(q, p));
      } else {
        EXPECT_FALSE(quartic_padic_soluble(q, p));
      }
    }
  }
}

TEST(Descent, RealSolubility) {
  EXPECT_FALSE(quartic_real_soluble({-1, 0, -1, 0, -1}));
  EXPECT_TRUE(quartic_real_soluble({-1, 0, 0, 0, 1}));
  EXPECT_TRUE(quartic_real_soluble({0, 0, -1, 0, -1}));  // value 0 at v = 0
}

TEST(Descent, Certificates) {
  auto c = certify_z_zero({0, 1, 2, 3});
  EXPECT_EQ(c.conclusion, Conclusion::z_zero);
  EXPECT_EQ(c.rank_upper, 0);
  EXPECT_EQ(c.torsion, "Z/2 x Z/4");
  c = certify_z_zero({0, 2, 3, 5});
  EXPECT_EQ(c.conclusion, Conclusion::z_zero);
  c = certify_z_zero({0, 1, 2, 4});
  EXPECT_EQ(c.conclusion, Conclusion::z_positive_with_witnesses);
  ASSERT_FALSE(c.witnesses.empty());
  EXPECT_EQ(c.witnesses.front(), (ArithProgression{120, 49}));
}

TEST(Descent, CertificateJsonRoundTrip) {
  for (const Subset& I : {Subset{0, 1, 2, 3}, Subset{0, 1, 2, 4}, Subset{0, 1, 3, 6}}) {
    const DescentCertificate c = certify_z_zero(I);
    EXPECT_EQ(certificate_from_json(certificate_to_json(c)), c);
  }
  EXPECT_THROW(certificate_from_json("{not json"), std::exception);
  EXPECT_EQ(parse_conclusion(to_string(Conclusion::inconclusive)), Conclusion::inconclusive);
}

TEST(Descent, IsogenyClassSharpensBound) {
  // E_I for {0,1,31,32}: Sha[2] makes the bound 2 on E_I, while the isogenous
  // curve has 2-Selmer rank 0, so the rank is 0.
  const FactoredCurve F = model_four({0, 1, 31, 32}).curve;
  const IsogenyDescent iso = isogeny_class_descent(F);
  EXPECT_EQ(iso.rank_upper.front(), 2);
  EXPECT_EQ(iso.best, 0);
  EXPECT_GE(iso.curves.size(), 2u);
  const RankWindow w = rank_window(F, 60);
  EXPECT_EQ(w.own_upper, 2);
  EXPECT_EQ(w.upper, 0);
  EXPECT_EQ(certify_z_zero({0, 1, 31, 32}).conclusion, Conclusion::z_zero);
}

TEST(Descent, IsogenousCurvesShareTheBound) {
  // Every curve in the class gets an upper bound no smaller than the best lower bound.
  for (const Subset& I : {Subset{0, 1, 2, 5}, Subset{0, 2, 43, 48}, Subset{0, 1, 2, 4}}) {
    const FactoredCurve F = model_four(I).curve;
    const RankWindow w = rank_window(F, 300);
    for (int u : isogeny_class_descent(F).rank_upper) EXPECT_GE(u, w.lower) << format_subset(I);
  }
}
