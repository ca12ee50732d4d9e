#include <gtest/gtest.h>

#include <random>
#include <set>

#include "aps/covering.hpp"

using namespace aps;

TEST(Covering, ModelParameters) {
  auto M = quartic_model({0, 1, 2, 4, 7}, {1, 4, 7});
  EXPECT_EQ(M.m0, 1);
  EXPECT_EQ(M.m1, make_rat(-7, 3));
  EXPECT_EQ(M.m2, make_rat(-5, 3));
  M = quartic_model({0, 1, 2, 5, 7}, {2, 5, 7});
  EXPECT_EQ(M.m0, make_rat(3, 2));
  EXPECT_EQ(M.m1, make_rat(-7, 2));
  EXPECT_EQ(M.m2, -3);
  EXPECT_EQ(quartic_model({0, 1, 3, 7, 8}, {1, 3, 7}).m0, make_rat(1, 2));
}

TEST(Covering, FactorPairs) {
  const auto M = quartic_model({0, 1, 2, 4, 7}, {1, 4, 7});
  const FactorPair f = factor_pair(M, 1, 2);
  EXPECT_EQ(f.D, make_rat(4, 9));
  EXPECT_EQ(to_string(f.plus), "t^2 + -10/3*t + 2");
  EXPECT_EQ(to_string(f.minus), "t^2 + -6*t + 2");
  const FactorPair g = factor_pair(M, 2, 1);
  EXPECT_EQ(g.D, make_rat(10, 9));
  EXPECT_EQ(g.radicand(), 10);
  // "+" labels the +alpha linear form, so this factor carries -2 sqrt(10) / 3.
  EXPECT_TRUE(g.minus.coeff(1) == QuadExt(make_rat(-10, 3), make_rat(-2, 3), 10));
  EXPECT_TRUE(g.minus.coeff(0) == QuadExt(make_rat(14, 3), make_rat(4, 3), 10));
  EXPECT_TRUE(g.plus.coeff(1) == g.minus.coeff(1).conj());
}

TEST(Covering, FactorizationIdentityOnRandomModels) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> pos(1, 60);
  int done = 0;
  while (done < 50) {
    std::set<long> s{0};
    while (s.size() < 5) s.insert(pos(rng));
    const Subset I(s.begin(), s.end());
    const QuarticModel M = quartic_model(I, {I[1], I[2], I[3]});
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 3; ++j) {
        const FactorPair f = factor_pair(M, i, j);
        std::vector<QuadExt> target(M.p(i).coeffs().begin(), M.p(i).coeffs().end());
        ASSERT_EQ(f.plus * f.minus, QuadPoly(target)) << format_subset(I);
      }
    ++done;
  }
}

TEST(Covering, Choices) {
  auto has = [](const Subset& I, const Triple& J, int j1, int j2, long D) {
    for (const auto& c : covering_choices(I))
      if (c.J == J && c.j1 == j1 && c.j2 == j2) return c.radicand && *c.radicand == D;
    return false;
  };
  EXPECT_EQ(covering_choices({0, 1, 2, 4, 7}).size(), 90u);
  EXPECT_TRUE(has({0, 1, 2, 4, 7}, {1, 4, 7}, 2, 1, 10));
  EXPECT_TRUE(has({0, 1, 2, 5, 7}, {2, 5, 7}, 3, 2, 14));
  for (const auto& c : covering_choices({0, 2, 4, 5, 11})) EXPECT_FALSE(c.admissible());
}

TEST(Covering, TwistSets) {
  EXPECT_EQ(frak_S({0, 1, 2, 4, 7}, {1, 4, 7}, 2, 1), (std::vector<SquareClass>{1, 2, 3, 6}));
  EXPECT_EQ(frak_S({0, 1, 2, 5, 7}, {2, 5, 7}, 3, 2), (std::vector<SquareClass>{1, -1, 2, -2, 5, -5, 10, -10}));
  EXPECT_EQ(frak_S({0, 1, 4, 7, 8}, {1, 4, 7}, 2, 1), (std::vector<SquareClass>{1, 2, -3, -6}));
  EXPECT_EQ(reduce_in_field(15, 10), 6);
  EXPECT_EQ(reduce_in_field(-3, 1), -3);
}

TEST(Covering, ParameterToProgression) {
  EXPECT_EQ(*t_to_ap({0, 1, 2, 5, 7}, {2, 5, 7}, {Rat(3)}), (ArithProgression{24, 1}));
  EXPECT_EQ(*t_to_ap({0, 1, 2, 5, 7}, {2, 5, 7}, {make_rat(5, 6)}), (ArithProgression{24, 1}));
  EXPECT_EQ(*t_to_ap({0, 1, 3, 7, 8}, {1, 3, 7}, {Rat(4)}), (ArithProgression{120, 1}));
  EXPECT_EQ(ap_or_trivial(t_to_ap({0, 1, 4, 7, 8}, {1, 4, 7}, {Rat(1)})), "(0,1)");
  EXPECT_EQ(ap_or_trivial(t_to_ap({0, 1, 4, 7, 8}, {1, 4, 7}, {0, true})), "(0,1)");
  EXPECT_THROW(t_to_ap({0, 1, 2, 5, 7}, {2, 5, 7}, {Rat(7)}), std::invalid_argument);
}

TEST(Covering, QuotientConstruction) {
  // The (24,1) case, delta = 2, (+,-): t = 3 lies on the quotient.
  const Quotient H = h_quotient({0, 1, 2, 5, 7}, {2, 5, 7}, 3, 2, 2, 1, -1);
  EXPECT_EQ(H.radicand, 14);
  const QuadExt v = H.quartic(QuadExt(Rat(3))) / QuadExt(Rat(2));
  EXPECT_TRUE(v.is_square());
  // {0,1,2,4,7}, delta = 1, (+,+): the leading coefficient is a square, so t = oo is a point.
  const Quotient G = h_quotient({0, 1, 2, 4, 7}, {1, 4, 7}, 2, 1, 1, 1, 1);
  EXPECT_TRUE(G.quartic.leading().is_square());
  // A twist outside the set is still built.
  EXPECT_NO_THROW(h_quotient({0, 1, 2, 4, 7}, {1, 4, 7}, 2, 1, 5, 1, 1));
}

TEST(Covering, RankZeroResolution) {
  const Subset I{0, 1, 4, 7, 8};
  const Triple J{1, 4, 7};
  auto r = resolve_H_rank0_overQ(h_quotient(I, J, 2, 1, 1, 1, -1));
  ASSERT_TRUE(r.resolved) << r.reason;
  EXPECT_EQ(r.t_values, (std::vector<ProjT>{{Rat(1)}, {0, true}}));
  r = resolve_H_rank0_overQ(h_quotient(I, J, 2, 1, -3, 1, 1));
  ASSERT_TRUE(r.resolved) << r.reason;
  EXPECT_EQ(r.t_values, (std::vector<ProjT>{{Rat(0)}, {Rat(2)}}));
  EXPECT_TRUE(quotient_locally_empty(h_quotient(I, J, 2, 1, 2, 1, 1)));
  EXPECT_TRUE(quotient_locally_empty(h_quotient(I, J, 2, 1, -6, 1, 1)));
}

TEST(Covering, ResolvedRowsMapToValidatedProgressions) {
  const CoveringDatum d = analyze_choice({0, 1, 4, 7, 8}, {1, 4, 7}, 2, 1);
  EXPECT_TRUE(d.resolved);
  for (const QuotientRow& row : d.rows)
    for (const auto& ap : row.aps)
      if (ap) EXPECT_TRUE(squares_at(*ap, d.I));
  EXPECT_TRUE(d.progressions().empty());
  EXPECT_EQ(resolve_z5({0, 1, 4, 7, 8}).status, ZStatus::zero);
}

TEST(Covering, QuarticInvariants) {
  // x^4 - 1: I = 12 a e - 3 b d + c^2 = -12, J = 72 a c e + 9 b c d - 27 a d^2 - 27 e b^2 - 2 c^3 = 0.
  const auto inv = quartic_invariants(RatPoly{-1, 0, 0, 0, 1});
  EXPECT_EQ(inv.I, -12);
  EXPECT_EQ(inv.J, 0);
}
