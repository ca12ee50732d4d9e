#include <gtest/gtest.h>

#include "aps/pell.hpp"

using namespace aps;

namespace {
using Sol = std::vector<std::pair<Int, Int>>;

bool square(const Int& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

std::vector<Int> scan(long q1, long a1, long q2, long a2, long bound) {
  std::vector<Int> out;
  for (long n = 0; n <= bound; ++n)
    if (square(Int(q1 * n + a1 * a1)) && square(Int(q2 * n + a2 * a2))) out.push_back(n);
  return out;
}
}  // namespace

TEST(Pell, Unit) {
  EXPECT_EQ(pell_unit(3), std::make_pair(Int(2), Int(1)));
  EXPECT_EQ(pell_unit(61), std::make_pair(Int("1766319049"), Int("226153980")));
  EXPECT_THROW(pell_unit(4), std::invalid_argument);
}

TEST(Pell, Solve) {
  EXPECT_EQ(pell_solve(3, 6, 2), (Sol{{3, 1}, {9, 5}}));
  EXPECT_EQ(pell_solve(3, 1, 3), (Sol{{1, 0}, {2, 1}, {7, 4}}));
  EXPECT_EQ(pell_solve(2, -1, 2), (Sol{{1, 1}, {7, 5}}));
  EXPECT_TRUE(pell_solve(3, 2, 5).empty());
  EXPECT_THROW(pell_solve(9, 1, 2), std::invalid_argument);
}

TEST(Pell, SolveAgreesWithBruteForce) {
  for (long D : {2L, 3L, 5L, 6L, 7L, 13L}) {
    for (long c = -20; c <= 20; ++c) {
      if (c == 0) continue;
      Sol brute;
      for (long x = 0; x <= 3000; ++x) {
        const long r = x * x - c;
        if (r < 0 || r % D) continue;
        const Int y2 = r / D;
        if (square(y2)) brute.emplace_back(x, Int(sqrt(y2)));
      }
      const Sol got = pell_solve(D, c, 40);
      Sol small;
      for (const auto& s : got)
        if (s.first <= 3000) small.push_back(s);
      ASSERT_EQ(small, brute) << "D=" << D << " c=" << c;
    }
  }
}

TEST(Pell, Intersections) {
  EXPECT_EQ(ap_intersection(1, 1, 3, 1, 4), (std::vector<Int>{0, 8, 120, 1680}));
  EXPECT_EQ(ap_intersection(2, 1, 4, 1, 3), (std::vector<Int>{0, 12, 420}));
  EXPECT_EQ(ap_intersection(1, 1, 8, 1, 3), (std::vector<Int>{0, 3, 15}));
}

TEST(Pell, IntersectionsAgreeWithScan) {
  for (long q1 = 1; q1 <= 6; ++q1)
    for (long q2 = q1 + 1; q2 <= 7; ++q2)
      for (long a1 = 1; a1 <= 3; ++a1)
        for (long a2 = 1; a2 <= 3; ++a2) {
          const auto brute = scan(q1, a1, q2, a2, 20000);
          const auto got = ap_intersection(q1, a1, q2, a2, brute.size());
          ASSERT_EQ(got, brute) << q1 << " " << a1 << " " << q2 << " " << a2;
        }
}

TEST(Pell, IntersectionTermsAreCertified) {
  const auto ns = ap_intersection(1, 1, 3, 1, 10);
  ASSERT_EQ(ns.size(), 10u);
  for (const Int& n : ns) {
    EXPECT_TRUE(square(n + 1));
    EXPECT_TRUE(square(3 * n + 1));
  }
}

TEST(Pell, Ej48Family) {
  EXPECT_EQ(ej48_family(2), (std::vector<Int>{0, 8, 120, 1680, 23408}));
  EXPECT_EQ(ej48_family(3), (std::vector<Int>{0, 12, 420, 14280, 485112}));
  const auto f = ej48_family(2);
  EXPECT_EQ(std::vector<Int>(f.begin(), f.begin() + 4), ap_intersection(1, 1, 3, 1, 4));
}
