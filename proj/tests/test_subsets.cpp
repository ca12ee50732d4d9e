#include <gtest/gtest.h>

#include <set>

#include "aps/subsets.hpp"

using namespace aps;

TEST(Subsets, CanonicalPrimitive) {
  EXPECT_EQ(canonical_primitive({3, 5, 7, 9}), (Subset{0, 1, 2, 3}));
  EXPECT_EQ(canonical_primitive({1, 2, 4, 5}), (Subset{0, 1, 3, 4}));
  EXPECT_EQ(canonical_primitive({0, 2, 4, 6}), (Subset{0, 1, 2, 3}));
  EXPECT_EQ(canonical_primitive({0, 2, 3, 4}), (Subset{0, 1, 2, 4}));
}

TEST(Subsets, CanonicalIsInvariant) {
  const Subset I{0, 3, 7, 12, 20};
  const Subset c = canonical_primitive(I);
  EXPECT_TRUE(is_primitive(c));
  EXPECT_EQ(canonical_primitive(symmetrize(I)), c);
  Subset scaled;
  for (long x : I) scaled.push_back(6 * x + 11);
  EXPECT_EQ(canonical_primitive(scaled), c);
}

TEST(Subsets, Symmetry) {
  EXPECT_EQ(symmetrize({0, 1, 2, 4}), (Subset{0, 2, 3, 4}));
  EXPECT_FALSE(is_symmetric({0, 1, 2, 4}));
  EXPECT_TRUE(is_symmetric({0, 1, 3, 4}));
  EXPECT_TRUE(is_symmetric({0, 1, 2, 3}));
}

TEST(Subsets, Encoding) {
  EXPECT_EQ(encode({0, 1, 2, 4}), 23);
  EXPECT_EQ(encode({0, 2, 3, 4}), 29);
  EXPECT_EQ(decode(23), (Subset{0, 1, 2, 4}));
  EXPECT_TRUE(is_primitive({0, 1, 2, 4}));
  EXPECT_FALSE(is_primitive({0, 2, 3, 4}));
}

TEST(Subsets, ParseAndValidate) {
  EXPECT_EQ(parse_subset("4,0,2"), (Subset{0, 2, 4}));
  EXPECT_THROW(parse_subset("1,1"), std::invalid_argument);
  EXPECT_THROW(parse_subset("a,2"), std::invalid_argument);
  EXPECT_THROW(validate_subset({2, 1}), std::invalid_argument);
  EXPECT_THROW(validate_subset({-1, 1}), std::invalid_argument);
  EXPECT_EQ(format_subset({0, 1, 3}), "0,1,3");
}

TEST(Subsets, ClassCounts) {
  EXPECT_EQ(enumerate_classes(52, 4, false), 9077u);
  EXPECT_EQ(enumerate_classes(52, 4, true), 402u);
  EXPECT_EQ(enumerate_classes(52, 5, false), 117449u);
  EXPECT_EQ(binomial(52, 4), 270725);
  EXPECT_EQ(binomial(52, 5), 2598960);
}

TEST(Subsets, EnumerationAgreesWithBruteForce) {
  for (int N = 5; N <= 14; ++N) {
    for (int k = 3; k <= 5; ++k) {
      std::set<Subset> brute;
      Subset pool;
      for (long i = 0; i < N; ++i) pool.push_back(i);
      for_each_combination(pool, k, [&](const Subset& s) { brute.insert(canonical_primitive(s)); });
      std::set<Subset> seen;
      enumerate_classes(N, k, false, [&](const Subset& s) { seen.insert(s); });
      ASSERT_EQ(seen, brute) << "N=" << N << " k=" << k;
    }
  }
}

TEST(Subsets, SymmetricFourSubsets) {
  EXPECT_EQ(count_symmetric_4subsets(3), 1u);
  EXPECT_EQ(count_symmetric_4subsets(4), 3u);
  EXPECT_EQ(count_symmetric_4subsets(5), 7u);
  // The closed polynomial matches the direct count only after an offset of 3.
  EXPECT_EQ(symmetric_count_polynomial(5), 0);
  for (int N = 3; N <= 40; ++N)
    EXPECT_EQ(Rat(count_symmetric_4subsets(N)), symmetric_count_polynomial(N + 3)) << N;
}
