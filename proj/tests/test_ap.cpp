#include <gtest/gtest.h>

#include <algorithm>

#include "aps/ap.hpp"

using namespace aps;

namespace {
bool has(const std::vector<ArithProgression>& v, const ArithProgression& ap) {
  return std::find(v.begin(), v.end(), ap) != v.end();
}
}  // namespace

TEST(Progression, Normalization) {
  EXPECT_EQ(make_ap(384, 16), (ArithProgression{24, 1}));
  EXPECT_EQ(make_ap(-4, 196), (ArithProgression{-1, 49}));
  EXPECT_EQ(make_ap(12, 18), (ArithProgression{12, 18}));
  EXPECT_THROW(make_ap(0, 1), std::invalid_argument);
  EXPECT_EQ(to_string(ArithProgression{24, 1}), "(24,1)");
}

TEST(Progression, SquarePositions) {
  EXPECT_EQ(squares_in_ap(24, 1, 8), (std::vector<long>{0, 1, 2, 5, 7}));
  EXPECT_EQ(squares_in_ap(120, 49, 5), (std::vector<long>{0, 1, 2, 4}));
  EXPECT_EQ(squares_in_ap(1, 1, 3), (std::vector<long>{0}));
}

TEST(Progression, SpecialPositions) {
  EXPECT_EQ(special_positions(SpecialKind::pentagonal, 13), (std::vector<long>{0, 1, 2, 5, 7, 12}));
  EXPECT_EQ(special_positions(SpecialKind::triangular, 11), (std::vector<long>{0, 1, 3, 6, 10}));
  EXPECT_EQ(special_positions(SpecialKind::pentagonal, 52).size(), 12u);
  EXPECT_EQ(squares_in_ap(24, 1, 100000), special_positions(SpecialKind::pentagonal, 100000));
  // 8n + 1 is square exactly at triangular numbers.
  EXPECT_EQ(squares_in_ap(8, 1, 100000), special_positions(SpecialKind::triangular, 100000));
}

TEST(Progression, Search) {
  EXPECT_TRUE(has(search_aps({0, 1, 2, 4}, 200), {120, 49}));
  const auto z = search_aps({0, 13, 24, 33, 49}, 100);
  EXPECT_TRUE(has(z, {24, 49}));
  EXPECT_TRUE(has(z, {-1, 49}));
  EXPECT_TRUE(search_aps({0, 1, 2, 3}, 1000).empty());
  for (const auto& ap : z) EXPECT_TRUE(squares_at(ap, {0, 13, 24, 33, 49}));
}

TEST(Progression, PointCorrespondence) {
  EXPECT_EQ(point_to_ap({0, 1, 2, 5, 7}, {1, 5, 7, 11, 13}), (ArithProgression{24, 1}));
  EXPECT_EQ(point_to_ap({0, 1, 3, 7, 8}, {1, 11, 19, 29, 31}), (ArithProgression{120, 1}));
  EXPECT_EQ(ap_to_point({0, 13, 24, 33, 49}, {-1, 49}), (std::vector<Int>{7, 6, 5, 4, 0}));
  EXPECT_THROW(point_to_ap({0, 1, 2, 5, 7}, {1, 1, 1, 1, 1}), std::invalid_argument);
  EXPECT_THROW(point_to_ap({0, 1, 2, 5, 7}, {1, 5, 7, 11, 12}), std::invalid_argument);
  EXPECT_THROW(ap_to_point({0, 1, 3}, {24, 1}), std::invalid_argument);
}

TEST(Progression, WitnessScan) {
  const auto rec = witness_scan(13, 200);
  ASSERT_EQ(rec.size(), 13u);
  EXPECT_EQ(rec[7].N, 8);
  EXPECT_EQ(rec[7].count, 5);
  EXPECT_EQ(rec[12].count, 6);
  EXPECT_TRUE(has(rec[12].witnesses, {24, 1}));
}
