#include "symcurv/errors.hpp"
#include "symcurv/lie_type.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace symcurv;

TEST(LieType, ParseAndName) {
  for (const char* s : {"A1", "A12", "B2", "C3", "D4", "E6", "E7", "E8", "F4", "G2"}) {
    EXPECT_EQ(LieType::parse(s).name(), s);
  }
}

TEST(LieType, AliasesFold) {
  EXPECT_EQ(LieType::parse("C2"), LieType::parse("B2"));
  EXPECT_EQ(LieType::parse("D3"), LieType::parse("A3"));
  auto c2 = alias(Family::C, 2);
  EXPECT_EQ(c2.type.name(), "B2");
  EXPECT_EQ(c2.node_map, (std::vector<int>{1, 0}));
  auto d3 = alias(Family::D, 3);
  EXPECT_EQ(d3.type.name(), "A3");
  EXPECT_EQ(d3.node_map, (std::vector<int>{1, 0, 2}));
  EXPECT_EQ(alias(Family::B, 4).node_map, (std::vector<int>{0, 1, 2, 3}));
}

TEST(LieType, RejectsDegenerateRanks) {
  for (const char* s : {"A0", "B1", "C1", "D1", "D2", "E5", "E9", "F3", "G3"}) {
    EXPECT_THROW(LieType::parse(s), InvalidRank) << s;
  }
  for (const char* s : {"", "X4", "A", "Ax", "a3"}) EXPECT_THROW(LieType::parse(s), UnknownLabel) << s;
}

TEST(LieType, SimplyLaced) {
  EXPECT_TRUE(LieType::parse("D5").simply_laced());
  EXPECT_TRUE(LieType::parse("E8").simply_laced());
  EXPECT_FALSE(LieType::parse("B3").simply_laced());
  EXPECT_FALSE(LieType::parse("G2").simply_laced());
}

TEST(LieType, AllTypesUpToIsCanonicalAndComplete) {
  auto ts = all_types_up_to(12);
  std::set<LieType> seen(ts.begin(), ts.end());
  EXPECT_EQ(seen.size(), ts.size());
  // A1..A12, B2..B12, C3..C12, D4..D12, E6, E7, E8, F4, G2
  EXPECT_EQ(ts.size(), 12u + 11u + 10u + 9u + 5u);
  for (LieType t : ts) EXPECT_EQ(LieType::of(t.family, t.rank), t);
  EXPECT_EQ(all_types_up_to(4).size(), 4u + 3u + 2u + 1u + 2u);
}
