#include "symcurv/serialize.hpp"

#include <gtest/gtest.h>

using namespace symcurv;

TEST(Json, SpaceSpec) {
  auto j = to_json(resolve(Label::AII, {2}));
  EXPECT_EQ(j["label"], "AII");
  EXPECT_EQ(j["params"]["n"], 2);
  EXPECT_EQ(j["lie_type"], "A3");
  EXPECT_EQ(j["case_tag"], "PURE_OUTER");
  EXPECT_EQ(j["theta0_perm"], nlohmann::json::parse("[3,2,1]"));
  EXPECT_TRUE(j["index_i"].is_null());
  auto k = to_json(resolve(Label::CII, {2, 3}));
  EXPECT_EQ(k["params"]["p"], 2);
  EXPECT_EQ(k["params"]["q"], 3);
  EXPECT_EQ(k["index_i"], 2);
}

TEST(Json, Report) {
  auto j = to_json(curvature_report(resolve(Label::G)));
  EXPECT_EQ(j["bound"], "1/4");
  EXPECT_EQ(j["ricci"], "1/2");
  EXPECT_EQ(j["lower_bound"], "0");
  EXPECT_EQ(j["dual_range"], nlohmann::json::parse(R"(["-1/4","0"])"));
  EXPECT_EQ(j["sampson"]["conservative"], false);
  EXPECT_EQ(j["sampson"]["relaxed"], true);
  EXPECT_EQ(j["sampson"]["margins"]["relaxed"], "0");
  // highest root with odd a2 coefficient
  EXPECT_EQ(j["restricted"]["argmax"], nlohmann::json::parse("[3,1]"));
  auto r1 = to_json(curvature_report(resolve(Label::FII)));
  EXPECT_EQ(r1["lower_bound"], "NOT_COMPUTED");
}

TEST(Json, RootsAreIntegerArrays) {
  RootSystem rs(LieType::parse("G2"));
  auto j = roots_to_json(rs.positive_roots());
  ASSERT_EQ(j.size(), 6u);
  for (const auto& r : j) {
    ASSERT_EQ(r.size(), 2u);
    EXPECT_TRUE(r[0].is_number_integer());
  }
  EXPECT_EQ(j.back(), nlohmann::json::parse("[3,2]"));
}

TEST(Json, Verdict) {
  auto j = to_json(sampson_check(curvature_report(resolve(Label::AI, {8})), Criterion::Conservative));
  EXPECT_EQ(j["criterion"], "conservative");
  EXPECT_EQ(j["a_sq"], "1/8");
  EXPECT_EQ(j["b_sq"], "1/2");
  EXPECT_EQ(j["passes"], true);
  EXPECT_EQ(j["margin"], "0");
}
