#include "symcurv/catalog.hpp"
#include "symcurv/errors.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace symcurv;

TEST(Labels, RoundTrip) {
  for (const char* s : {"AI", "AII", "AIII", "BDI", "DIII", "CI", "CII", "EI", "EII", "EIII", "EIV", "EV", "EVI",
                        "EVII", "EVIII", "EIX", "FI", "FII", "G", "GROUP"}) {
    EXPECT_EQ(label_name(parse_label(s)), s);
  }
  EXPECT_THROW(parse_label("AIIII"), UnknownLabel);
  EXPECT_THROW(parse_label("ai"), UnknownLabel);
  EXPECT_TRUE(is_parametric(Label::CII));
  EXPECT_FALSE(is_parametric(Label::EIV));
  EXPECT_TRUE(is_pq_family(Label::BDI));
  EXPECT_FALSE(is_pq_family(Label::DIII));
}

TEST(Resolve, CanonicalizesPq) {
  SpaceSpec s = resolve(Label::AIII, {3, 2});
  EXPECT_EQ(s.params, (std::vector<int>{2, 3}));
  EXPECT_EQ(s.name(), "AIII(p=2,q=3)");
  EXPECT_EQ(s.space_name(), "SU(5)/S(U(2)xU(3))");
  EXPECT_EQ(s.lie_type.name(), "A4");
  EXPECT_EQ(s.datum.tag, CaseTag::Inner);
  EXPECT_EQ(s.datum.index_i, 2);
}

TEST(Resolve, RejectsInvalidParameters) {
  EXPECT_THROW(resolve(Label::AI, {1}), InvalidParams);
  EXPECT_THROW(resolve(Label::AI, {}), InvalidParams);
  EXPECT_THROW(resolve(Label::AII, {1}), InvalidParams);
  EXPECT_THROW(resolve(Label::AIII, {0, 3}), InvalidParams);
  EXPECT_THROW(resolve(Label::BDI, {1, 3}), InvalidParams);
  EXPECT_THROW(resolve(Label::DIII, {3}), InvalidParams);
  EXPECT_THROW(resolve(Label::CI, {1}), InvalidParams);
  EXPECT_THROW(resolve(Label::EI, {2}), InvalidParams);
  EXPECT_THROW(resolve(Label::CII, {1}), InvalidParams);
  EXPECT_THROW(resolve(Label::Group), UnknownLabel);
}

TEST(Resolve, CaseTags) {
  EXPECT_EQ(resolve(Label::AI, {4}).datum.tag, CaseTag::SplitAI);
  EXPECT_EQ(resolve(Label::AII, {3}).datum.tag, CaseTag::PureOuter);
  EXPECT_EQ(resolve(Label::EIV).datum.tag, CaseTag::PureOuter);
  EXPECT_EQ(resolve(Label::BDI, {1, 5}).datum.tag, CaseTag::PureOuter);
  EXPECT_EQ(resolve(Label::BDI, {3, 5}).datum.tag, CaseTag::Mixed);
  EXPECT_EQ(resolve(Label::BDI, {2, 6}).datum.tag, CaseTag::Inner);
  EXPECT_EQ(resolve(Label::BDI, {2, 5}).datum.tag, CaseTag::Inner);
  EXPECT_EQ(resolve(Label::EII).datum.tag, CaseTag::EqualLengthRule);
  EXPECT_EQ(resolve(Label::FI).datum.tag, CaseTag::Inner);
  EXPECT_EQ(resolve(Label::G).datum.tag, CaseTag::Inner);
  EXPECT_EQ(resolve_group(LieType::parse("G2")).datum.tag, CaseTag::GroupManifold);
}

TEST(Resolve, OddBdiUsesB) {
  SpaceSpec s = resolve(Label::BDI, {2, 5});
  EXPECT_EQ(s.lie_type.name(), "B3");
  EXPECT_EQ(s.datum.index_i, 1);
  EXPECT_EQ(s.space_name(), "SO(7)/SO(2)xSO(5)");
}

TEST(Resolve, AliasedTypesRelabelNodes) {
  // CI(2) lives on C2 = B2: node 2 of C2 is node 1 of B2
  SpaceSpec ci = resolve(Label::CI, {2});
  EXPECT_EQ(ci.lie_type.name(), "B2");
  EXPECT_EQ(ci.datum.index_i, 1);
  // BDI(1,5) on D3 = A3: swapping the last two D3 nodes reverses A3
  SpaceSpec bdi = resolve(Label::BDI, {1, 5});
  EXPECT_EQ(bdi.lie_type.name(), "A3");
  EXPECT_EQ(bdi.datum.theta0.perm(), (std::vector<int>{2, 1, 0}));
}

TEST(Resolve, GroupMetadata) {
  SpaceSpec g = resolve_group(LieType::parse("E8"));
  EXPECT_EQ(g.name(), "GROUP(E8)");
  EXPECT_EQ(g.meta_rank, 8);
  EXPECT_EQ(g.meta_dim, 248);
  EXPECT_EQ(g.meta_bound, Rational::parse("1/30"));
  SpaceSpec a = resolve_group(LieType::parse("A3"));
  EXPECT_EQ(a.space_name(), "SU(4)");
  EXPECT_EQ(a.meta_dim, 15);
}

TEST(DiagramAutomorphism, Validation) {
  IntMatrix a3 = cartan_matrix(LieType::parse("A3"));
  EXPECT_NO_THROW(DiagramAutomorphism({2, 1, 0}, a3));
  EXPECT_THROW(DiagramAutomorphism({1, 0, 2}, a3), std::invalid_argument);  // breaks the chain
  EXPECT_THROW(DiagramAutomorphism({1, 2, 0}, a3), std::invalid_argument);  // order three
  EXPECT_THROW(DiagramAutomorphism({0, 1}, a3), std::invalid_argument);
  IntMatrix b3 = cartan_matrix(LieType::parse("B3"));
  EXPECT_THROW(DiagramAutomorphism({2, 1, 0}, b3), std::invalid_argument);
  DiagramAutomorphism rev({2, 1, 0}, a3);
  EXPECT_FALSE(rev.is_identity());
  EXPECT_EQ(rev.apply(Root{{1, 1, 0}}).coeffs, (std::vector<int>{0, 1, 1}));
  EXPECT_TRUE(DiagramAutomorphism::identity(4).is_identity());
}

TEST(Catalog, DefaultSweepContents) {
  auto cat = catalog();
  std::set<std::string> names;
  for (const auto& s : cat) EXPECT_TRUE(names.insert(s.name()).second) << s.name();
  auto count = [&](Label l) { return std::count_if(cat.begin(), cat.end(), [&](const SpaceSpec& s) { return s.label == l; }); };
  EXPECT_EQ(count(Label::AI), 11);
  EXPECT_EQ(count(Label::AII), 11);
  // p <= q, 2 <= p+q <= 12: sum_{s=2}^{12} floor(s/2)
  EXPECT_EQ(count(Label::AIII), 36);
  // 5 <= p+q <= 12: sum floor(s/2)
  EXPECT_EQ(count(Label::BDI), 2 + 3 + 3 + 4 + 4 + 5 + 5 + 6);
  EXPECT_EQ(count(Label::DIII), 9);
  EXPECT_EQ(count(Label::CI), 11);
  EXPECT_EQ(count(Label::CII), 36);
  for (Label l : {Label::EI, Label::EII, Label::EIII, Label::EIV, Label::EV, Label::EVI, Label::EVII, Label::EVIII,
                  Label::EIX, Label::FI, Label::FII, Label::G}) {
    EXPECT_EQ(count(l), 1) << label_name(l);
  }
  EXPECT_EQ(count(Label::Group), static_cast<long>(all_types_up_to(12).size()));
}

TEST(Catalog, LimitsShrinkTheSweep) {
  auto cat = catalog({4, 5});
  for (const auto& s : cat) {
    if (s.params.size() == 1) {
      EXPECT_LE(s.params[0], 4);
    }
    if (s.params.size() == 2) {
      EXPECT_LE(s.params[0] + s.params[1], 5);
    }
  }
}

TEST(Partition, AIIICounts) {
  for (int p = 1; p <= 4; ++p) {
    for (int q = p; q <= 5; ++q) {
      SpaceSpec s = resolve(Label::AIII, {p, q});
      RootSystem rs(s.lie_type);
      RootPartition part = partition_roots(rs, s.datum);
      EXPECT_TRUE(part.moved.empty());
      EXPECT_EQ(static_cast<int>(part.noncompact.size()), p * q);
      EXPECT_EQ(part.noncompact.size() + part.compact.size(), rs.positive_roots().size());
    }
  }
}

TEST(Partition, OuterAndUnsupported) {
  SpaceSpec aii = resolve(Label::AII, {3});
  RootSystem rs(aii.lie_type);
  RootPartition part = partition_roots(rs, aii.datum);
  EXPECT_FALSE(part.moved.empty());
  EXPECT_TRUE(part.noncompact.empty());
  for (const Root& r : part.moved) EXPECT_NE(theta0_on_root(aii.datum, r), r);
  SpaceSpec mixed = resolve(Label::BDI, {3, 5});
  EXPECT_THROW(partition_roots(RootSystem(mixed.lie_type), mixed.datum), Unsupported);
  SpaceSpec eq = resolve(Label::EII);
  EXPECT_THROW(partition_roots(RootSystem(eq.lie_type), eq.datum), Unsupported);
}

TEST(CatalogProperty, Theta0IsAnIsometricInvolution) {
  for (const SpaceSpec& s : catalog({8, 8})) {
    RootSystem rs(s.lie_type);
    for (const Root& a : rs.positive_roots()) {
      Root t = theta0_on_root(s.datum, a);
      EXPECT_EQ(theta0_on_root(s.datum, t), a) << s.name();
      EXPECT_TRUE(rs.is_root(t)) << s.name();
      EXPECT_EQ(rs.sq_length(t), rs.sq_length(a)) << s.name();
    }
  }
}
