#include <gtest/gtest.h>

#include "json.hpp"
#include "primtower/errors.hpp"
#include "primtower/telescoper.hpp"
#include "test_util.hpp"

namespace primtower {
namespace {

using testing::E;

Tower log_tower() {
  return Tower::build(TowerSpec::from_json(
      R"j({"base": "y", "params": ["x"], "levels": [{"name": "t", "derivative": "1/(x+y)", "dx": "1/(x+y)"}]})j"));
}

TEST(Telescoper, WorkedExample) {
  Tower tw = log_tower();
  FieldElement f = E(tw, "2*x/((x+y)*(t^2-x))");
  TelescopeResult res = telescope(f, tw, 4);
  ASSERT_TRUE(res.telescoper.has_value());
  const Telescoper& l = *res.telescoper;
  EXPECT_EQ(l.order, 1);
  ASSERT_EQ(l.coefficients.size(), 2u);
  EXPECT_EQ(l.coefficients[0], FieldElement(-1));
  EXPECT_EQ(l.coefficients[1], E(tw, "2*x"));
  EXPECT_EQ(l.render_operator(tw), "2*x*D_x-1");
  EXPECT_TRUE(verify_telescoper(l, f, tw));
  EXPECT_TRUE(linear_relations({complete_reduce(f, tw).r}, tw).empty());
  auto doc = nlohmann::json::parse(res.to_json(tw));
  EXPECT_EQ(doc["order"], 1);
  EXPECT_EQ(doc["coefficients"], nlohmann::json({"-1", "2*x"}));
}

TEST(Telescoper, RemainderOfDerivativeHalvesBack) {
  Tower tw = log_tower();
  FieldElement f = E(tw, "2*x/((x+y)*(t^2-x))");
  EXPECT_EQ(complete_reduce(f, tw).r, f);
  EXPECT_EQ(E(tw, "2*x") * complete_reduce(tw.dx(f), tw).r, f);
}

TEST(Telescoper, NoTelescoperUpToBound) {
  Tower tw = log_tower();
  FieldElement f = E(tw, "y*(1/(x+y)-1)/(t-y)");
  TelescopeResult res = telescope(f, tw, 4);
  EXPECT_FALSE(res.telescoper.has_value());
  ASSERT_EQ(res.denominator_degrees.size(), 5u);
  for (std::size_t k = 1; k < res.denominator_degrees.size(); ++k) {
    EXPECT_GE(res.denominator_degrees[k], res.denominator_degrees[k - 1]);
  }
  EXPECT_GT(res.denominator_degrees.back(), res.denominator_degrees.front());
  EXPECT_EQ(nlohmann::json::parse(res.to_json(tw))["none_up_to"], 4);
}

TEST(Telescoper, OrderZero) {
  Tower tw = log_tower();
  TelescopeResult res = telescope(E(tw, "x"), tw, 3);
  ASSERT_TRUE(res.telescoper.has_value());
  EXPECT_EQ(res.telescoper->order, 0);
  EXPECT_EQ(res.telescoper->coefficients[0], FieldElement(1));
  EXPECT_TRUE(verify_telescoper(*res.telescoper, E(tw, "x"), tw));
}

TEST(Telescoper, ResidueConstancy) {
  Tower tw = log_tower();
  EXPECT_TRUE(residue_constancy(E(tw, "2*x/((x+y)*(t^2-x))"), tw));
  EXPECT_FALSE(residue_constancy(E(tw, "y*(1/(x+y)-1)/(t-y)"), tw));
  EXPECT_TRUE(residue_constancy(E(tw, "t^3*y + x/(x+y)"), tw));
}

TEST(Telescoper, ConstantResiduesGiveTelescopers) {
  Tower tw = log_tower();
  for (const char* text : {"1/((x+y)*(t-x))", "x/((x+y)*(t^2-x^3))", "(t+y)/(y^2+x)", "1/((x+y)*t) + 1/(x*y)"}) {
    FieldElement f = E(tw, text);
    if (!residue_constancy(f, tw)) continue;
    TelescopeResult res = telescope(f, tw, 4);
    ASSERT_TRUE(res.telescoper.has_value()) << text;
    EXPECT_TRUE(verify_telescoper(*res.telescoper, f, tw)) << text;
    if (res.telescoper->order > 0) {
      std::vector<FieldElement> rs;
      FieldElement d = f;
      for (int k = 0; k < res.telescoper->order; ++k) {
        rs.push_back(complete_reduce(d, tw).r);
        d = tw.dx(d);
      }
      EXPECT_TRUE(linear_relations(rs, tw).empty()) << text;
    }
  }
}

TEST(Telescoper, RequiresDx) {
  Tower tw = testing::make_tower({{"t", "1/(x+y)"}}, "y", {"x"});
  EXPECT_THROW(telescope(E(tw, "t"), tw, 2), Error);
  Tower plain = testing::make_tower({{"t", "1/x"}});
  EXPECT_THROW(telescope(E(plain, "t"), plain, 2), Error);
}

}  // namespace
}  // namespace primtower
