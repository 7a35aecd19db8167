#include <gtest/gtest.h>

#include "primtower/hermite.hpp"
#include "test_util.hpp"

namespace primtower {
namespace {

using testing::E;
using testing::make_tower;

TEST(Hermite, PaperExample) {
  Tower tw = make_tower({{"t", "1/x"}});
  FieldElement f = E(tw, "((x+1)*t^2 + (x^2+2*x+2)*t + x + 1)/(x*(t+1))");
  HermiteTriple h = hermite_reduce(f, tw, 1);
  EXPECT_EQ(h.g, FieldElement());
  EXPECT_EQ(h.p.value(), E(tw, "(x+1)/x*t + (x^2+x+1)/x"));
  EXPECT_EQ(h.s, E(tw, "-x/(t+1)"));
}

TEST(Hermite, PolynomialInput) {
  Tower tw = make_tower({{"t", "1/x"}});
  FieldElement f = E(tw, "t^3/x + x*t + 5");
  HermiteTriple h = hermite_reduce(f, tw, 1);
  EXPECT_TRUE(h.g.is_zero());
  EXPECT_EQ(h.p.value(), f);
  EXPECT_TRUE(h.s.is_zero());
}

TEST(Hermite, PureDerivative) {
  Tower tw = make_tower({{"t", "1/x"}});
  HermiteTriple h = hermite_reduce(E(tw, "1/(x*t^2)"), tw, 1);
  EXPECT_EQ(h.g, E(tw, "-1/t"));
  EXPECT_TRUE(h.p.is_zero());
  EXPECT_TRUE(h.s.is_zero());
}

void check_triple(const Tower& tw, const FieldElement& f, int level) {
  HermiteTriple h = hermite_reduce(f, tw, level);
  EXPECT_EQ(tw.derivative(h.g) + h.p.value() + h.s, f) << f;
  const int v = tw.var_of_level(level);
  NumerDenom nd = split_fraction(h.s, v);
  EXPECT_LT(nd.numer.degree(), std::max(nd.denom.degree(), 1));
  if (nd.denom.degree() > 0) {
    EXPECT_EQ(gcd(nd.denom, tw.derivative(nd.denom)).degree(), 0) << f;
  }
  EXPECT_EQ(hermite_reduce(f, tw, level).s, h.s);
}

TEST(Hermite, RandomIdentityAndNormality) {
  Tower tw = make_tower({{"t1", "1/x"}, {"t2", "1/(x+1)"}});
  std::mt19937 rng(21);
  for (int i = 0; i < 40; ++i) {
    FieldElement a = testing::random_element(rng, tw, 2);
    FieldElement b = testing::random_poly(rng, tw, 2, 2, 2);
    if (b.is_zero()) continue;
    check_triple(tw, a / (b * b), 2);
    check_triple(tw, testing::random_element(rng, tw, 1), 1);
    check_triple(tw, testing::random_element(rng, tw, 0, 3) / pow(E(tw, "x-2"), 3), 0);
  }
}

TEST(Hermite, DerivativeOfProperStaysProper) {
  Tower tw = make_tower({{"t", "1/x"}});
  std::mt19937 rng(22);
  const int v = tw.var_of_level(1);
  for (int i = 0; i < 30; ++i) {
    FieldElement h = poly_proper_split(testing::random_element(rng, tw, 1), v).proper;
    HermiteTriple r = hermite_reduce(tw.derivative(h), tw, 1);
    EXPECT_TRUE(r.p.is_zero()) << h;
    EXPECT_TRUE(r.s.is_zero()) << h;
  }
}

}  // namespace
}  // namespace primtower
