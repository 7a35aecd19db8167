#include <gtest/gtest.h>

#include "primtower/arith/factor.hpp"
#include "primtower/basis.hpp"
#include "test_util.hpp"

namespace primtower {
namespace {

using testing::E;
using testing::make_tower;

BasisIndex fraction_atom(const Tower& tw, const std::string& q, int k = 0, int m = 1) {
  BasisIndex theta;
  Atom a;
  a.k = k;
  a.m = m;
  a.q = Poly(tw.var_of_level(0), E(tw, q));
  theta.set(0, a);
  return theta;
}

TEST(Basis, ElementExamples) {
  Tower tw = make_tower({{"t1", "1/(x-1)"}, {"t2", "-t1/x"}});
  BasisChoice a = basis_element(E(tw, "1/x"), tw, 0);
  EXPECT_EQ(a.theta.value(tw), E(tw, "1/x"));
  EXPECT_EQ(a.c, FieldElement(1));
  BasisChoice b = basis_element(E(tw, "1/(x-1)"), tw, 0);
  EXPECT_EQ(b.theta.value(tw), E(tw, "1/(x-1)"));
  EXPECT_EQ(b.c, FieldElement(1));
  BasisChoice c = basis_element(E(tw, "-t1/x"), tw, 1);
  EXPECT_EQ(c.theta.value(tw), E(tw, "t1/x"));
  EXPECT_EQ(c.c, FieldElement(-1));
  EXPECT_TRUE(c.theta.at(1).is_power());
  EXPECT_EQ(c.theta.at(1).k, 1);
  EXPECT_EQ(to_json(c.theta, tw), R"([{"k":0,"level":0,"m":1,"q":"x"},{"k":1,"level":1}])");
}

TEST(Basis, CoefficientExamples) {
  Tower tw = make_tower({{"t1", "1/(x-1)"}});
  BasisIndex inv_x = fraction_atom(tw, "x");
  EXPECT_EQ(coefficient(E(tw, "2/x + 5"), inv_x, tw, 0), FieldElement(2));
  EXPECT_EQ(coefficient(E(tw, "1/(x-1)"), inv_x, tw, 0), FieldElement());
  EXPECT_EQ(coefficient(FieldElement(), inv_x, tw, 0), FieldElement());
  EXPECT_EQ(coefficient(E(tw, "(2*x+3)/x^2"), fraction_atom(tw, "x", 0, 2), tw, 0), FieldElement(3));
  EXPECT_EQ(coefficient(E(tw, "3*t1/x + t1^2"), inv_x, tw, 1), FieldElement());
  BasisIndex t1_over_x = inv_x;
  t1_over_x.set(1, Atom{1, 0, std::nullopt});
  EXPECT_EQ(coefficient(E(tw, "3*t1/x + t1^2 + 1/x"), t1_over_x, tw, 1), FieldElement(3));
}

TEST(Basis, CoefficientOfBasisElementIsC) {
  Tower tw = make_tower({{"t1", "1/x"}, {"t2", "1/(x+1)"}});
  std::mt19937 rng(3);
  for (int i = 0; i < 60; ++i) {
    FieldElement a = testing::random_element(rng, tw, 2);
    if (a.is_zero()) continue;
    BasisChoice bc = basis_element(a, tw, 2);
    EXPECT_FALSE(bc.c.is_zero());
    EXPECT_TRUE(bc.c.is_rational());
    EXPECT_EQ(coefficient(a, bc.theta, tw, 2), bc.c) << a;
  }
}

TEST(Basis, CoefficientIsLinear) {
  Tower tw = make_tower({{"t1", "1/x"}});
  std::mt19937 rng(4);
  for (int i = 0; i < 40; ++i) {
    FieldElement f = testing::random_element(rng, tw, 1);
    FieldElement g = testing::random_element(rng, tw, 1);
    FieldElement h = testing::random_element(rng, tw, 1);
    if (h.is_zero()) continue;
    BasisIndex theta = basis_element(h, tw, 1).theta;
    FieldElement alpha(Rational(3, 7));
    FieldElement beta(-5);
    EXPECT_EQ(coefficient(alpha * f + beta * g, theta, tw, 1),
              alpha * coefficient(f, theta, tw, 1) + beta * coefficient(g, theta, tw, 1));
  }
}

TEST(Basis, PartialFractionReconstruction) {
  Tower tw = make_tower({});
  const int x = tw.var_of_level(0);
  std::mt19937 rng(8);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (int i = 0; i < 50; ++i) {
    std::vector<FieldElement> dc(5), nc(4);
    for (auto& c : dc) c = FieldElement(coef(rng));
    dc[4] = FieldElement(1);
    for (auto& c : nc) c = FieldElement(coef(rng));
    Poly den = Poly::from_coeffs(x, dc);
    FieldElement b = Poly::from_coeffs(x, nc).value() / den.value();
    if (b.is_zero()) continue;
    Poly d = split_fraction(b, x).denom;
    FieldElement sum;
    for (const auto& [q, mult] : irreducible_factor(d).factors) {
      for (int m = 1; m <= mult; ++m) {
        for (int k = 0; k < q.degree(); ++k) {
          BasisIndex theta;
          theta.set(0, Atom{k, m, q});
          sum += coefficient(b, theta, tw, 0) * theta.value(tw);
        }
      }
    }
    EXPECT_EQ(sum, b);
  }
}

}  // namespace
}  // namespace primtower
