#include <gtest/gtest.h>

#include <random>

#include "primtower/arith/field_element.hpp"
#include "primtower/errors.hpp"

using namespace primtower;

namespace {

MPoly X() { return MPoly::variable(0); }
MPoly Y() { return MPoly::variable(1); }
MPoly Z() { return MPoly::variable(2); }

MPoly random_mpoly(std::mt19937_64& rng, int nvars, int max_deg, int terms, int coeff_range) {
  std::uniform_int_distribution<int> exp(0, max_deg);
  std::uniform_int_distribution<int> coef(-coeff_range, coeff_range);
  MPoly r;
  for (int i = 0; i < terms; ++i) {
    std::vector<int> e(nvars);
    for (auto& d : e) d = exp(rng);
    r += MPoly::from_term(e, Integer(coef(rng)));
  }
  return r;
}

}  // namespace

TEST(MPoly, CanonicalForm) {
  MPoly a = X() * X() - MPoly(1);
  MPoly b = (X() - MPoly(1)) * (X() + MPoly(1));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.degree(0), 2);
  EXPECT_TRUE((X() - X()).is_zero());
  EXPECT_EQ((Y() * X() - X() * Y()), MPoly());
  MPoly c = Y() + X();
  EXPECT_EQ(c.var(), 1);
  EXPECT_EQ(c.degree(0), 1);
  EXPECT_EQ(c.total_degree(), 1);
}

TEST(MPoly, ExactDivisionAndPseudoDivision) {
  MPoly f = (X() * Y() + MPoly(2)) * (Y() * Y() - X());
  auto q = divide_exact(f, Y() * Y() - X());
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, X() * Y() + MPoly(2));
  EXPECT_FALSE(divide_exact(f, Y() + MPoly(1)).has_value());

  MPoly a = Y() * Y() * Y() + X();
  MPoly b = X() * Y() + MPoly(1);
  PseudoDivision pd = pseudo_divide(a, b, 1);
  MPoly lhs = pow(b.lc(1), static_cast<unsigned>(pd.exponent)) * a;
  EXPECT_EQ(lhs, pd.quotient * b + pd.remainder);
  EXPECT_LT(pd.remainder.degree(1), 1);
}

TEST(MPoly, GcdRandomized) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 60; ++i) {
    MPoly g = random_mpoly(rng, 3, 2, 3, 5);
    MPoly a = random_mpoly(rng, 3, 2, 3, 5);
    MPoly b = random_mpoly(rng, 3, 2, 3, 5);
    if (g.is_zero() || a.is_zero() || b.is_zero()) continue;
    MPoly fa = g * a;
    MPoly fb = g * b;
    GcdCofactors r = gcd_cofactors(fa, fb);
    EXPECT_EQ(r.gcd * r.cofactor_a, fa);
    EXPECT_EQ(r.gcd * r.cofactor_b, fb);
    EXPECT_TRUE(divide_exact(r.gcd, sign_normal(g)).has_value() ||
                divide_exact(r.gcd, g).has_value());
    GcdCofactors co = gcd_cofactors(r.cofactor_a, r.cofactor_b);
    EXPECT_TRUE(co.gcd.is_one()) << co.gcd.debug_string();
  }
}

TEST(MPoly, SubstituteAndEvaluate) {
  MPoly f = X() * X() * Y() + Z();
  EXPECT_EQ(evaluate(f, 0, Integer(2)), MPoly(4) * Y() + Z());
  EXPECT_EQ(substitute(f, 1, X() + Z()), X() * X() * X() + X() * X() * Z() + Z());
  EXPECT_EQ(derivative(f, 0), MPoly(2) * X() * Y());
}

TEST(FieldElement, Normalization) {
  FieldElement x = FieldElement::variable(0);
  FieldElement t = FieldElement::variable(1);
  FieldElement a = FieldElement::fraction(MPoly(2) * X() + MPoly(2), MPoly(2) * X());
  EXPECT_EQ(a, (x + FieldElement(1)) / x);
  EXPECT_EQ((t * x) / x, t);
  FieldElement b = ((t + FieldElement(1)) * (t - FieldElement(1))) / ((t - FieldElement(1)) * x);
  EXPECT_EQ(b, (t + FieldElement(1)) / x);
  EXPECT_EQ(b.level(), 1);
  EXPECT_EQ(((t * x) / t).level(), 0);
  EXPECT_THROW(x / FieldElement(), Error);
}

TEST(FieldElement, ArithmeticRandomized) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 40; ++i) {
    MPoly n1 = random_mpoly(rng, 2, 2, 3, 4), d1 = random_mpoly(rng, 2, 2, 3, 4);
    MPoly n2 = random_mpoly(rng, 2, 2, 3, 4), d2 = random_mpoly(rng, 2, 2, 3, 4);
    if (d1.is_zero() || d2.is_zero()) continue;
    FieldElement a = FieldElement::fraction(n1, d1);
    FieldElement b = FieldElement::fraction(n2, d2);
    EXPECT_EQ(a + b - b, a);
    EXPECT_EQ((a + b) * (a - b), a * a - b * b);
    if (!b.is_zero()) {
      EXPECT_EQ(a / b * b, a);
    }
  }
}

TEST(Poly, DivRemExamples) {
  Poly x(0, FieldElement::variable(0));
  Poly one(0, FieldElement(1));
  DivRem qr = divrem(x * x + one, x);
  EXPECT_EQ(qr.quotient, x);
  EXPECT_EQ(qr.remainder, one);

  Poly t(1, FieldElement::variable(1));
  Poly t1(1, FieldElement(1));
  DivRem qr2 = divrem(t * t, t - t1);
  EXPECT_EQ(qr2.quotient, t + t1);
  EXPECT_EQ(qr2.remainder, t1);

  Poly p(1, FieldElement::variable(1) * FieldElement::variable(0) + FieldElement(3));
  DivRem qr3 = divrem(p, t1);
  EXPECT_EQ(qr3.quotient, p);
  EXPECT_TRUE(qr3.remainder.is_zero());
}

TEST(Poly, DivRemReconstructionRandomized) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    MPoly a = random_mpoly(rng, 2, 3, 4, 6);
    MPoly b = random_mpoly(rng, 2, 2, 3, 6);
    MPoly da = random_mpoly(rng, 1, 2, 2, 3);
    if (b.degree(1) < 0 || da.is_zero()) continue;
    Poly pa(1, FieldElement::fraction(a, da));
    Poly pb(1, FieldElement(b));
    DivRem qr = divrem(pa, pb);
    EXPECT_EQ(qr.quotient * pb + qr.remainder, pa);
    EXPECT_LT(qr.remainder.degree(), pb.degree());
  }
}

TEST(Poly, GcdExamples) {
  Poly x(0, FieldElement::variable(0));
  Poly one(0, FieldElement(1));
  EXPECT_EQ(gcd(x * x - one, x - one), x - one);
  FieldElement tx = FieldElement::variable(1);
  Poly t(1, tx);
  Poly t1(1, FieldElement(1));
  Poly inv_x(1, FieldElement(1) / FieldElement::variable(0));
  EXPECT_EQ(gcd(t + t1, inv_x), t1);
  Poly a(1, FieldElement(3) * tx * tx + FieldElement::variable(0));
  EXPECT_EQ(gcd(a, a), a.monic());
  EXPECT_TRUE(gcd(Poly(1), Poly(1)).is_zero());
}

TEST(Poly, GcdexAndInverse) {
  FieldElement x = FieldElement::variable(0);
  Poly t(1, FieldElement::variable(1));
  Poly a = t * t - Poly(1, x);
  Poly b = t + Poly(1, FieldElement(1));
  GcdEx e = gcdex(a, b);
  EXPECT_EQ(e.s * a + e.t * b, e.g);
  EXPECT_EQ(e.g.degree(), 0);
  Poly inv = invmod(b, a);
  EXPECT_TRUE(rem(inv * b - Poly(1, FieldElement(1)), a).is_zero());
}

TEST(Poly, ProperSplit) {
  FieldElement x = FieldElement::variable(0);
  PolyProper pp = poly_proper_split((x * x + FieldElement(1)) / x, 0);
  EXPECT_EQ(pp.poly.value(), x);
  EXPECT_EQ(pp.proper, FieldElement(1) / x);
  PolyProper pp2 = poly_proper_split(x * x, 0);
  EXPECT_EQ(pp2.poly.value(), x * x);
  EXPECT_TRUE(pp2.proper.is_zero());
}

TEST(Poly, SplitFractionNonMonic) {
  FieldElement x = FieldElement::variable(0);
  FieldElement t = FieldElement::variable(1);
  for (const FieldElement& f : {(x + 1) / (FieldElement(3) * x * x - 2),
                                (t * x - 1) / ((FieldElement(2) * x + 6) * t * t + x),
                                (t + 5) / (FieldElement(7) * x)}) {
    for (int v : {0, 1}) {
      NumerDenom nd = split_fraction(f, v);
      EXPECT_EQ(nd.numer.value() / nd.denom.value(), f);
      EXPECT_TRUE(nd.denom.lc().is_one() || nd.denom.degree() == 0);
    }
  }
}
