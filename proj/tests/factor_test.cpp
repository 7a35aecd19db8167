#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "primtower/arith/factor.hpp"
#include "primtower/arith/linalg.hpp"
#include "primtower/errors.hpp"
#include "oracles.hpp"

using namespace primtower;
using primtower::oracles::brute_force_factor;
using primtower::oracles::sorted_mpolys;

namespace {

MPoly X() { return MPoly::variable(0); }
MPoly T() { return MPoly::variable(1); }
MPoly U() { return MPoly::variable(2); }

Poly px(const MPoly& p) { return Poly(0, FieldElement(p)); }
Poly pt(const FieldElement& f) { return Poly(1, f); }

}  // namespace

TEST(Factor, SquarefreeExamples) {
  Factorization f = squarefree_factor(px(X() * X() * X() + X() * X()));
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_EQ(f.unit, FieldElement(1));
  EXPECT_EQ(f.factors[0].first, px(X() + MPoly(1)));
  EXPECT_EQ(f.factors[0].second, 1);
  EXPECT_EQ(f.factors[1].first, px(X()));
  EXPECT_EQ(f.factors[1].second, 2);

  FieldElement t = FieldElement::variable(1);
  Factorization g = squarefree_factor(pt((t + FieldElement(1)) * (t + FieldElement(1))));
  ASSERT_EQ(g.factors.size(), 1u);
  EXPECT_EQ(g.factors[0].second, 2);
  EXPECT_EQ(g.factors[0].first, pt(t + FieldElement(1)));

  Poly a = pt(FieldElement(3) * t * t + FieldElement::variable(0));
  Factorization h = squarefree_factor(a);
  ASSERT_EQ(h.factors.size(), 1u);
  EXPECT_EQ(h.unit, FieldElement(3));
  EXPECT_EQ(h.factors[0].first, a.monic());
  EXPECT_THROW(squarefree_factor(Poly(0)), Error);
}

TEST(Factor, IrreducibleExamples) {
  Factorization f = irreducible_factor(px(X() * X() - MPoly(1)));
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_EQ(f.factors[0].first, px(X() - MPoly(1)));
  EXPECT_EQ(f.factors[1].first, px(X() + MPoly(1)));

  Factorization g = irreducible_factor(px(X() * X() + MPoly(1)));
  ASSERT_EQ(g.factors.size(), 1u);

  Factorization h = irreducible_factor(Poly(1, FieldElement(T() * T() - X())));
  ASSERT_EQ(h.factors.size(), 1u);
  EXPECT_EQ(h.factors[0].first.degree(), 2);
}

TEST(Factor, ContentInLowerVariablesIsUnit) {
  // (x^2 - 1) * (t^2 - x) over Q(x)[t]: the x-part is a unit.
  MPoly p = (X() * X() - MPoly(1)) * (T() * T() - X()) * (T() + X());
  Factorization f = irreducible_factor(Poly(1, FieldElement(p)));
  ASSERT_EQ(f.factors.size(), 2u);
  EXPECT_EQ(f.factors[0].first, Poly(1, FieldElement(T() + X())));
  EXPECT_EQ(f.factors[1].first, Poly(1, FieldElement(T() * T() - X())));
  EXPECT_EQ(f.unit, FieldElement(X() * X() - MPoly(1)));
}

TEST(Factor, DeterministicAndReconstructs) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (int i = 0; i < 100; ++i) {
    MPoly p;
    for (int k = 0; k < 4; ++k) {
      std::vector<int> e{static_cast<int>(rng() % 3), static_cast<int>(rng() % 3)};
      p += MPoly::from_term(e, Integer(coef(rng)));
    }
    MPoly q = p * p.coeff(1, 0) + T();
    MPoly f = p * q;
    if (!f.involves(1)) continue;
    Poly a(1, FieldElement(f));
    Factorization r1 = irreducible_factor(a);
    Factorization r2 = irreducible_factor(a);
    EXPECT_EQ(expand(r1, 1), a);
    ASSERT_EQ(r1.factors.size(), r2.factors.size());
    for (std::size_t k = 0; k < r1.factors.size(); ++k) EXPECT_EQ(r1.factors[k].first, r2.factors[k].first);
  }
}

TEST(Factor, UnivariateAgreesWithBruteForce) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> coef(-6, 6);
  std::uniform_int_distribution<int> deg(1, 2);
  int checked = 0;
  for (int i = 0; i < 150; ++i) {
    ZPoly f{Integer(1)};
    int total = 0;
    while (total < 3) {
      int d = deg(rng);
      ZPoly g(static_cast<std::size_t>(d) + 1);
      for (auto& c : g) c = coef(rng);
      if (sgn(g.back()) == 0) g.back() = 1;
      f = to_zpoly(from_zpoly(f, 0) * from_zpoly(g, 0), 0);
      total += d;
    }
    if (f.size() > 5) continue;
    MPoly m = from_zpoly(f, 0);
    m = sign_normal(m.div_integer(integer_content(m)));
    if (!gcd(m, derivative(m, 0)).is_constant()) continue;
    std::vector<MPoly> expected;
    for (auto& z : brute_force_factor(to_zpoly(m, 0))) expected.push_back(from_zpoly(z, 0));
    std::vector<MPoly> actual = factor_squarefree_multivariate(m);
    EXPECT_EQ(sorted_mpolys(actual), sorted_mpolys(expected)) << m.debug_string();
    ++checked;
  }
  EXPECT_GT(checked, 40);
}

TEST(Factor, ZassenhausHardCases) {
  // x^4 + 1 is irreducible over Q but splits modulo every prime.
  ZPoly f{Integer(1), Integer(0), Integer(0), Integer(0), Integer(1)};
  EXPECT_EQ(zassenhaus(f).size(), 1u);
  // Cyclotomic product x^12 - 1.
  ZPoly g(13);
  g[0] = -1;
  g[12] = 1;
  MPoly gm = from_zpoly(g, 0);
  std::vector<MPoly> fs = factor_squarefree_multivariate(gm);
  EXPECT_EQ(fs.size(), 6u);
  MPoly prod(1);
  for (auto& h : fs) prod *= h;
  EXPECT_EQ(prod, gm);
}

TEST(Factor, MultivariateKnownFactors) {
  MPoly g1 = T() * X() + U() + MPoly(1);
  MPoly g2 = T() * T() - X() * U();
  MPoly g3 = X() * X() * T() * T() + U() * U() + MPoly(3);
  std::vector<MPoly> fs = factor_squarefree_multivariate(g1 * g2 * g3);
  EXPECT_EQ(sorted_mpolys(fs), sorted_mpolys({sign_normal(g1), sign_normal(g2), sign_normal(g3)}));
  // Kronecker path: no variable of degree one and a reducible product.
  MPoly h1 = X() * X() + T() * T() + MPoly(1);
  MPoly h2 = X() * X() - T() * T() * X() + MPoly(2);
  std::vector<MPoly> hs = factor_squarefree_multivariate(h1 * h2);
  EXPECT_EQ(sorted_mpolys(hs), sorted_mpolys({sign_normal(h1), sign_normal(h2)}));
}

TEST(Factor, QAdicExpansion) {
  FieldElement x = FieldElement::variable(0);
  Poly q = px(X() - MPoly(1));
  std::vector<Poly> h = q_adic_expand(FieldElement(1) / pow(x - FieldElement(1), 2), q, 2);
  ASSERT_EQ(h.size(), 2u);
  EXPECT_TRUE(h[0].is_zero());
  EXPECT_EQ(h[1].value(), FieldElement(1));

  std::vector<Poly> h2 = q_adic_expand((FieldElement(2) * x + FieldElement(3)) / (x * x), px(X()), 2);
  EXPECT_EQ(h2[0].value(), FieldElement(2));
  EXPECT_EQ(h2[1].value(), FieldElement(3));

  FieldElement t = FieldElement::variable(1);
  std::vector<Poly> h3 = q_adic_expand(-x / (t + FieldElement(1)), pt(t + FieldElement(1)), 1);
  EXPECT_EQ(h3[0].value(), -x);

  EXPECT_THROW(q_adic_expand(FieldElement(1) / x, px(X() - MPoly(1)), 1), Error);
}

TEST(Factor, PartialFractionReconstruction) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-5, 5);
  FieldElement x = FieldElement::variable(0);
  for (int i = 0; i < 40; ++i) {
    FieldElement den(1);
    for (int k = 0; k < 3; ++k) {
      int kind = static_cast<int>(rng() % 3);
      FieldElement c(coef(rng));
      if (kind == 0) den *= x - c;
      if (kind == 1) den *= x * x + c * c + FieldElement(1);
      if (kind == 2) den *= pow(x - c, 2);
    }
    FieldElement num;
    Poly dpoly(0, den);
    for (int k = 0; k < dpoly.degree(); ++k) num += FieldElement(coef(rng)) * pow(x, k);
    FieldElement r = num / den;
    if (r.is_zero()) continue;
    Factorization fac = irreducible_factor(split_fraction(r, 0).denom);
    FieldElement sum;
    for (const auto& [q, m] : fac.factors) {
      std::vector<Poly> h = q_adic_expand(r, q, m);
      for (int j = 1; j <= m; ++j) sum += h[j - 1].value() / pow(q.value(), j);
    }
    EXPECT_EQ(sum, r);
  }
}

TEST(LinAlg, SolveAndNullspace) {
  FieldElement x = FieldElement::variable(0);
  Matrix a{{FieldElement(1), FieldElement(2)}, {x, FieldElement(2) * x}};
  auto ns = nullspace(a, 2);
  ASSERT_EQ(ns.size(), 1u);
  EXPECT_TRUE((ns[0][0] + FieldElement(2) * ns[0][1]).is_zero());
  EXPECT_EQ(rank(a, 2), 1);
  auto z = solve(a, {FieldElement(3), FieldElement(3) * x}, 2);
  ASSERT_TRUE(z.has_value());
  EXPECT_EQ((*z)[0] + FieldElement(2) * (*z)[1], FieldElement(3));
  EXPECT_FALSE(solve(a, {FieldElement(1), FieldElement(2)}, 2).has_value());
}
