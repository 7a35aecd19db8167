#include "primtower/hermite.hpp"

#include "primtower/arith/factor.hpp"
#include "primtower/tower.hpp"

namespace primtower {

HermiteTriple hermite_reduce(const FieldElement& f, const Tower& tower, int level) {
  const int v = tower.var_of_level(level);
  NumerDenom nd = split_fraction(f, v);
  DivRem split = divrem(nd.numer, nd.denom);
  Poly d = nd.denom;
  Poly a = split.remainder;
  FieldElement g;
  if (!a.is_zero() && d.degree() > 1) {
    Factorization sqf = squarefree_factor(d);
    for (const auto& [factor, i] : sqf.factors) {
      if (i < 2) continue;
      Poly vi(v, pow(factor.value(), i));
      Poly u = exact_quotient(d, vi);
      Poly dv = tower.derivative(factor);
      for (int j = i - 1; j >= 1; --j) {
        auto [b, c] = diophantine(u * dv, factor, a.scale(FieldElement(-1) / FieldElement(j)));
        g += b.value() / pow(factor.value(), j);
        a = c.scale(FieldElement(-j)) - u * tower.derivative(b);
      }
      d = u * factor;
    }
  }
  DivRem last = divrem(a, d);
  return HermiteTriple{g, split.quotient + last.quotient, last.remainder.value() / d.value()};
}

}  // namespace primtower
