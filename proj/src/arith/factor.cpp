#include "primtower/arith/factor.hpp"

#include <algorithm>
#include <tuple>

#include "primtower/errors.hpp"

namespace primtower {

namespace {

std::vector<std::pair<MPoly, int>> yun_parts(const MPoly& f, int v) {
  std::vector<std::pair<MPoly, int>> out;
  GcdCofactors g = gcd_cofactors(f, derivative(f, v));
  MPoly b = g.cofactor_a;
  MPoly d = g.cofactor_b - derivative(b, v);
  int i = 1;
  while (b.involves(v)) {
    GcdCofactors h = gcd_cofactors(b, d);
    if (h.gcd.involves(v)) out.emplace_back(sign_normal(h.gcd), i);
    b = h.cofactor_a;
    d = h.cofactor_b - derivative(b, v);
    ++i;
  }
  return out;
}

}  // namespace

std::vector<MPoly> FactorCache::factor(const MPoly& f, const FactorLimits& limits) {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = memo_.find(f);
    if (it != memo_.end()) return it->second;
  }
  std::vector<MPoly> result = factor_squarefree_multivariate(f, limits);
  std::lock_guard<std::mutex> lock(mutex_);
  return memo_.emplace(f, std::move(result)).first->second;
}

std::size_t FactorCache::size() const {
  std::lock_guard<std::mutex> lock(mutex_);
  return memo_.size();
}

Factorization squarefree_factor(const Poly& a) {
  if (a.is_zero()) raise(ErrorCode::kInvalidArgument, "squarefree factorization of zero");
  const int v = a.var();
  Factorization out;
  out.unit = a.lc();
  if (a.degree() == 0) return out;
  MPoly p = primitive_part_in(a.value().num(), v);
  for (auto& [part, mult] : yun_parts(p, v)) {
    out.factors.emplace_back(Poly(v, FieldElement(part)).monic(), mult);
  }
  return out;
}

Factorization irreducible_factor(const Poly& a, FactorCache* cache, const FactorLimits& limits) {
  if (a.is_zero()) raise(ErrorCode::kInvalidArgument, "factorization of zero");
  const int v = a.var();
  Factorization out;
  out.unit = a.lc();
  if (a.degree() == 0) return out;
  MPoly p = primitive_part_in(a.value().num(), v);
  std::vector<std::tuple<MPoly, int>> raw;
  for (auto& [part, mult] : yun_parts(p, v)) {
    std::vector<MPoly> fs = cache ? cache->factor(part, limits) : factor_squarefree_multivariate(part, limits);
    for (auto& f : fs) raw.emplace_back(std::move(f), mult);
  }
  std::sort(raw.begin(), raw.end(), [v](const auto& x, const auto& y) {
    const MPoly& a1 = std::get<0>(x);
    const MPoly& b1 = std::get<0>(y);
    if (a1.total_degree() != b1.total_degree()) return a1.total_degree() < b1.total_degree();
    if (a1.degree(v) != b1.degree(v)) return a1.degree(v) < b1.degree(v);
    return compare(a1, b1) < 0;
  });
  for (auto& [f, mult] : raw) out.factors.emplace_back(Poly(v, FieldElement(f)).monic(), mult);
  return out;
}

Poly expand(const Factorization& f, int var) {
  FieldElement r = f.unit;
  for (const auto& [q, m] : f.factors) r *= pow(q.value(), m);
  return Poly(var, r);
}

int denominator_multiplicity(const FieldElement& f, const Poly& q) {
  const int v = q.var();
  NumerDenom nd = split_fraction(f, v);
  Poly d = nd.denom;
  int m = 0;
  while (d.degree() >= q.degree()) {
    DivRem qr = divrem(d, q);
    if (!qr.remainder.is_zero()) break;
    d = qr.quotient;
    ++m;
  }
  return m;
}

std::vector<Poly> q_adic_expand(const FieldElement& r, const Poly& q, int m) {
  const int v = q.var();
  NumerDenom nd = split_fraction(r, v);
  Poly qm(v, pow(q.value(), m));
  DivRem split = divrem(nd.denom, qm);
  if (!split.remainder.is_zero()) raise(ErrorCode::kInvalidArgument, "q^m does not divide the denominator");
  const Poly& e = split.quotient;
  if (e.degree() > 0 && rem(e, q).is_zero()) {
    raise(ErrorCode::kInvalidArgument, "q divides the denominator with higher multiplicity");
  }
  Poly a = rem(nd.numer * invmod(e, qm), qm);
  std::vector<Poly> h(static_cast<std::size_t>(m), Poly(v));
  for (int j = 0; j < m; ++j) {
    DivRem qr = divrem(a, q);
    h[static_cast<std::size_t>(m - 1 - j)] = qr.remainder;
    a = qr.quotient;
  }
  return h;
}

}  // namespace primtower
