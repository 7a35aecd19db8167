#include "primtower/reduction.hpp"

#include "primtower/basis.hpp"
#include "primtower/errors.hpp"
#include "primtower/hermite.hpp"

namespace primtower {
namespace {

std::size_t mode_index(BasisMode mode) { return mode == BasisMode::kRecurrence ? 0 : 1; }

FieldElement falling(int k, int j) {
  Integer out = 1;
  for (int i = 0; i < j; ++i) out *= k - i;
  return FieldElement(out);
}

FieldElement power_of(const Tower& tower, int level, int k) { return pow(tower.t(level), k); }

std::pair<FieldElement, FieldElement> make_pair_recurrence(int k, const Tower& tower, int level) {
  const AssociatedPairs& ap = tower.associated(level);
  const FieldElement t = tower.t(level);
  if (k == 0) return {t - ap.lambda, ap.phi_tp};
  FieldElement u = power_of(tower, level, k + 1) / FieldElement(k + 1) - ap.lambda * power_of(tower, level, k);
  FieldElement v = ap.phi_tp * power_of(tower, level, k);
  for (int j = 1; j <= k; ++j) {
    auto [mu, nu] = mu_nu(j, tower, level, BasisMode::kRecurrence);
    FieldElement w = falling(k, j) * power_of(tower, level, k - j);
    if (j % 2 == 0) w = -w;
    u += mu * w;
    v -= nu * w;
  }
  return {u, v};
}

std::pair<FieldElement, FieldElement> make_pair_naive(int k, const Tower& tower, int level) {
  const AssociatedPairs& ap = tower.associated(level);
  const FieldElement t = tower.t(level);
  if (k == 0) return {t - ap.lambda, ap.phi_tp};
  const int v = tower.var_of_level(level);
  Poly rhs = Poly::monomial(v, k - 1, FieldElement(k) * ap.lambda * tower.t_derivative(level));
  AuxiliaryResult aux = auxiliary_reduction(rhs, tower, level, BasisMode::kNaive);
  FieldElement u = power_of(tower, level, k + 1) / FieldElement(k + 1) - ap.lambda * power_of(tower, level, k) +
                   aux.q.value();
  FieldElement w = ap.phi_tp * power_of(tower, level, k) - aux.r.value();
  return {u, w};
}

#ifdef PRIMTOWER_CHECKS
void check_in_auxiliary(const Poly& r, const Tower& tower, int level, BasisMode mode) {
  for (const auto& a : r.coeffs()) {
    if (a.is_zero()) continue;
    RPair rp = complete_reduce(a, tower, level - 1, mode);
    if (rp.r != a) raise(ErrorCode::kNotInAuxiliary, "projection input is not in the auxiliary subspace");
  }
}
#endif

}  // namespace

RPair phi0_reduce(const FieldElement& f, const Tower& tower) {
  HermiteTriple h = hermite_reduce(f, tower, 0);
  const int x = tower.var_of_level(0);
  std::vector<FieldElement> coeffs = h.p.coeffs();
  std::vector<FieldElement> integral(coeffs.size() + 1);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    integral[k + 1] = coeffs[k] / FieldElement(static_cast<long>(k + 1));
  }
  return RPair{h.g + Poly::from_coeffs(x, integral).value(), h.s};
}

AuxiliaryResult auxiliary_reduction(const Poly& p, const Tower& tower, int level, BasisMode mode) {
  const int v = tower.var_of_level(level);
  const FieldElement& tp = tower.t_derivative(level);
  Poly rest = p;
  FieldElement q;
  FieldElement r;
  while (!rest.is_zero()) {
    const int d = rest.degree();
    FieldElement l = rest.lc();
    RPair rp = complete_reduce(l, tower, level - 1, mode);
    FieldElement td = pow(tower.t(level), d);
    q += rp.g * td;
    r += rp.r * td;
    FieldElement next = rest.value() - l * td;
    if (d > 0) next -= FieldElement(d) * rp.g * tp * pow(tower.t(level), d - 1);
    rest = Poly(v, next);
  }
  return AuxiliaryResult{Poly(v, q), Poly(v, r)};
}

std::pair<FieldElement, FieldElement> mu_nu(int k, const Tower& tower, int level, BasisMode mode) {
  Tower::LevelCache& cache = tower.level_cache(level);
  for (;;) {
    FieldElement last;
    std::size_t size = 0;
    {
      std::lock_guard<std::mutex> lock(tower.cache_mutex());
      if (cache.mu.size() > static_cast<std::size_t>(k)) {
        return {cache.mu[static_cast<std::size_t>(k)], cache.nu[static_cast<std::size_t>(k)]};
      }
      size = cache.mu.size();
      last = cache.mu.back();
    }
    RPair rp = complete_reduce(last * tower.t_derivative(level), tower, level - 1, mode);
    std::lock_guard<std::mutex> lock(tower.cache_mutex());
    if (cache.mu.size() == size) {
      cache.mu.push_back(rp.g);
      cache.nu.push_back(rp.r);
    }
  }
}

std::vector<std::pair<FieldElement, FieldElement>> basis_pairs(int d, const Tower& tower, int level, BasisMode mode) {
  Tower::LevelCache& cache = tower.level_cache(level);
  auto& pairs = cache.pairs[mode_index(mode)];
  for (;;) {
    std::size_t size = 0;
    {
      std::lock_guard<std::mutex> lock(tower.cache_mutex());
      if (pairs.size() > static_cast<std::size_t>(d)) {
        return {pairs.begin(), pairs.begin() + d + 1};
      }
      size = pairs.size();
    }
    const int k = static_cast<int>(size);
    auto next = mode == BasisMode::kRecurrence ? make_pair_recurrence(k, tower, level)
                                               : make_pair_naive(k, tower, level);
    std::lock_guard<std::mutex> lock(tower.cache_mutex());
    if (pairs.size() == size) pairs.push_back(std::move(next));
  }
}

ProjectionResult projection(const Poly& r, const Tower& tower, int level, BasisMode mode) {
  const int var = tower.var_of_level(level);
#ifdef PRIMTOWER_CHECKS
  check_in_auxiliary(r, tower, level, mode);
#endif
  FieldElement u;
  FieldElement v = r.value();
  const int d = r.degree();
  if (d < 0) return ProjectionResult{Poly(var), Poly(var)};
  auto pairs = basis_pairs(d, tower, level, mode);
  const AssociatedPairs& ap = tower.associated(level);
  for (int k = d; k >= 0; --k) {
    FieldElement a = Poly(var, v).coeff(k);
    if (a.is_zero()) continue;
    FieldElement b = coefficient(a, ap.theta, tower, level - 1);
    if (b.is_zero()) continue;
    FieldElement ct = b / ap.c;
    u += ct * pairs[static_cast<std::size_t>(k)].first;
    v -= ct * pairs[static_cast<std::size_t>(k)].second;
  }
  return ProjectionResult{Poly(var, u), Poly(var, v)};
}

RPair complete_reduce(const FieldElement& f, const Tower& tower, int level, BasisMode mode) {
  if (f.is_zero()) return RPair{};
  const int lf = tower.level_of(f);
  if (lf > level) raise(ErrorCode::kInvalidArgument, "element lies above the requested level");
  if (level == 0) return phi0_reduce(f, tower);
  if (lf < level) {
    RPair rp = complete_reduce(f, tower, level - 1, mode);
    if (rp.r.is_zero()) return rp;
    const AssociatedPairs& ap = tower.associated(level);
    FieldElement b = coefficient(rp.r, ap.theta, tower, level - 1);
    if (b.is_zero()) return rp;
    FieldElement ct = -b / ap.c;
    return RPair{rp.g - ct * (tower.t(level) - ap.lambda), rp.r + ct * ap.phi_tp};
  }
  HermiteTriple h = hermite_reduce(f, tower, level);
  if (h.p.is_zero()) return RPair{h.g, h.s};
  AuxiliaryResult aux = auxiliary_reduction(h.p, tower, level, mode);
  if (aux.r.is_zero()) return RPair{h.g + aux.q.value(), h.s};
  ProjectionResult pr = projection(aux.r, tower, level, mode);
  return RPair{h.g + aux.q.value() + pr.u.value(), h.s + pr.v.value()};
}

RPair complete_reduce(const FieldElement& f, const Tower& tower, BasisMode mode) {
  return complete_reduce(f, tower, tower.height(), mode);
}

std::vector<FieldElement> restrict_level(const FieldElement& f, const Tower& tower, int from, int to) {
  if (tower.level_of(f) > from || from > to || to > tower.height()) {
    raise(ErrorCode::kInvalidArgument, "restrict_level needs level(f) <= from <= to <= height");
  }
  std::vector<FieldElement> out;
  FieldElement r = complete_reduce(f, tower, from).r;
  for (int k = from + 1; k <= to; ++k) {
    const AssociatedPairs& ap = tower.associated(k);
    FieldElement ct = r.is_zero() ? FieldElement() : -coefficient(r, ap.theta, tower, k - 1) / ap.c;
    if (!ct.is_zero()) r += ct * ap.phi_tp;
    out.push_back(ct);
  }
  return out;
}

RemainderSplit remainder_split(const FieldElement& r, const Tower& tower, bool verify) {
  return remainder_split(r, tower, tower.height(), verify);
}

RemainderSplit remainder_split(const FieldElement& r, const Tower& tower, int level, bool verify) {
  if (verify && complete_reduce(r, tower, level).r != r) {
    raise(ErrorCode::kNotRemainder, "element is not a remainder");
  }
  RemainderSplit out;
  out.s.resize(static_cast<std::size_t>(level));
  FieldElement cur = r;
  for (int i = level; i >= 1; --i) {
    const int v = tower.var_of_level(i);
    PolyProper pp = poly_proper_split(cur, v);
    out.s[static_cast<std::size_t>(i - 1)] = pp.proper;
    auto coeffs = pp.poly.coeffs();
    for (std::size_t k = 1; k < coeffs.size(); ++k) {
      out.p += coeffs[k] * pow(tower.t(i), static_cast<int>(k));
    }
    cur = coeffs.empty() ? FieldElement() : coeffs[0];
  }
  out.r0 = cur;
  return out;
}

}  // namespace primtower
