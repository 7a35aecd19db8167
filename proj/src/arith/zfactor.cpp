#include "primtower/arith/zfactor.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>

#include "primtower/errors.hpp"

namespace primtower {

namespace {

using u64 = std::uint64_t;
using GF = std::vector<u64>;

// ---- arithmetic in GF(p)[x], p < 2^31 ----

void trim(GF& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

u64 pow_mod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  a %= p;
  while (e > 0) {
    if (e & 1U) r = r * a % p;
    a = a * a % p;
    e >>= 1U;
  }
  return r;
}

u64 inv_mod(u64 a, u64 p) { return pow_mod(a, p - 2, p); }

GF gf_sub(const GF& a, const GF& b, u64 p) {
  GF r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    u64 x = i < a.size() ? a[i] : 0;
    u64 y = i < b.size() ? b[i] : 0;
    r[i] = (x + p - y) % p;
  }
  trim(r);
  return r;
}

GF gf_mul(const GF& a, const GF& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  GF r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

GF gf_divrem(const GF& a, const GF& b, u64 p, GF* quotient) {
  GF r = a;
  trim(r);
  const std::size_t db = b.size() - 1;
  const u64 inv = inv_mod(b.back(), p);
  GF q;
  if (r.size() >= b.size()) q.assign(r.size() - db, 0);
  while (r.size() >= b.size()) {
    const std::size_t shift = r.size() - b.size();
    const u64 c = r.back() * inv % p;
    q[shift] = c;
    for (std::size_t j = 0; j <= db; ++j) r[shift + j] = (r[shift + j] + p - c * b[j] % p) % p;
    trim(r);
  }
  if (quotient) {
    trim(q);
    *quotient = std::move(q);
  }
  return r;
}

GF gf_rem(const GF& a, const GF& b, u64 p) { return gf_divrem(a, b, p, nullptr); }

GF gf_quo(const GF& a, const GF& b, u64 p) {
  GF q;
  gf_divrem(a, b, p, &q);
  return q;
}

GF gf_monic(const GF& a, u64 p) {
  if (a.empty()) return a;
  const u64 inv = inv_mod(a.back(), p);
  GF r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * inv % p;
  return r;
}

GF gf_gcd(GF a, GF b, u64 p) {
  while (!b.empty()) {
    GF r = gf_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return gf_monic(a, p);
}

// s*a + t*b = gcd (monic)
void gf_gcdex(const GF& a, const GF& b, u64 p, GF& s, GF& t) {
  GF r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
  while (!r1.empty()) {
    GF q;
    GF r2 = gf_divrem(r0, r1, p, &q);
    GF s2 = gf_sub(s0, gf_mul(q, s1, p), p);
    GF t2 = gf_sub(t0, gf_mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const u64 inv = inv_mod(r0.back(), p);
  for (auto& c : s0) c = c * inv % p;
  for (auto& c : t0) c = c * inv % p;
  trim(s0);
  trim(t0);
  s = std::move(s0);
  t = std::move(t0);
}

GF gf_powmod(const GF& base, const Integer& e, const GF& mod, u64 p) {
  GF result{1};
  GF b = gf_rem(base, mod, p);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = gf_rem(gf_mul(result, result, p), mod, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = gf_rem(gf_mul(result, b, p), mod, p);
  }
  return result;
}

GF gf_derivative(const GF& a, u64 p) {
  GF r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * (i % p) % p);
  trim(r);
  return r;
}

GF gf_from_z(const ZPoly& f, u64 p) {
  GF r(f.size());
  Integer P(static_cast<unsigned long>(p));
  for (std::size_t i = 0; i < f.size(); ++i) {
    Integer m;
    mpz_fdiv_r(m.get_mpz_t(), f[i].get_mpz_t(), P.get_mpz_t());
    r[i] = m.get_ui();
  }
  trim(r);
  return r;
}

ZPoly z_from_gf(const GF& f) {
  ZPoly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = static_cast<unsigned long>(f[i]);
  return r;
}

// Distinct-degree then equal-degree (Cantor-Zassenhaus) factorization of a
// monic squarefree polynomial.
std::vector<GF> gf_factor_sqf(const GF& f, u64 p, std::mt19937_64& rng) {
  std::vector<std::pair<GF, int>> ddf;
  GF g = f;
  GF x{0, 1};
  GF h = x;
  for (int i = 1; 2 * i <= static_cast<int>(g.size()) - 1; ++i) {
    h = gf_powmod(h, Integer(static_cast<unsigned long>(p)), g, p);
    GF d = gf_gcd(g, gf_sub(h, x, p), p);
    if (d.size() > 1) {
      ddf.emplace_back(d, i);
      g = gf_quo(g, d, p);
      h = gf_rem(h, g, p);
    }
  }
  if (g.size() > 1) ddf.emplace_back(g, static_cast<int>(g.size()) - 1);

  std::vector<GF> out;
  for (auto& [poly, d] : ddf) {
    std::vector<GF> stack{poly};
    Integer e;
    mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(d));
    e = (e - 1) / 2;
    while (!stack.empty()) {
      GF cur = std::move(stack.back());
      stack.pop_back();
      const int n = static_cast<int>(cur.size()) - 1;
      if (n == d) {
        out.push_back(std::move(cur));
        continue;
      }
      std::uniform_int_distribution<u64> dist(0, p - 1);
      while (true) {
        GF a(static_cast<std::size_t>(n));
        for (auto& c : a) c = dist(rng);
        trim(a);
        if (a.size() < 2) continue;
        GF b = gf_powmod(a, e, cur, p);
        b = gf_sub(b, GF{1}, p);
        GF c = gf_gcd(cur, b, p);
        if (c.size() > 1 && c.size() < cur.size()) {
          stack.push_back(gf_quo(cur, c, p));
          stack.push_back(std::move(c));
          break;
        }
      }
    }
  }
  return out;
}

// ---- arithmetic in Z[x] ----

void ztrim(ZPoly& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

ZPoly zadd(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] += b[i];
  }
  ztrim(r);
  return r;
}

ZPoly zsub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] -= b[i];
  }
  ztrim(r);
  return r;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  ztrim(r);
  return r;
}

// Division by a monic polynomial.
ZPoly zdivrem_monic(const ZPoly& a, const ZPoly& b, ZPoly* quotient) {
  ZPoly r = a;
  ztrim(r);
  const std::size_t db = b.size() - 1;
  ZPoly q;
  if (r.size() >= b.size()) q.assign(r.size() - db, Integer(0));
  for (std::size_t k = r.size(); k-- > db;) {
    if (sgn(r[k]) == 0) continue;
    Integer c = r[k];
    q[k - db] = c;
    for (std::size_t j = 0; j <= db; ++j) r[k - db + j] -= c * b[j];
  }
  ztrim(r);
  if (quotient) {
    ztrim(q);
    *quotient = std::move(q);
  }
  return r;
}

ZPoly ztrunc(const ZPoly& a, const Integer& m) {
  ZPoly r(a.size());
  const Integer half = m / 2;
  for (std::size_t i = 0; i < a.size(); ++i) {
    mpz_fdiv_r(r[i].get_mpz_t(), a[i].get_mpz_t(), m.get_mpz_t());
    if (r[i] > half) r[i] -= m;
  }
  ztrim(r);
  return r;
}

ZPoly zscale(const ZPoly& a, const Integer& k) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * k;
  ztrim(r);
  return r;
}

ZPoly zprimitive(const ZPoly& a) {
  Integer g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (sgn(g) == 0) return a;
  if (sgn(a.back()) < 0) g = -g;
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) mpz_divexact(r[i].get_mpz_t(), a[i].get_mpz_t(), g.get_mpz_t());
  return r;
}

std::optional<ZPoly> zdiv_exact(const ZPoly& a, const ZPoly& b) {
  if (b.size() > a.size()) return std::nullopt;
  ZPoly r = a;
  const std::size_t db = b.size() - 1;
  ZPoly q(a.size() - db);
  for (std::size_t k = r.size(); k-- > db;) {
    if (sgn(r[k]) == 0) continue;
    if (!mpz_divisible_p(r[k].get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
    Integer c;
    mpz_divexact(c.get_mpz_t(), r[k].get_mpz_t(), b.back().get_mpz_t());
    for (std::size_t j = 0; j <= db; ++j) r[k - db + j] -= c * b[j];
    q[k - db] = std::move(c);
  }
  for (std::size_t k = 0; k < db; ++k) {
    if (sgn(r[k]) != 0) return std::nullopt;
  }
  ztrim(q);
  return q;
}

Integer zmax_norm(const ZPoly& a) {
  Integer m = 0;
  for (const auto& c : a) {
    if (abs(c) > m) m = abs(c);
  }
  return m;
}

// ---- Hensel lifting ----

struct HenselState {
  ZPoly g, h, s, t;
};

HenselState hensel_step(const Integer& m, const ZPoly& f, const HenselState& in) {
  const Integer M = m * m;
  ZPoly e = ztrunc(zsub(f, zmul(in.g, in.h)), M);
  ZPoly q;
  ZPoly r = zdivrem_monic(zmul(in.s, e), in.h, &q);
  q = ztrunc(q, M);
  r = ztrunc(r, M);
  ZPoly u = zadd(zmul(in.t, e), zmul(q, in.g));
  HenselState out;
  out.g = ztrunc(zadd(in.g, u), M);
  out.h = ztrunc(zadd(in.h, r), M);
  u = zadd(zmul(in.s, out.g), zmul(in.t, out.h));
  ZPoly b = ztrunc(zsub(u, ZPoly{Integer(1)}), M);
  ZPoly c;
  ZPoly d = zdivrem_monic(zmul(in.s, b), out.h, &c);
  c = ztrunc(c, M);
  d = ztrunc(d, M);
  u = zadd(zmul(in.t, b), zmul(c, out.g));
  out.s = ztrunc(zsub(in.s, d), M);
  out.t = ztrunc(zsub(in.t, u), M);
  return out;
}

std::vector<ZPoly> hensel_lift(u64 p, const ZPoly& f, const std::vector<GF>& factors, int l) {
  const Integer P(static_cast<unsigned long>(p));
  Integer pl;
  mpz_pow_ui(pl.get_mpz_t(), P.get_mpz_t(), static_cast<unsigned long>(l));
  const std::size_t r = factors.size();
  const Integer& lc = f.back();
  if (r == 1) {
    Integer inv;
    mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), pl.get_mpz_t());
    return {ztrunc(zscale(f, inv), pl)};
  }
  const std::size_t k = r / 2;
  int d = 0;
  while ((1 << d) < l) ++d;
  Integer lc_mod;
  mpz_fdiv_r_ui(lc_mod.get_mpz_t(), lc.get_mpz_t(), static_cast<unsigned long>(p));
  GF g{static_cast<u64>(lc_mod.get_ui())};
  for (std::size_t i = 0; i < k; ++i) g = gf_mul(g, factors[i], p);
  GF h = factors[k];
  for (std::size_t i = k + 1; i < r; ++i) h = gf_mul(h, factors[i], p);
  GF s, t;
  gf_gcdex(g, h, p, s, t);
  HenselState st{z_from_gf(g), z_from_gf(h), z_from_gf(s), z_from_gf(t)};
  Integer m = P;
  for (int i = 0; i < d; ++i) {
    st = hensel_step(m, f, st);
    m = m * m;
  }
  std::vector<GF> left(factors.begin(), factors.begin() + static_cast<long>(k));
  std::vector<GF> right(factors.begin() + static_cast<long>(k), factors.end());
  std::vector<ZPoly> out = hensel_lift(p, st.g, left, l);
  std::vector<ZPoly> rest = hensel_lift(p, st.h, right, l);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

bool is_small_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Calls fn on each k-subset of `items` (as index vectors) until fn returns true.
template <typename Fn>
bool for_each_subset(const std::vector<std::size_t>& items, std::size_t k, Fn&& fn) {
  const std::size_t n = items.size();
  if (k > n) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::vector<std::size_t> subset(k);
    for (std::size_t i = 0; i < k; ++i) subset[i] = items[idx[i]];
    if (fn(subset)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<ZPoly> zassenhaus(const ZPoly& f_in, const FactorLimits& limits) {
  ZPoly f = f_in;
  ztrim(f);
  const int n = static_cast<int>(f.size()) - 1;
  if (n <= 1) return {f};

  const Integer A = zmax_norm(f);
  Integer b = f.back();
  Integer sqrt_n1 = sqrt(Integer(n + 1)) + 1;
  Integer two_n;
  mpz_ui_pow_ui(two_n.get_mpz_t(), 2, static_cast<unsigned long>(n));
  const Integer B = sqrt_n1 * two_n * A * abs(b);

  std::mt19937_64 rng(0x5eed);
  std::vector<std::pair<u64, std::vector<GF>>> candidates;
  for (u64 p = 3; candidates.size() < 5 && p < 100000; p += 2) {
    if (!is_small_prime(p)) continue;
    Integer bm;
    mpz_fdiv_r_ui(bm.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(p));
    if (sgn(bm) == 0) continue;
    GF F = gf_monic(gf_from_z(f, p), p);
    if (static_cast<int>(F.size()) - 1 != n) continue;
    if (gf_gcd(F, gf_derivative(F, p), p).size() != 1) continue;
    std::vector<GF> fs = gf_factor_sqf(F, p, rng);
    if (fs.size() == 1) return {f};
    candidates.emplace_back(p, std::move(fs));
  }
  if (candidates.empty()) raise(ErrorCode::kResourceLimit, "no suitable prime for factorization");
  auto best = std::min_element(candidates.begin(), candidates.end(),
                               [](const auto& x, const auto& y) { return x.second.size() < y.second.size(); });
  const u64 p = best->first;
  std::vector<GF> modular = best->second;
  if (static_cast<int>(modular.size()) > limits.max_modular_factors) {
    raise(ErrorCode::kResourceLimit, "too many modular factors in factorization");
  }
  std::sort(modular.begin(), modular.end());

  const Integer bound = 2 * B + 1;
  int l = 1;
  Integer pl(static_cast<unsigned long>(p));
  while (pl <= bound) {
    pl *= static_cast<unsigned long>(p);
    ++l;
  }
  std::vector<ZPoly> lifted = hensel_lift(p, f, modular, l);

  std::vector<std::size_t> remaining(lifted.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
  std::vector<ZPoly> factors;
  std::size_t s = 1;
  while (2 * s <= remaining.size()) {
    std::vector<std::size_t> found;
    ZPoly quotient;
    ZPoly factor;
    bool hit = for_each_subset(remaining, s, [&](const std::vector<std::size_t>& subset) {
      ZPoly G{b};
      for (std::size_t i : subset) G = ztrunc(zmul(G, lifted[i]), pl);
      G = zprimitive(G);
      if (G.size() < 2) return false;
      if (sgn(f[0]) != 0 && (sgn(G[0]) == 0 || !mpz_divisible_p(f[0].get_mpz_t(), G[0].get_mpz_t()))) {
        return false;
      }
      auto q = zdiv_exact(f, G);
      if (!q) return false;
      found = subset;
      quotient = std::move(*q);
      factor = std::move(G);
      return true;
    });
    if (!hit) {
      ++s;
      continue;
    }
    factors.push_back(std::move(factor));
    f = std::move(quotient);
    b = f.back();
    std::vector<std::size_t> next;
    for (std::size_t i : remaining) {
      if (std::find(found.begin(), found.end(), i) == found.end()) next.push_back(i);
    }
    remaining = std::move(next);
  }
  if (f.size() > 1) factors.push_back(zprimitive(f));
  return factors;
}

ZPoly to_zpoly(const MPoly& f, int var) {
  std::vector<MPoly> cs = f.to_univariate(var);
  ZPoly r(cs.size());
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (!cs[i].is_constant()) raise(ErrorCode::kInvalidArgument, "polynomial is not univariate");
    r[i] = cs[i].constant();
  }
  return r;
}

MPoly from_zpoly(const ZPoly& f, int var) {
  std::vector<MPoly> cs;
  cs.reserve(f.size());
  for (const auto& c : f) cs.emplace_back(c);
  return MPoly::from_coeffs(var, std::move(cs));
}

namespace {

std::vector<int> involved_vars(const MPoly& f) {
  std::vector<bool> seen;
  f.collect_vars(seen);
  std::vector<int> out;
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (seen[i]) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::vector<std::pair<MPoly, int>> yun(const MPoly& f, int v) {
  std::vector<std::pair<MPoly, int>> out;
  MPoly df = derivative(f, v);
  GcdCofactors g = gcd_cofactors(f, df);
  MPoly b = g.cofactor_a;
  MPoly c = g.cofactor_b;
  MPoly d = c - derivative(b, v);
  int i = 1;
  while (b.involves(v)) {
    GcdCofactors h = gcd_cofactors(b, d);
    if (h.gcd.involves(v)) out.emplace_back(sign_normal(h.gcd), i);
    b = h.cofactor_a;
    c = h.cofactor_b;
    d = c - derivative(b, v);
    ++i;
  }
  return out;
}

bool certify_irreducible(const MPoly& f, int main_var, const std::vector<int>& vars) {
  std::mt19937_64 rng(0xC0FFEE ^ f.hash());
  std::uniform_int_distribution<int> dist(-24, 24);
  const int deg = f.degree(main_var);
  for (int attempt = 0; attempt < 4; ++attempt) {
    MPoly u = f;
    for (int w : vars) {
      if (w == main_var) continue;
      u = evaluate(u, w, Integer(dist(rng)));
    }
    if (u.degree(main_var) != deg) continue;
    MPoly du = derivative(u, main_var);
    if (gcd(u, du).involves(main_var)) continue;
    MPoly pu = sign_normal(u.div_integer(integer_content(u)));
    if (zassenhaus(to_zpoly(pu, main_var)).size() == 1) return true;
  }
  return false;
}

void kronecker(const MPoly& f, const std::vector<int>& vars, const FactorLimits& limits,
               std::vector<MPoly>& out) {
  std::vector<int> bound(vars.size());
  std::vector<long> radix(vars.size());
  long total = 0;
  long r = 1;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    bound[i] = f.degree(vars[i]);
    radix[i] = r;
    total += bound[i] * r;
    if (total > limits.max_kronecker_degree) {
      raise(ErrorCode::kResourceLimit, "factorization exceeds the Kronecker degree limit");
    }
    r *= bound[i] + 1;
  }
  const int nv = vars.back() + 1;
  ZPoly image(static_cast<std::size_t>(total) + 1);
  f.for_each_term(nv, [&](const std::vector<int>& e, const Integer& c) {
    long k = 0;
    for (std::size_t i = 0; i < vars.size(); ++i) k += e[vars[i]] * radix[i];
    image[k] += c;
  });
  ztrim(image);

  auto invert = [&](const ZPoly& g) {
    MPoly result;
    std::vector<int> e(static_cast<std::size_t>(nv), 0);
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (sgn(g[k]) == 0) continue;
      long rest = static_cast<long>(k);
      for (std::size_t i = vars.size(); i-- > 0;) {
        e[vars[i]] = static_cast<int>(rest / radix[i]);
        rest %= radix[i];
      }
      result += MPoly::from_term(e, g[k]);
    }
    return result;
  };

  std::vector<ZPoly> pieces;
  for (auto& [part, mult] : yun(from_zpoly(image, 0), 0)) {
    for (auto& z : zassenhaus(to_zpoly(part, 0), limits)) {
      for (int m = 0; m < mult; ++m) pieces.push_back(z);
    }
  }
  if (static_cast<int>(pieces.size()) > limits.max_modular_factors) {
    raise(ErrorCode::kResourceLimit, "too many image factors in multivariate factorization");
  }

  MPoly rest = f;
  std::vector<std::size_t> remaining(pieces.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
  std::size_t s = 1;
  while (2 * s <= remaining.size()) {
    std::vector<std::size_t> found;
    MPoly factor, quotient;
    bool hit = for_each_subset(remaining, s, [&](const std::vector<std::size_t>& subset) {
      ZPoly g{Integer(1)};
      for (std::size_t i : subset) g = zmul(g, pieces[i]);
      MPoly cand = invert(g);
      if (cand.is_constant()) return false;
      auto q = divide_exact(rest, cand);
      if (!q) return false;
      found = subset;
      factor = sign_normal(cand);
      quotient = std::move(*q);
      return true;
    });
    if (!hit) {
      ++s;
      continue;
    }
    out.push_back(std::move(factor));
    rest = std::move(quotient);
    std::vector<std::size_t> next;
    for (std::size_t i : remaining) {
      if (std::find(found.begin(), found.end(), i) == found.end()) next.push_back(i);
    }
    remaining = std::move(next);
  }
  if (!rest.is_constant()) out.push_back(sign_normal(rest));
}

void factor_rec(const MPoly& f, const FactorLimits& limits, std::vector<MPoly>& out) {
  if (f.is_constant()) return;
  std::vector<int> vars = involved_vars(f);
  if (vars.size() == 1) {
    for (auto& z : zassenhaus(to_zpoly(f, vars[0]), limits)) out.push_back(from_zpoly(z, vars[0]));
    return;
  }
  for (int w : vars) {
    MPoly c = content_in(f, w);
    if (!c.is_constant()) {
      factor_rec(c, limits, out);
      factor_rec(sign_normal(exact_div(f, c)), limits, out);
      return;
    }
  }
  for (int w : vars) {
    if (f.degree(w) == 1) {
      out.push_back(f);
      return;
    }
  }
  if (certify_irreducible(f, vars.back(), vars)) {
    out.push_back(f);
    return;
  }
  kronecker(f, vars, limits, out);
}

}  // namespace

std::vector<MPoly> factor_squarefree_multivariate(const MPoly& f, const FactorLimits& limits) {
  std::vector<MPoly> out;
  MPoly g = f;
  Integer c = integer_content(g);
  if (sgn(c) != 0) g = g.div_integer(c);
  factor_rec(sign_normal(g), limits, out);
  return out;
}

}  // namespace primtower
