#include "primtower/arith/mpoly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "primtower/errors.hpp"

namespace primtower {

namespace {

template <typename Fn>
MPoly map_integers(const MPoly& a, Fn&& fn) {
  if (a.is_constant()) return MPoly(fn(a.constant()));
  std::vector<MPoly> cs;
  cs.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) cs.push_back(map_integers(c, fn));
  return MPoly::from_coeffs(a.var(), std::move(cs));
}

Integer symmetric_mod(const Integer& c, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  Integer half = m / 2;
  if (r > half) r -= m;
  return r;
}

}  // namespace

MPoly MPoly::variable(int var) { return from_coeffs(var, {MPoly(0), MPoly(1)}); }

MPoly MPoly::from_coeffs(int var, std::vector<MPoly> coeffs) {
  while (!coeffs.empty() && coeffs.back().is_zero()) coeffs.pop_back();
  if (coeffs.empty()) return MPoly();
  if (coeffs.size() == 1) return std::move(coeffs[0]);
#ifndef NDEBUG
  for (const auto& c : coeffs) assert(c.var_ < var);
#endif
  MPoly r;
  r.var_ = var;
  r.coeffs_ = std::move(coeffs);
  return r;
}

MPoly MPoly::monomial(int var, int k, MPoly c) {
  if (c.is_zero() || k == 0) return c;
  std::vector<MPoly> cs(static_cast<std::size_t>(k) + 1);
  cs.back() = std::move(c);
  return from_coeffs(var, std::move(cs));
}

void MPoly::normalize() {
  if (var_ < 0) return;
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  if (coeffs_.empty()) {
    var_ = -1;
    c_ = 0;
    return;
  }
  if (coeffs_.size() == 1) {
    MPoly tmp = std::move(coeffs_[0]);
    *this = std::move(tmp);
  }
}

int MPoly::degree(int v) const {
  if (var_ < 0) return is_zero() ? -1 : 0;
  if (var_ == v) return static_cast<int>(coeffs_.size()) - 1;
  if (var_ < v) return 0;
  int d = 0;
  for (const auto& c : coeffs_) d = std::max(d, c.degree(v));
  return d;
}

int MPoly::total_degree() const {
  if (var_ < 0) return is_zero() ? -1 : 0;
  int d = 0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    d = std::max(d, static_cast<int>(k) + coeffs_[k].total_degree());
  }
  return d;
}

std::vector<MPoly> MPoly::to_univariate(int v) const {
  if (var_ < v) {
    if (is_zero()) return {};
    return {*this};
  }
  if (var_ == v) return coeffs_;
  std::vector<std::vector<MPoly>> parts;
  parts.reserve(coeffs_.size());
  std::size_t width = 0;
  for (const auto& c : coeffs_) {
    parts.push_back(c.to_univariate(v));
    width = std::max(width, parts.back().size());
  }
  std::vector<MPoly> out(width);
  for (std::size_t k = 0; k < width; ++k) {
    std::vector<MPoly> cs(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (k < parts[i].size()) cs[i] = parts[i][k];
    }
    out[k] = from_coeffs(var_, std::move(cs));
  }
  return out;
}

MPoly MPoly::coeff(int v, int k) const {
  if (var_ == v) {
    return k >= 0 && static_cast<std::size_t>(k) < coeffs_.size() ? coeffs_[k] : MPoly();
  }
  if (var_ < v) return k == 0 ? *this : MPoly();
  std::vector<MPoly> cs;
  cs.reserve(coeffs_.size());
  for (const auto& c : coeffs_) cs.push_back(c.coeff(v, k));
  return from_coeffs(var_, std::move(cs));
}

MPoly MPoly::lc(int v) const { return coeff(v, degree(v)); }

const Integer& MPoly::base_lc() const {
  const MPoly* node = this;
  while (node->var_ >= 0) node = &node->coeffs_.back();
  return node->c_;
}

bool MPoly::involves(int v) const {
  if (var_ == v) return true;
  if (var_ < v) return false;
  return std::any_of(coeffs_.begin(), coeffs_.end(), [v](const MPoly& c) { return c.involves(v); });
}

void MPoly::collect_vars(std::vector<bool>& seen) const {
  if (var_ < 0) return;
  if (static_cast<std::size_t>(var_) >= seen.size()) seen.resize(var_ + 1, false);
  seen[var_] = true;
  for (const auto& c : coeffs_) c.collect_vars(seen);
}

MPoly MPoly::operator-() const {
  if (var_ < 0) return MPoly(Integer(-c_));
  MPoly r;
  r.var_ = var_;
  r.coeffs_.reserve(coeffs_.size());
  for (const auto& c : coeffs_) r.coeffs_.push_back(-c);
  return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (var_ < 0 && o.var_ < 0) {
    c_ += o.c_;
    return *this;
  }
  if (var_ == o.var_) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    normalize();
  } else if (var_ > o.var_) {
    coeffs_[0] += o;
  } else {
    MPoly r = o;
    r.coeffs_[0] += *this;
    *this = std::move(r);
  }
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = -o;
  if (var_ < 0 && o.var_ < 0) {
    c_ -= o.c_;
    return *this;
  }
  if (var_ == o.var_) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    normalize();
  } else if (var_ > o.var_) {
    coeffs_[0] -= o;
  } else {
    MPoly r = -o;
    r.coeffs_[0] += *this;
    *this = std::move(r);
  }
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return MPoly();
  if (a.var_ < 0) return b.mul_integer(a.c_);
  if (b.var_ < 0) return a.mul_integer(b.c_);
  if (a.var_ == b.var_) {
    std::vector<MPoly> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        if (b.coeffs_[j].is_zero()) continue;
        r[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return MPoly::from_coeffs(a.var_, std::move(r));
  }
  const MPoly& hi = a.var_ > b.var_ ? a : b;
  const MPoly& lo = a.var_ > b.var_ ? b : a;
  MPoly r;
  r.var_ = hi.var_;
  r.coeffs_.reserve(hi.coeffs_.size());
  for (const auto& c : hi.coeffs_) r.coeffs_.push_back(c.is_zero() ? MPoly() : c * lo);
  return r;
}

MPoly& MPoly::operator*=(const MPoly& o) { return *this = *this * o; }

MPoly MPoly::mul_integer(const Integer& k) const {
  if (sgn(k) == 0) return MPoly();
  if (k == 1) return *this;
  if (var_ < 0) return MPoly(Integer(c_ * k));
  MPoly r;
  r.var_ = var_;
  r.coeffs_.reserve(coeffs_.size());
  for (const auto& c : coeffs_) r.coeffs_.push_back(c.mul_integer(k));
  return r;
}

MPoly MPoly::div_integer(const Integer& k) const {
  if (k == 1) return *this;
  if (var_ < 0) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), c_.get_mpz_t(), k.get_mpz_t());
    return MPoly(q);
  }
  MPoly r;
  r.var_ = var_;
  r.coeffs_.reserve(coeffs_.size());
  for (const auto& c : coeffs_) r.coeffs_.push_back(c.div_integer(k));
  return r;
}

bool MPoly::integer_divisible(const Integer& k) const {
  if (var_ < 0) return mpz_divisible_p(c_.get_mpz_t(), k.get_mpz_t()) != 0;
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [&k](const MPoly& c) { return c.integer_divisible(k); });
}

bool operator==(const MPoly& a, const MPoly& b) {
  if (a.var_ != b.var_) return false;
  if (a.var_ < 0) return a.c_ == b.c_;
  return a.coeffs_ == b.coeffs_;
}

std::size_t MPoly::hash() const {
  if (var_ < 0) {
    std::size_t h = 0x9e3779b97f4a7c15ULL;
    const auto* limbs = c_.get_mpz_t();
    h ^= static_cast<std::size_t>(limbs->_mp_size) * 0x100000001b3ULL;
    for (int i = 0; i < std::abs(limbs->_mp_size); ++i) {
      h = (h ^ static_cast<std::size_t>(limbs->_mp_d[i])) * 0x100000001b3ULL;
    }
    return h;
  }
  std::size_t h = static_cast<std::size_t>(var_ + 1) * 0x2545f4914f6cdd1dULL;
  for (const auto& c : coeffs_) h = (h ^ c.hash()) * 0x100000001b3ULL + 0x7f4a7c15;
  return h;
}

void MPoly::for_each_term(
    int nvars, const std::function<void(const std::vector<int>&, const Integer&)>& fn) const {
  std::vector<int> exps(static_cast<std::size_t>(std::max(nvars, var_ + 1)), 0);
  for_each_term_impl(exps, fn);
}

void MPoly::for_each_term_impl(
    std::vector<int>& exps,
    const std::function<void(const std::vector<int>&, const Integer&)>& fn) const {
  if (var_ < 0) {
    if (sgn(c_) != 0) fn(exps, c_);
    return;
  }
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    exps[var_] = static_cast<int>(k);
    coeffs_[k].for_each_term_impl(exps, fn);
  }
  exps[var_] = 0;
}

MPoly MPoly::from_term(const std::vector<int>& exps, const Integer& c) {
  MPoly r(c);
  for (std::size_t v = 0; v < exps.size(); ++v) {
    if (exps[v] > 0) r = monomial(static_cast<int>(v), exps[v], std::move(r));
  }
  return r;
}

std::string MPoly::debug_string() const {
  std::ostringstream os;
  bool first = true;
  for_each_term(var_ + 1, [&](const std::vector<int>& e, const Integer& c) {
    if (!first && sgn(c) > 0) os << '+';
    first = false;
    os << c.get_str();
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      os << "*v" << v;
      if (e[v] > 1) os << '^' << e[v];
    }
  });
  if (first) os << '0';
  return os.str();
}

int compare(const MPoly& a, const MPoly& b) {
  if (a.var() != b.var()) return a.var() < b.var() ? -1 : 1;
  if (a.is_constant()) return cmp(a.constant(), b.constant()) < 0 ? -1 : (a.constant() == b.constant() ? 0 : 1);
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  if (ca.size() != cb.size()) return ca.size() < cb.size() ? -1 : 1;
  for (std::size_t k = ca.size(); k-- > 0;) {
    int c = compare(ca[k], cb[k]);
    if (c != 0) return c;
  }
  return 0;
}

MPoly pow(const MPoly& a, unsigned e) {
  MPoly result(1);
  MPoly base = a;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

MPoly derivative(const MPoly& a, int v) {
  if (a.var() < v) return MPoly();
  const auto& cs = a.coeffs();
  std::vector<MPoly> out;
  if (a.var() == v) {
    out.reserve(cs.size() - 1);
    for (std::size_t k = 1; k < cs.size(); ++k) out.push_back(cs[k].mul_integer(Integer(static_cast<long>(k))));
    return MPoly::from_coeffs(v, std::move(out));
  }
  out.reserve(cs.size());
  for (const auto& c : cs) out.push_back(derivative(c, v));
  return MPoly::from_coeffs(a.var(), std::move(out));
}

MPoly evaluate(const MPoly& a, int v, const Integer& value) {
  if (a.var() < v) return a;
  const auto& cs = a.coeffs();
  if (a.var() == v) {
    MPoly r;
    for (std::size_t k = cs.size(); k-- > 0;) {
      r = r.mul_integer(value);
      r += cs[k];
    }
    return r;
  }
  std::vector<MPoly> out;
  out.reserve(cs.size());
  for (const auto& c : cs) out.push_back(evaluate(c, v, value));
  return MPoly::from_coeffs(a.var(), std::move(out));
}

MPoly substitute(const MPoly& a, int v, const MPoly& value) {
  if (a.var() < v) return a;
  const auto& cs = a.coeffs();
  if (a.var() == v) {
    MPoly r;
    for (std::size_t k = cs.size(); k-- > 0;) r = r * value + cs[k];
    return r;
  }
  MPoly r;
  MPoly power(1);
  MPoly x = MPoly::variable(a.var());
  for (const auto& c : cs) {
    r += substitute(c, v, value) * power;
    power *= x;
  }
  return r;
}

std::optional<MPoly> divide_exact(const MPoly& a, const MPoly& b) {
  if (b.is_zero()) raise(ErrorCode::kArithmetic, "polynomial division by zero");
  if (a.is_zero()) return MPoly();
  if (b.is_constant()) {
    if (!a.integer_divisible(b.constant())) return std::nullopt;
    return a.div_integer(b.constant());
  }
  if (a.var() < b.var()) return std::nullopt;
  if (a.var() > b.var()) {
    std::vector<MPoly> q;
    q.reserve(a.coeffs().size());
    for (const auto& c : a.coeffs()) {
      if (c.is_zero()) {
        q.emplace_back();
        continue;
      }
      auto t = divide_exact(c, b);
      if (!t) return std::nullopt;
      q.push_back(std::move(*t));
    }
    return MPoly::from_coeffs(a.var(), std::move(q));
  }
  const int v = a.var();
  std::vector<MPoly> r = a.coeffs();
  const auto& bc = b.coeffs();
  const int db = static_cast<int>(bc.size()) - 1;
  const int da = static_cast<int>(r.size()) - 1;
  if (da < db) return std::nullopt;
  if (!mpz_divisible_p(a.base_lc().get_mpz_t(), b.base_lc().get_mpz_t())) return std::nullopt;
  std::vector<MPoly> q(static_cast<std::size_t>(da - db + 1));
  for (int k = da; k >= db; --k) {
    if (r[k].is_zero()) continue;
    auto t = divide_exact(r[k], bc[db]);
    if (!t) return std::nullopt;
    for (int j = 0; j <= db; ++j) {
      if (bc[j].is_zero()) continue;
      r[k - db + j] -= *t * bc[j];
    }
    q[k - db] = std::move(*t);
  }
  for (int k = 0; k < db; ++k) {
    if (!r[k].is_zero()) return std::nullopt;
  }
  return MPoly::from_coeffs(v, std::move(q));
}

MPoly exact_div(const MPoly& a, const MPoly& b) {
  auto q = divide_exact(a, b);
  if (!q) raise(ErrorCode::kArithmetic, "inexact polynomial division");
  return std::move(*q);
}

PseudoDivision pseudo_divide(const MPoly& a, const MPoly& b, int v) {
  std::vector<MPoly> r = a.to_univariate(v);
  const std::vector<MPoly> bu = b.to_univariate(v);
  if (bu.empty()) raise(ErrorCode::kArithmetic, "pseudo-division by zero");
  const int db = static_cast<int>(bu.size()) - 1;
  int dr = static_cast<int>(r.size()) - 1;
  PseudoDivision out;
  if (dr < db) {
    out.remainder = a;
    return out;
  }
  const MPoly& lcb = bu[db];
  int e = dr - db + 1;
  std::vector<MPoly> q(static_cast<std::size_t>(dr - db + 1));
  while (dr >= db) {
    MPoly s = r[dr];
    const int shift = dr - db;
    for (auto& c : q) c = c * lcb;
    q[shift] += s;
    for (auto& c : r) c = c * lcb;
    for (int j = 0; j <= db; ++j) r[shift + j] -= s * bu[j];
    --e;
    while (dr >= 0 && r[dr].is_zero()) --dr;
    r.resize(static_cast<std::size_t>(dr + 1));
  }
  MPoly scale = pow(lcb, static_cast<unsigned>(e));
  out.quotient = MPoly::from_coeffs(v, std::move(q)) * scale;
  out.remainder = MPoly::from_coeffs(v, std::move(r)) * scale;
  out.exponent = static_cast<int>(a.degree(v) - db + 1);
  return out;
}

Integer integer_content(const MPoly& a) {
  if (a.is_constant()) return abs(a.constant());
  Integer g = 0;
  for (const auto& c : a.coeffs()) {
    if (c.is_zero()) continue;
    Integer cc = integer_content(c);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), cc.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Integer max_norm(const MPoly& a) {
  if (a.is_constant()) return abs(a.constant());
  Integer m = 0;
  for (const auto& c : a.coeffs()) {
    Integer cm = max_norm(c);
    if (cm > m) m = cm;
  }
  return m;
}

MPoly sign_normal(const MPoly& a) { return sgn(a.base_lc()) < 0 ? -a : a; }

MPoly content_in(const MPoly& a, int v) {
  if (a.var() < v) return sign_normal(a);
  std::vector<MPoly> cs = a.to_univariate(v);
  MPoly g;
  for (const auto& c : cs) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

MPoly primitive_part_in(const MPoly& a, int v) {
  if (a.is_zero()) return a;
  return sign_normal(exact_div(a, content_in(a, v)));
}

namespace {

MPoly interpolate(const MPoly& h, const Integer& xi, int v) {
  std::vector<MPoly> cs;
  MPoly r = h;
  while (!r.is_zero()) {
    MPoly g = map_integers(r, [&xi](const Integer& c) { return symmetric_mod(c, xi); });
    r -= g;
    r = r.div_integer(xi);
    cs.push_back(std::move(g));
  }
  return MPoly::from_coeffs(v, std::move(cs));
}

MPoly integer_primitive(const MPoly& a) {
  Integer c = integer_content(a);
  if (sgn(c) == 0) return a;
  return a.div_integer(c);
}

std::optional<GcdCofactors> heuristic_gcd(const MPoly& f0, const MPoly& g0, int v) {
  Integer cf = integer_content(f0);
  Integer cg = integer_content(g0);
  Integer ic;
  mpz_gcd(ic.get_mpz_t(), cf.get_mpz_t(), cg.get_mpz_t());
  const MPoly f = f0.div_integer(ic);
  const MPoly g = g0.div_integer(ic);
  const Integer fn = max_norm(f);
  const Integer gn = max_norm(g);
  Integer xi = 2 * std::min(fn, gn) + 29;
  Integer alt = 2 * std::min(Integer(fn / abs(f.base_lc())), Integer(gn / abs(g.base_lc()))) + 2;
  if (alt > xi) xi = alt;

  auto finish = [&](MPoly h, MPoly ca, MPoly cb) -> GcdCofactors {
    if (sgn(h.base_lc()) < 0) {
      h = -h;
      ca = -ca;
      cb = -cb;
    }
    return {h.mul_integer(ic), std::move(ca), std::move(cb)};
  };

  for (int attempt = 0; attempt < 6; ++attempt) {
    MPoly ff = evaluate(f, v, xi);
    MPoly gg = evaluate(g, v, xi);
    if (!ff.is_zero() && !gg.is_zero()) {
      GcdCofactors low = gcd_cofactors(ff, gg);
      MPoly h = integer_primitive(interpolate(low.gcd, xi, v));
      if (!h.is_zero()) {
        if (auto qa = divide_exact(f, h)) {
          if (auto qb = divide_exact(g, h)) return finish(h, std::move(*qa), std::move(*qb));
        }
      }
      MPoly cff = interpolate(low.cofactor_a, xi, v);
      if (!cff.is_zero()) {
        if (auto h2 = divide_exact(f, cff)) {
          if (!h2->is_zero()) {
            if (auto qb = divide_exact(g, *h2)) return finish(*h2, cff, std::move(*qb));
          }
        }
      }
      MPoly cfg = interpolate(low.cofactor_b, xi, v);
      if (!cfg.is_zero()) {
        if (auto h3 = divide_exact(g, cfg)) {
          if (!h3->is_zero()) {
            if (auto qa = divide_exact(f, *h3)) return finish(*h3, std::move(*qa), cfg);
          }
        }
      }
    }
    Integer r = sqrt(sqrt(xi));
    xi = 73794 * xi * r / 27011;
  }
  return std::nullopt;
}

GcdCofactors prs_gcd(const MPoly& a, const MPoly& b, int v) {
  MPoly ca = content_in(a, v);
  MPoly cb = content_in(b, v);
  MPoly c = gcd(ca, cb);
  MPoly A = exact_div(a, ca);
  MPoly B = exact_div(b, cb);
  if (A.degree(v) < B.degree(v)) std::swap(A, B);
  while (!B.is_zero()) {
    if (!B.involves(v)) {
      A = MPoly(1);
      break;
    }
    MPoly r = pseudo_divide(A, B, v).remainder;
    A = std::move(B);
    B = r.is_zero() ? MPoly() : primitive_part_in(r, v);
  }
  MPoly g = sign_normal(c * primitive_part_in(A, v));
  return {g, exact_div(a, g), exact_div(b, g)};
}

}  // namespace

GcdCofactors gcd_cofactors(const MPoly& a, const MPoly& b) {
  if (a.is_zero() && b.is_zero()) return {MPoly(), MPoly(), MPoly()};
  if (a.is_zero()) {
    MPoly g = sign_normal(b);
    return {g, MPoly(), MPoly(sgn(b.base_lc()) < 0 ? -1L : 1L)};
  }
  if (b.is_zero()) {
    MPoly g = sign_normal(a);
    return {g, MPoly(sgn(a.base_lc()) < 0 ? -1L : 1L), MPoly()};
  }
  if (a.is_constant() || b.is_constant()) {
    Integer ca = integer_content(a);
    Integer cb = integer_content(b);
    Integer g;
    mpz_gcd(g.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    return {MPoly(g), a.div_integer(g), b.div_integer(g)};
  }
  if (a == b) {
    MPoly g = sign_normal(a);
    MPoly s(g == a ? 1L : -1L);
    return {g, s, s};
  }
  const int v = std::max(a.var(), b.var());
  if (a.var() < v) {
    MPoly g = gcd(a, content_in(b, v));
    return {g, exact_div(a, g), exact_div(b, g)};
  }
  if (b.var() < v) {
    MPoly g = gcd(content_in(a, v), b);
    return {g, exact_div(a, g), exact_div(b, g)};
  }
  if (auto r = heuristic_gcd(a, b, v)) return std::move(*r);
  return prs_gcd(a, b, v);
}

MPoly gcd(const MPoly& a, const MPoly& b) {
  if (a.is_zero()) return sign_normal(b);
  if (b.is_zero()) return sign_normal(a);
  if (a.is_one() || b.is_one()) return MPoly(1);
  return gcd_cofactors(a, b).gcd;
}

MPoly lcm(const MPoly& a, const MPoly& b) {
  if (a.is_zero() || b.is_zero()) return MPoly();
  auto r = gcd_cofactors(a, b);
  return sign_normal(r.cofactor_a * b);
}

}  // namespace primtower
