#include "primtower/arith/field_element.hpp"

#include "primtower/errors.hpp"

namespace primtower {

FieldElement::FieldElement(const Rational& value)
    : num_(Integer(value.get_num())), den_(Integer(value.get_den())) {}

FieldElement FieldElement::variable(int var) { return FieldElement(MPoly::variable(var)); }

FieldElement FieldElement::fraction(const MPoly& num, const MPoly& den) {
  if (den.is_zero()) raise(ErrorCode::kArithmetic, "division by zero");
  FieldElement r;
  if (num.is_zero()) return r;
  if (den.is_one()) {
    r.num_ = num;
    return r;
  }
  if (den.is_constant() && num.is_constant()) {
    Rational q(num.constant(), den.constant());
    q.canonicalize();
    return FieldElement(q);
  }
  GcdCofactors g = gcd_cofactors(num, den);
  r.num_ = std::move(g.cofactor_a);
  r.den_ = std::move(g.cofactor_b);
  if (sgn(r.den_.base_lc()) < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

Rational FieldElement::to_rational() const {
  if (!is_rational()) raise(ErrorCode::kInvalidArgument, "element is not a rational constant");
  Rational q(num_.constant(), den_.constant());
  q.canonicalize();
  return q;
}

FieldElement FieldElement::operator-() const {
  FieldElement r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    if (den_.is_one()) {
      num_ += o.num_;
      return *this;
    }
    return *this = fraction(num_ + o.num_, den_);
  }
  if (o.den_.is_one()) {
    num_ += o.num_ * den_;
    return *this;
  }
  if (den_.is_one()) {
    num_ = num_ * o.den_ + o.num_;
    den_ = o.den_;
    return *this;
  }
  GcdCofactors g = gcd_cofactors(den_, o.den_);
  if (g.gcd.is_one()) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    if (num_.is_zero()) den_ = MPoly(1);
    return *this;
  }
  MPoly t = num_ * g.cofactor_b + o.num_ * g.cofactor_a;
  if (t.is_zero()) return *this = FieldElement();
  GcdCofactors g2 = gcd_cofactors(t, g.gcd);
  num_ = std::move(g2.cofactor_a);
  den_ = g.cofactor_a * exact_div(o.den_, g2.gcd);
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) { return *this += -o; }

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  if (is_zero() || o.is_zero()) return *this = FieldElement();
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  GcdCofactors g1 = gcd_cofactors(num_, o.den_);
  GcdCofactors g2 = gcd_cofactors(o.num_, den_);
  num_ = g1.cofactor_a * g2.cofactor_a;
  den_ = g2.cofactor_b * g1.cofactor_b;
  if (sgn(den_.base_lc()) < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  return *this;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) raise(ErrorCode::kArithmetic, "division by zero");
  FieldElement r;
  r.num_ = den_;
  r.den_ = num_;
  if (sgn(r.den_.base_lc()) < 0) {
    r.num_ = -r.num_;
    r.den_ = -r.den_;
  }
  return r;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) { return *this *= o.inverse(); }

std::string FieldElement::debug_string() const {
  if (den_.is_one()) return num_.debug_string();
  return "(" + num_.debug_string() + ")/(" + den_.debug_string() + ")";
}

FieldElement pow(const FieldElement& a, int e) {
  if (e < 0) return pow(a.inverse(), -e);
  MPoly n = pow(a.num(), static_cast<unsigned>(e));
  MPoly d = pow(a.den(), static_cast<unsigned>(e));
  FieldElement r(std::move(n));
  if (d.is_one()) return r;
  return r / FieldElement(std::move(d));
}

FieldElement partial(const FieldElement& a, int v) {
  MPoly dn = derivative(a.num(), v);
  if (a.den().is_one()) return FieldElement(std::move(dn));
  MPoly dd = derivative(a.den(), v);
  return FieldElement::fraction(dn * a.den() - a.num() * dd, a.den() * a.den());
}

FieldElement substitute(const FieldElement& a, int v, const FieldElement& value) {
  auto sub = [&](const MPoly& p) {
    std::vector<MPoly> cs = p.to_univariate(v);
    FieldElement r;
    for (std::size_t k = cs.size(); k-- > 0;) r = r * value + FieldElement(cs[k]);
    return r;
  };
  return sub(a.num()) / sub(a.den());
}

Poly::Poly(int var, FieldElement value) : var_(var), value_(std::move(value)) {
  if (value_.den().involves(var_)) raise(ErrorCode::kInvalidArgument, "polynomial has a denominator in its variable");
}

Poly Poly::from_coeffs(int var, const std::vector<FieldElement>& coeffs) {
  FieldElement r;
  FieldElement x = FieldElement::variable(var);
  for (std::size_t k = coeffs.size(); k-- > 0;) r = r * x + coeffs[k];
  return Poly(var, std::move(r));
}

Poly Poly::monomial(int var, int k, const FieldElement& c) {
  return Poly(var, c * FieldElement(MPoly::monomial(var, k, MPoly(1))));
}

FieldElement Poly::coeff(int k) const {
  return FieldElement::fraction(value_.num().coeff(var_, k), value_.den());
}

FieldElement Poly::lc() const { return coeff(degree()); }

std::vector<FieldElement> Poly::coeffs() const {
  std::vector<MPoly> cs = value_.num().to_univariate(var_);
  std::vector<FieldElement> out;
  out.reserve(cs.size());
  for (const auto& c : cs) out.push_back(FieldElement::fraction(c, value_.den()));
  return out;
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return Poly(var_, FieldElement::fraction(value_.num(), value_.num().lc(var_)));
}

DivRem divrem(const Poly& a, const Poly& b) {
  if (b.is_zero()) raise(ErrorCode::kArithmetic, "polynomial division by zero");
  const int v = a.var();
  if (a.degree() < b.degree()) return {Poly(v), a};
  const MPoly& A = a.value().num();
  const MPoly& B = b.value().num();
  if (b.degree() == 0) return {Poly(v, a.value() / b.value()), Poly(v)};
  PseudoDivision pd = pseudo_divide(A, B, v);
  MPoly scale = pow(B.lc(v), static_cast<unsigned>(pd.exponent)) * a.value().den();
  Poly q(v, FieldElement::fraction(pd.quotient * b.value().den(), scale));
  Poly r(v, FieldElement::fraction(pd.remainder, scale));
  return {std::move(q), std::move(r)};
}

Poly rem(const Poly& a, const Poly& b) { return divrem(a, b).remainder; }

Poly exact_quotient(const Poly& a, const Poly& b) {
  DivRem qr = divrem(a, b);
  if (!qr.remainder.is_zero()) raise(ErrorCode::kArithmetic, "inexact polynomial division");
  return qr.quotient;
}

Poly gcd(const Poly& a, const Poly& b) {
  const int v = a.var();
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  MPoly g = gcd(a.value().num(), b.value().num());
  if (!g.involves(v)) return Poly(v, FieldElement(1));
  return Poly(v, FieldElement(g)).monic();
}

GcdEx gcdex(const Poly& a, const Poly& b) {
  const int v = a.var();
  Poly r0 = a, r1 = b;
  Poly s0(v, FieldElement(1)), s1(v);
  Poly t0(v), t1(v, FieldElement(1));
  while (!r1.is_zero()) {
    DivRem qr = divrem(r0, r1);
    Poly s2 = s0 - qr.quotient * s1;
    Poly t2 = t0 - qr.quotient * t1;
    r0 = std::move(r1);
    r1 = std::move(qr.remainder);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {s0, t0, r0};
  FieldElement inv = r0.lc().inverse();
  return {s0.scale(inv), t0.scale(inv), r0.scale(inv)};
}

Poly invmod(const Poly& a, const Poly& m) {
  GcdEx e = gcdex(rem(a, m), m);
  if (e.g.degree() != 0) raise(ErrorCode::kArithmetic, "polynomial not invertible modulo");
  return rem(e.s, m);
}

std::pair<Poly, Poly> diophantine(const Poly& a, const Poly& b, const Poly& c) {
  GcdEx e = gcdex(a, b);
  DivRem qr = divrem(c, e.g);
  if (!qr.remainder.is_zero()) raise(ErrorCode::kArithmetic, "diophantine equation has no solution");
  Poly s = e.s * qr.quotient;
  Poly t = e.t * qr.quotient;
  if (!b.is_zero() && s.degree() >= b.degree()) {
    DivRem sq = divrem(s, b);
    s = sq.remainder;
    t = t + sq.quotient * a;
  }
  return {std::move(s), std::move(t)};
}

Poly formal_derivative(const Poly& a) {
  return Poly(a.var(), FieldElement::fraction(derivative(a.value().num(), a.var()), a.value().den()));
}

NumerDenom split_fraction(const FieldElement& f, int v) {
  const MPoly& den = f.den();
  if (!den.involves(v)) return {Poly(v, f), Poly(v, FieldElement(1))};
  MPoly c = content_in(den, v);
  MPoly d = exact_div(den, c);
  MPoly l = d.lc(v);
  Poly numer(v, FieldElement::fraction(f.num(), c * l));
  Poly denom(v, FieldElement::fraction(d, l));
  return {std::move(numer), std::move(denom)};
}

PolyProper poly_proper_split(const FieldElement& f, int v) {
  NumerDenom nd = split_fraction(f, v);
  if (nd.denom.degree() == 0) return {nd.numer, FieldElement()};
  DivRem qr = divrem(nd.numer, nd.denom);
  FieldElement proper = qr.remainder.is_zero() ? FieldElement() : qr.remainder.value() / nd.denom.value();
  return {std::move(qr.quotient), std::move(proper)};
}

}  // namespace primtower
