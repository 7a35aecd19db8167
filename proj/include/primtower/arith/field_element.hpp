#pragma once

#include <string>
#include <utility>
#include <vector>

#include "primtower/arith/mpoly.hpp"

namespace primtower {

/// Element of Q(v0, v1, ...) stored as a reduced fraction num/den of integer
/// polynomials. Canonical: gcd(num, den) = 1, base_lc(den) > 0, zero is 0/1.
/// The level of an element is its largest occurring variable (-1 for Q).
class FieldElement {
 public:
  FieldElement() : den_(1) {}
  FieldElement(long value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  FieldElement(const Integer& value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  FieldElement(const Rational& value);  // NOLINT(google-explicit-constructor)
  FieldElement(MPoly poly) : num_(std::move(poly)), den_(1) {}  // NOLINT(google-explicit-constructor)

  static FieldElement variable(int var);
  /// Normalizes num/den; throws Arithmetic on a zero denominator.
  static FieldElement fraction(const MPoly& num, const MPoly& den);

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }
  int level() const { return std::max(num_.var(), den_.var()); }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_rational() const { return level() < 0; }
  bool is_polynomial() const { return den_.is_one(); }
  Rational to_rational() const;
  bool involves(int v) const { return num_.involves(v) || den_.involves(v); }

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  FieldElement inverse() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }
  std::size_t hash() const { return num_.hash() * 31 + den_.hash(); }

  std::string debug_string() const;

 private:
  MPoly num_;
  MPoly den_;
};

inline std::ostream& operator<<(std::ostream& os, const FieldElement& f) { return os << f.debug_string(); }

FieldElement pow(const FieldElement& a, int e);
/// Partial derivative with respect to variable v (all other variables held
/// constant).
FieldElement partial(const FieldElement& a, int v);
FieldElement substitute(const FieldElement& a, int v, const FieldElement& value);

/// Univariate polynomial in variable `var` with coefficients in the field of
/// lower variables. Stored as a FieldElement whose denominator is free of
/// `var`.
class Poly {
 public:
  explicit Poly(int var) : var_(var) {}
  /// `value` must have a denominator free of `var`.
  Poly(int var, FieldElement value);
  static Poly from_coeffs(int var, const std::vector<FieldElement>& coeffs);
  static Poly monomial(int var, int k, const FieldElement& c);

  int var() const { return var_; }
  const FieldElement& value() const { return value_; }
  bool is_zero() const { return value_.is_zero(); }
  /// -1 for zero.
  int degree() const { return value_.num().degree(var_); }
  FieldElement coeff(int k) const;
  FieldElement lc() const;
  std::vector<FieldElement> coeffs() const;
  Poly monic() const;

  Poly operator-() const { return Poly(var_, -value_); }
  friend Poly operator+(const Poly& a, const Poly& b) { return Poly(a.var_, a.value_ + b.value_); }
  friend Poly operator-(const Poly& a, const Poly& b) { return Poly(a.var_, a.value_ - b.value_); }
  friend Poly operator*(const Poly& a, const Poly& b) { return Poly(a.var_, a.value_ * b.value_); }
  Poly scale(const FieldElement& c) const { return Poly(var_, value_ * c); }
  friend bool operator==(const Poly& a, const Poly& b) { return a.var_ == b.var_ && a.value_ == b.value_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  int var_;
  FieldElement value_;
};

struct DivRem {
  Poly quotient;
  Poly remainder;
};
DivRem divrem(const Poly& a, const Poly& b);
Poly rem(const Poly& a, const Poly& b);
/// Exact quotient; throws Arithmetic if b does not divide a.
Poly exact_quotient(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

struct GcdEx {
  Poly s;
  Poly t;
  Poly g;  // monic, s*a + t*b = g
};
GcdEx gcdex(const Poly& a, const Poly& b);
/// Inverse of a modulo m; throws Arithmetic if not invertible.
Poly invmod(const Poly& a, const Poly& m);
/// Solves s*a + t*b = c with deg s < deg b (requires gcd(a, b) | c).
std::pair<Poly, Poly> diophantine(const Poly& a, const Poly& b, const Poly& c);
/// Formal derivative d/dvar (coefficients treated as constants).
Poly formal_derivative(const Poly& a);

/// f = numer/denom with denom monic in v.
struct NumerDenom {
  Poly numer;
  Poly denom;
};
NumerDenom split_fraction(const FieldElement& f, int v);
/// f = poly + proper with deg_v(numer(proper)) < deg_v(denom(proper)).
struct PolyProper {
  Poly poly;
  FieldElement proper;
};
PolyProper poly_proper_split(const FieldElement& f, int v);

}  // namespace primtower

template <>
struct std::hash<primtower::FieldElement> {
  std::size_t operator()(const primtower::FieldElement& f) const { return f.hash(); }
};
