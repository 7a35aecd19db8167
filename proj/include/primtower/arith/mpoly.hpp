#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <ostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace primtower {

using Integer = mpz_class;
using Rational = mpq_class;

/// Multivariate polynomial over the integers in recursive dense form.
///
/// A node is either an integer constant (`var() == -1`) or a polynomial in
/// variable `var()` whose coefficients are polynomials in strictly smaller
/// variables. The representation is canonical: a non-constant node has degree
/// at least one and a nonzero leading coefficient, so structural equality is
/// polynomial equality.
class MPoly {
 public:
  MPoly() = default;
  MPoly(long value) : c_(value) {}  // NOLINT(google-explicit-constructor)
  MPoly(Integer value) : c_(std::move(value)) {}  // NOLINT(google-explicit-constructor)

  static MPoly variable(int var);
  /// Builds sum coeffs[k] * var^k. Coefficients must not involve `var` or
  /// any larger variable.
  static MPoly from_coeffs(int var, std::vector<MPoly> coeffs);
  /// c * var^k
  static MPoly monomial(int var, int k, MPoly c);

  bool is_zero() const { return var_ < 0 && sgn(c_) == 0; }
  bool is_one() const { return var_ < 0 && c_ == 1; }
  bool is_constant() const { return var_ < 0; }
  int var() const { return var_; }
  const Integer& constant() const { return c_; }
  const std::vector<MPoly>& coeffs() const { return coeffs_; }

  /// Degree in `v`; -1 for the zero polynomial.
  int degree(int v) const;
  int total_degree() const;
  /// Coefficient list in `v` (index = exponent). For v below the top
  /// variable the coefficients are gathered recursively.
  std::vector<MPoly> to_univariate(int v) const;
  MPoly coeff(int v, int k) const;
  MPoly lc(int v) const;
  /// Leading integer coefficient in lex order with larger variables first.
  const Integer& base_lc() const;
  /// True if variable `v` occurs.
  bool involves(int v) const;
  void collect_vars(std::vector<bool>& seen) const;
  int max_var() const { return var_; }

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  MPoly mul_integer(const Integer& k) const;
  /// Exact division of every coefficient by k (caller guarantees exactness).
  MPoly div_integer(const Integer& k) const;
  bool integer_divisible(const Integer& k) const;

  friend bool operator==(const MPoly& a, const MPoly& b);
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  std::size_t hash() const;

  /// Visits every term as (exponent vector indexed by variable, coefficient),
  /// in lex-descending order (highest variable dominates).
  void for_each_term(int nvars,
                     const std::function<void(const std::vector<int>&, const Integer&)>& fn) const;
  static MPoly from_term(const std::vector<int>& exps, const Integer& c);

  /// Debug rendering with variables named v0, v1, ...
  std::string debug_string() const;

 private:
  int var_ = -1;
  Integer c_;
  std::vector<MPoly> coeffs_;

  void normalize();
  void for_each_term_impl(std::vector<int>& exps,
                          const std::function<void(const std::vector<int>&, const Integer&)>& fn) const;
};

/// Three-way structural comparison giving a fixed total order.
int compare(const MPoly& a, const MPoly& b);
inline bool operator<(const MPoly& a, const MPoly& b) { return compare(a, b) < 0; }

inline std::ostream& operator<<(std::ostream& os, const MPoly& p) { return os << p.debug_string(); }

MPoly pow(const MPoly& a, unsigned e);
MPoly derivative(const MPoly& a, int v);
MPoly evaluate(const MPoly& a, int v, const Integer& value);
/// Replaces variable `v` by the polynomial `value` (which may involve any
/// variables).
MPoly substitute(const MPoly& a, int v, const MPoly& value);

std::optional<MPoly> divide_exact(const MPoly& a, const MPoly& b);
/// Exact division; throws ArithmeticError if `b` does not divide `a`.
MPoly exact_div(const MPoly& a, const MPoly& b);

struct PseudoDivision {
  MPoly quotient;
  MPoly remainder;
  int exponent = 0;  // lc(b)^exponent * a = quotient * b + remainder
};
/// Pseudo-division with respect to `v`; `v` must be >= the top variable of
/// both operands and `b` must involve `v`.
PseudoDivision pseudo_divide(const MPoly& a, const MPoly& b, int v);

Integer integer_content(const MPoly& a);
Integer max_norm(const MPoly& a);
/// gcd of the coefficients with respect to `v`, sign-normalized.
MPoly content_in(const MPoly& a, int v);
MPoly primitive_part_in(const MPoly& a, int v);
/// Makes base_lc positive.
MPoly sign_normal(const MPoly& a);

struct GcdCofactors {
  MPoly gcd;
  MPoly cofactor_a;
  MPoly cofactor_b;
};
/// gcd with cofactors; the gcd has positive base_lc (gcd(0,0) = 0).
GcdCofactors gcd_cofactors(const MPoly& a, const MPoly& b);
MPoly gcd(const MPoly& a, const MPoly& b);
MPoly lcm(const MPoly& a, const MPoly& b);

}  // namespace primtower

template <>
struct std::hash<primtower::MPoly> {
  std::size_t operator()(const primtower::MPoly& p) const { return p.hash(); }
};
