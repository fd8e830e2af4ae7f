// Exact arithmetic in the coefficient field K = Q(v), with q = v^2.
//
// Every scalar in the library is a rational function in the formal variable
// v with arbitrary-precision integer coefficients.  Working with v instead
// of q makes every half-integer power of q (q^{1/2}, q^{k/2}, ...) an honest
// integer power of v, so all computations stay exact.  Since v is a formal
// variable, q is automatically "generic": no nonzero integer polynomial in
// v evaluates to zero.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace qpdo {

using Int = boost::multiprecision::cpp_int;

/// Dense univariate polynomial in v over arbitrary-precision integers.
/// Invariant: no trailing zero coefficients (the zero polynomial is the
/// empty coefficient vector).
class Poly {
 public:
  Poly() = default;
  explicit Poly(long c) { if (c != 0) coef_.push_back(Int(c)); }
  explicit Poly(Int c) { if (c != 0) coef_.push_back(std::move(c)); }

  /// c * v^deg, deg >= 0.
  static Poly monomial(Int c, int deg);
  static Poly variable() { return monomial(Int(1), 1); }

  bool is_zero() const { return coef_.empty(); }
  /// Degree; -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coef_.size()) - 1; }
  Int coeff(int d) const;
  const Int& leading() const;

  /// True when the polynomial is a single term c * v^d.
  bool is_monomial() const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  bool operator==(const Poly& o) const { return coef_ == o.coef_; }

  Int content() const;            // gcd of coefficients, >= 0
  Poly primitive_part() const;    // this / content, leading coeff > 0
  /// Exact division; throws std::domain_error when the division is not exact.
  Poly exact_div(const Poly& d) const;
  /// gcd over Z[v] (content times primitive gcd), leading coeff > 0.
  static Poly gcd(const Poly& a, const Poly& b);

  std::string str() const;

 private:
  std::vector<Int> coef_;
  void trim_();
};

/// Element of K = Q(v) in canonical form: gcd(num, den) = 1 and den has a
/// positive leading coefficient.  Equality is structural equality of the
/// canonical forms.  Immutable value type.
class FieldElement {
 public:
  FieldElement() : num_(), den_(1) {}
  FieldElement(long c) : num_(c), den_(1) {}  // NOLINT: implicit on purpose
  /// Normalizes num/den; throws std::domain_error on a zero denominator.
  FieldElement(Poly num, Poly den);
  explicit FieldElement(Poly num) : num_(std::move(num)), den_(1) {}

  static FieldElement q() { return v_power(2); }
  static FieldElement v() { return v_power(1); }
  /// v^e for any integer e (negative exponents land in the denominator).
  static FieldElement v_power(long e);
  /// q^e = v^{2e}.
  static FieldElement q_power(long e) { return v_power(2 * e); }
  /// q^{two_e/2} = v^{two_e}: the half-integer q-power with 2e = two_e.
  static FieldElement q_power_half(long two_e) { return v_power(two_e); }
  /// q^{num/den}; den must reduce to 1 or 2, otherwise the exponent is not a
  /// half-integer and the call throws std::domain_error.
  static FieldElement q_power_frac(long num, long den);

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == den_; }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  FieldElement operator-() const;
  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  /// Throws std::domain_error on division by zero.
  FieldElement operator/(const FieldElement& o) const;
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  FieldElement inverse() const;
  FieldElement pow(long e) const;

  bool operator==(const FieldElement& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }

  /// Scalar text form, e.g. "(v+1)/(2*v)".  Uses '/' (scalar syntax).
  std::string str() const;

 private:
  Poly num_, den_;
  void reduce_();
};

}  // namespace qpdo
