#pragma once

#include <compare>
#include <iosfwd>
#include <map>
#include <string>

#include "qadd/rational.hpp"

namespace qadd {

/// Degree of a polynomial: a non-negative integer, or -infinity for the zero
/// polynomial. -infinity compares below every finite degree and absorbs
/// shifts, so degree identities like deg(a*b) = deg(a) + deg(b) hold without
/// special-casing zero.
class Degree {
 public:
  Degree(long value) : finite_(true), value_(value) {}  // NOLINT: implicit by design

  static Degree neg_infinity() { return Degree(); }

  bool is_finite() const { return finite_; }

  /// The finite value. Throws DomainError on -infinity.
  long value() const;

  /// Shift by an integer; -infinity + shift == -infinity.
  Degree operator+(long shift) const { return finite_ ? Degree(value_ + shift) : *this; }

  friend bool operator==(const Degree& a, const Degree& b) {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
    if (a.finite_ != b.finite_)
      return a.finite_ ? std::strong_ordering::greater : std::strong_ordering::less;
    if (!a.finite_) return std::strong_ordering::equal;
    return a.value_ <=> b.value_;
  }

 private:
  Degree() : finite_(false), value_(0) {}

  bool finite_;
  long value_;
};

std::ostream& operator<<(std::ostream& os, const Degree& d);

/// Univariate polynomial in q with exact rational coefficients, stored
/// sparsely as exponent -> coefficient. Invariant: no zero coefficients are
/// ever stored, so structural equality is mathematical equality.
class Poly {
 public:
  /// The zero polynomial.
  Poly() = default;

  static Poly constant(Rational c);
  /// coeff * q^exponent. Throws DomainError when exponent < 0.
  static Poly monomial(Rational coeff, long exponent);
  /// The variable q itself.
  static Poly variable();

  bool is_zero() const { return terms_.empty(); }
  Degree degree() const;
  /// Coefficient of q^exponent; zero when the term is absent.
  Rational coefficient(long exponent) const;
  const std::map<long, Rational>& terms() const { return terms_; }

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Poly& other) { return *this = *this * other; }
  Poly& operator*=(const Rational& scale);

  friend Poly operator+(Poly a, const Poly& b) {
    a += b;
    return a;
  }
  friend Poly operator-(Poly a, const Poly& b) {
    a -= b;
    return a;
  }
  friend Poly operator-(const Poly& a);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& scale) {
    a *= scale;
    return a;
  }
  friend Poly operator*(const Rational& scale, Poly a) {
    a *= scale;
    return a;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

  /// Canonical rendering, highest exponent first: "q^3 + 1/2*q - 1", "0".
  std::string to_string() const;

 private:
  std::map<long, Rational> terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

/// base^exponent by binary powering. Throws DomainError when exponent < 0.
Poly pow(const Poly& base, long exponent);

/// Quotient a/b. Throws DivisionByZero when b == 0 and NonZeroRemainder when
/// b does not divide a exactly.
Poly exact_div(const Poly& a, const Poly& b);

/// [n]_q = 1 + q + ... + q^(n-1); [0]_q = 0. Throws DomainError when n < 0.
Poly q_integer(long n);

}  // namespace qadd
