#include "qadd/poly.hpp"

#include <ostream>
#include <utility>
#include <vector>

namespace qadd {

long Degree::value() const {
  if (!finite_) throw DomainError("degree of the zero polynomial has no finite value");
  return value_;
}

std::ostream& operator<<(std::ostream& os, const Degree& d) {
  if (d.is_finite()) return os << d.value();
  return os << "-inf";
}

Poly Poly::constant(Rational c) { return monomial(std::move(c), 0); }

Poly Poly::monomial(Rational coeff, long exponent) {
  if (exponent < 0) throw DomainError("monomial exponent must be non-negative");
  Poly p;
  if (coeff != 0) p.terms_.emplace(exponent, std::move(coeff));
  return p;
}

Poly Poly::variable() { return monomial(1, 1); }

Degree Poly::degree() const {
  if (terms_.empty()) return Degree::neg_infinity();
  return Degree(terms_.rbegin()->first);
}

Rational Poly::coefficient(long exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

Poly& Poly::operator+=(const Poly& other) {
  for (const auto& [exp, coeff] : other.terms_) {
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
      terms_.emplace(exp, coeff);
    } else {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  for (const auto& [exp, coeff] : other.terms_) {
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
      terms_.emplace(exp, -coeff);
    } else {
      it->second -= coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Poly& Poly::operator*=(const Rational& scale) {
  if (scale == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [exp, coeff] : terms_) coeff *= scale;
  return *this;
}

Poly operator-(const Poly& a) {
  Poly r;
  for (const auto& [exp, coeff] : a.terms_) r.terms_.emplace(exp, -coeff);
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  if (a.is_zero() || b.is_zero()) return r;
  // Accumulate into a dense scratch vector: cheaper than repeated map lookups
  // for the dense-ish products that dominate here (q-integers are dense).
  const long out_degree = a.degree().value() + b.degree().value();
  std::vector<Rational> acc(static_cast<std::size_t>(out_degree) + 1);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) acc[static_cast<std::size_t>(ea + eb)] += ca * cb;
  auto hint = r.terms_.end();
  for (long e = 0; e <= out_degree; ++e) {
    auto& c = acc[static_cast<std::size_t>(e)];
    if (c != 0) hint = r.terms_.emplace_hint(r.terms_.end(), e, std::move(c));
  }
  return r;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool leading = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [exp, coeff] = *it;
    const bool negative = coeff < 0;
    if (leading) {
      if (negative) out += '-';
      leading = false;
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational magnitude = negative ? Rational(-coeff) : coeff;
    if (exp == 0) {
      out += qadd::to_string(magnitude);
      continue;
    }
    if (magnitude != 1) {
      out += qadd::to_string(magnitude);
      out += '*';
    }
    out += exp == 1 ? "q" : "q^" + std::to_string(exp);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

Poly pow(const Poly& base, long exponent) {
  if (exponent < 0) throw DomainError("pow exponent must be non-negative");
  Poly result = Poly::constant(1);
  Poly square = base;
  while (exponent > 0) {
    if (exponent & 1) result *= square;
    exponent >>= 1;
    if (exponent > 0) square *= square;
  }
  return result;
}

Poly exact_div(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DivisionByZero("exact_div by the zero polynomial");
  Poly quotient;
  Poly remainder = a;
  const long divisor_degree = b.degree().value();
  const Rational& divisor_lead = b.terms().rbegin()->second;
  while (!remainder.is_zero()) {
    const long lead = remainder.degree().value();
    if (lead < divisor_degree)
      throw NonZeroRemainder("exact_div: divisor does not divide exactly");
    Poly step = Poly::monomial(remainder.terms().rbegin()->second / divisor_lead,
                               lead - divisor_degree);
    quotient += step;
    remainder -= step * b;
  }
  return quotient;
}

Poly q_integer(long n) {
  if (n < 0) throw DomainError("q-integer index must be non-negative");
  Poly p;
  for (long e = 0; e < n; ++e) p += Poly::monomial(1, e);
  return p;
}

}  // namespace qadd
