#include "qadd/rational.hpp"

#include <cctype>

namespace qadd {

Rational make_rational(Integer num, Integer den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  // The backing type rejects negative denominators outright, so normalize
  // the sign here; it reduces to lowest terms on its own.
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_integer = [&](const char* what) {
    skip_ws();
    std::size_t start = pos;
    if (pos < text.size() && text[pos] == '-') ++pos;
    std::size_t digits_start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits_start)
      throw SyntaxError(start, {what}, std::string("expected ") + what + " in rational literal");
    return Integer(std::string(text.substr(start, pos - start)));
  };

  Integer num = read_integer("integer");
  skip_ws();
  Integer den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    den = read_integer("denominator");
    skip_ws();
  }
  if (pos != text.size())
    throw SyntaxError(pos, {"end of input"}, "trailing characters after rational literal");
  return make_rational(std::move(num), std::move(den));
}

std::string to_string(const Rational& value) { return value.str(); }

}  // namespace qadd
