#include <cctype>
#include <charconv>
#include <string>
#include <vector>

#include "qadd/seq_expr.hpp"

namespace qadd {
namespace {

std::string describe_found(std::string_view src, std::size_t at) {
  if (at >= src.size()) return "end of input";
  return std::string("'") + src[at] + "'";
}

std::string join_expected(const std::vector<std::string>& expected) {
  std::string out;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i > 0) out += i + 1 == expected.size() ? " or " : ", ";
    out += expected[i];
  }
  return out;
}

std::string error_message(std::string_view src, std::size_t at,
                          const std::vector<std::string>& expected) {
  return "syntax error at byte " + std::to_string(at) + ": expected " +
         join_expected(expected) + ", found " + describe_found(src, at);
}

struct Parser {
  std::string_view src;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }

  char peek() {
    skip_ws();
    return pos < src.size() ? src[pos] : '\0';
  }

  bool consume(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }

  [[noreturn]] void fail(std::size_t at, std::vector<std::string> expected) {
    throw SyntaxError(at, expected, error_message(src, at, expected));
  }

  [[noreturn]] void fail_negative_exponent(std::size_t at) {
    throw NegativeLiteralExponent(
        at, {"non-negative exponent"},
        "syntax error at byte " + std::to_string(at) +
            ": literal exponent is negative and can never evaluate");
  }

  void expect(char c, const char* what) {
    skip_ws();
    if (pos < src.size() && src[pos] == c) {
      ++pos;
      return;
    }
    fail(pos, {what});
  }

  bool at_digit() {
    skip_ws();
    return pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]));
  }

  /// Machine-word integer for exponents, index coefficients and constants.
  long parse_long() {
    skip_ws();
    const std::size_t start = pos;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
    long value = 0;
    auto [end, ec] = std::from_chars(src.data() + start, src.data() + pos, value);
    if (ec != std::errc() || end != src.data() + pos)
      fail(start, {"integer small enough for an index"});
    return value;
  }

  /// Unbounded integer for rational literals.
  Integer parse_bigint() {
    skip_ws();
    const std::size_t start = pos;
    while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
    return Integer(std::string(src.substr(start, pos - start)));
  }

  SeqExpr parse_rational_literal() {
    Integer num = parse_bigint();
    if (consume('/')) {
      if (!at_digit()) fail(pos, {"denominator"});
      Integer den = parse_bigint();
      return SeqExpr::constant(make_rational(std::move(num), std::move(den)));
    }
    return SeqExpr::constant(Rational(std::move(num)));
  }

  IndexForm parse_index_form() {
    IndexForm form;
    long sign = 1;
    if (consume('-'))
      sign = -1;
    else
      consume('+');
    for (;;) {
      skip_ws();
      const std::size_t at = pos;
      if (at_digit()) {
        const long value = parse_long();
        if (consume('*')) {
          skip_ws();
          const std::size_t var_at = pos;
          const auto var = pos < src.size() ? var_from_name(src[pos]) : std::nullopt;
          if (!var) fail(var_at, {"index variable"});
          ++pos;
          form.add_term(*var, sign * value);
        } else {
          form.add_constant(sign * value);
        }
      } else if (const auto var = pos < src.size() ? var_from_name(src[pos]) : std::nullopt) {
        ++pos;
        form.add_term(*var, sign);
      } else {
        fail(at, {"integer", "index variable"});
      }
      if (consume('+')) {
        sign = 1;
      } else if (consume('-')) {
        sign = -1;
      } else {
        break;
      }
    }
    return form;
  }

  SeqExpr parse_q_tail() {
    if (!consume('^')) return SeqExpr::q();
    skip_ws();
    const std::size_t at = pos;
    if (pos < src.size()) {
      const char c = src[pos];
      if (c == '(') {
        ++pos;
        IndexForm form = parse_index_form();
        expect(')', "')'");
        if (form.is_constant() && form.constant_term() < 0) fail_negative_exponent(at);
        return SeqExpr::q_pow(std::move(form));
      }
      if (const auto var = var_from_name(c)) {
        ++pos;
        return SeqExpr::q_pow(IndexForm::variable(*var));
      }
      if (std::isdigit(static_cast<unsigned char>(c)))
        return SeqExpr::q_pow(IndexForm::constant(parse_long()));
      if (c == '-') {
        ++pos;
        if (at_digit()) fail_negative_exponent(at);
        fail(at, {"'('", "index variable", "non-negative integer"});
      }
    }
    fail(at, {"'('", "index variable", "non-negative integer"});
  }

  SeqExpr parse_atom() {
    skip_ws();
    const std::size_t at = pos;
    if (pos < src.size()) {
      const char c = src[pos];
      if (std::isdigit(static_cast<unsigned char>(c))) return parse_rational_literal();
      if (c == 'q') {
        ++pos;
        return parse_q_tail();
      }
      if (c == '[') {
        ++pos;
        IndexForm form = parse_index_form();
        expect(']', "']'");
        return SeqExpr::q_int(std::move(form));
      }
      if (c == '(') {
        ++pos;
        SeqExpr inner = parse_sum();
        expect(')', "')'");
        return inner;
      }
    }
    fail(at, {"rational", "'q'", "'['", "'('"});
  }

  SeqExpr parse_factor() {
    skip_ws();
    if (consume('-')) return SeqExpr::neg(parse_factor());
    SeqExpr atom = parse_atom();
    if (consume('^')) {
      skip_ws();
      const std::size_t at = pos;
      if (pos < src.size() && src[pos] == '-') fail_negative_exponent(at);
      if (!at_digit()) fail(at, {"non-negative integer exponent"});
      return SeqExpr::int_pow(std::move(atom), parse_long());
    }
    return atom;
  }

  SeqExpr parse_term() {
    SeqExpr out = parse_factor();
    while (consume('*')) out = SeqExpr::mul(std::move(out), parse_factor());
    return out;
  }

  SeqExpr parse_sum() {
    SeqExpr out = parse_term();
    for (;;) {
      if (consume('+'))
        out = SeqExpr::add(std::move(out), parse_term());
      else if (consume('-'))
        out = SeqExpr::sub(std::move(out), parse_term());
      else
        return out;
    }
  }
};

}  // namespace

SeqExpr parse_expr(std::string_view text) {
  Parser parser{text};
  SeqExpr expr = parser.parse_sum();
  parser.skip_ws();
  if (parser.pos != text.size())
    parser.fail(parser.pos, {"'+'", "'-'", "'*'", "end of input"});
  return expr;
}

}  // namespace qadd
