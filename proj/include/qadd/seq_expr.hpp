#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "qadd/poly.hpp"

namespace qadd {

/// The three index variables a sequence expression may reference.
enum class Var : int { m = 0, n = 1, k = 2 };

char var_name(Var v);
std::optional<Var> var_from_name(char c);

class Binding;

/// Integer-valued affine form c_m*m + c_n*n + c_k*k + d over the index
/// variables, used for q-power exponents and q-integer indices.
class IndexForm {
 public:
  /// The zero form.
  IndexForm() = default;

  static IndexForm constant(long value);
  static IndexForm variable(Var v);

  IndexForm& add_term(Var v, long coeff);
  IndexForm& add_constant(long value);

  long coefficient(Var v) const { return coeffs_[static_cast<int>(v)]; }
  long constant_term() const { return constant_; }
  bool is_constant() const;
  bool references(Var v) const { return coefficient(v) != 0; }

  /// The form's value under the binding. Throws UnboundVariable when a
  /// referenced variable is unbound.
  long evaluate(const Binding& binding) const;

  std::string render() const;

  friend bool operator==(const IndexForm&, const IndexForm&) = default;

 private:
  std::array<long, 3> coeffs_{0, 0, 0};
  long constant_ = 0;
};

/// Assignment of non-negative integers to index variables. Unset variables
/// stay unbound; evaluating an expression that references one throws.
class Binding {
 public:
  Binding() = default;

  /// Binds v to value. Throws DomainError when value < 0.
  Binding& set(Var v, long value);

  std::optional<long> get(Var v) const;

 private:
  std::array<long, 3> values_{0, 0, 0};
  std::array<bool, 3> bound_{false, false, false};
};

/// Immutable expression tree over q, q-powers, q-integers, and rational
/// constants. Nodes are shared, so copies are cheap and evaluation is safe
/// from concurrent threads.
class SeqExpr {
 public:
  enum class Kind { constant, q, q_pow, q_int, add, sub, mul, neg, int_pow };

  static SeqExpr constant(Rational value);
  static SeqExpr q();
  static SeqExpr q_pow(IndexForm exponent);
  static SeqExpr q_int(IndexForm index);
  static SeqExpr add(SeqExpr lhs, SeqExpr rhs);
  static SeqExpr sub(SeqExpr lhs, SeqExpr rhs);
  static SeqExpr mul(SeqExpr lhs, SeqExpr rhs);
  static SeqExpr neg(SeqExpr operand);
  /// operand^exponent. Throws DomainError when exponent < 0.
  static SeqExpr int_pow(SeqExpr operand, long exponent);

  Kind kind() const;

  // Kind-checked accessors; each throws DomainError when asked of the wrong
  // node kind. The tree accessors return handles sharing the same nodes.
  const Rational& constant_value() const;  // constant
  const IndexForm& index_form() const;     // q_pow / q_int
  SeqExpr lhs() const;                     // add / sub / mul
  SeqExpr rhs() const;                     // add / sub / mul
  SeqExpr operand() const;                 // neg / int_pow
  long exponent() const;                   // int_pow

  bool references(Var v) const;

  /// Evaluates to an exact polynomial in q. Throws UnboundVariable when a
  /// referenced variable is missing from the binding and NegativeIndex when
  /// an index form comes out negative.
  Poly evaluate(const Binding& binding) const;

  /// Canonical text form; parse_expr(render()) reproduces the tree exactly.
  std::string render() const;

  /// Structural equality.
  friend bool operator==(const SeqExpr& a, const SeqExpr& b);

 private:
  struct Node;
  explicit SeqExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Parses the expression grammar (whitespace-insensitive):
///
///   expr   := term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := '-' factor | atom ('^' nonneg-int)?
///   atom   := rational | 'q' ('^' qexponent)? | '[' index-form ']' | '(' expr ')'
///
/// where an unparenthesized qexponent is a single variable or non-negative
/// integer, and a parenthesized one is a full index form. Literal negative
/// exponents (e.g. "q^-1") are rejected at parse time.
SeqExpr parse_expr(std::string_view text);

}  // namespace qadd
