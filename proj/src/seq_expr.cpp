#include "qadd/seq_expr.hpp"

#include <utility>

namespace qadd {

char var_name(Var v) {
  switch (v) {
    case Var::m: return 'm';
    case Var::n: return 'n';
    case Var::k: return 'k';
  }
  throw DomainError("unknown index variable");
}

std::optional<Var> var_from_name(char c) {
  switch (c) {
    case 'm': return Var::m;
    case 'n': return Var::n;
    case 'k': return Var::k;
    default: return std::nullopt;
  }
}

IndexForm IndexForm::constant(long value) {
  IndexForm f;
  f.constant_ = value;
  return f;
}

IndexForm IndexForm::variable(Var v) {
  IndexForm f;
  f.coeffs_[static_cast<int>(v)] = 1;
  return f;
}

IndexForm& IndexForm::add_term(Var v, long coeff) {
  coeffs_[static_cast<int>(v)] += coeff;
  return *this;
}

IndexForm& IndexForm::add_constant(long value) {
  constant_ += value;
  return *this;
}

bool IndexForm::is_constant() const {
  return coeffs_[0] == 0 && coeffs_[1] == 0 && coeffs_[2] == 0;
}

long IndexForm::evaluate(const Binding& binding) const {
  long total = constant_;
  for (int i = 0; i < 3; ++i) {
    if (coeffs_[i] == 0) continue;
    auto value = binding.get(static_cast<Var>(i));
    if (!value)
      throw UnboundVariable(std::string("unbound index variable '") +
                            var_name(static_cast<Var>(i)) + "'");
    total += coeffs_[i] * *value;
  }
  return total;
}

std::string IndexForm::render() const {
  std::string out;
  auto add_piece = [&out](long value, char symbol) {
    const bool negative = value < 0;
    const long magnitude = negative ? -value : value;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (symbol == '\0') {
      out += std::to_string(magnitude);
      return;
    }
    if (magnitude != 1) {
      out += std::to_string(magnitude);
      out += '*';
    }
    out += symbol;
  };
  for (int i = 0; i < 3; ++i)
    if (coeffs_[i] != 0) add_piece(coeffs_[i], var_name(static_cast<Var>(i)));
  if (constant_ != 0) add_piece(constant_, '\0');
  if (out.empty()) out = "0";
  return out;
}

Binding& Binding::set(Var v, long value) {
  if (value < 0) throw DomainError("index variables bind to non-negative values only");
  values_[static_cast<int>(v)] = value;
  bound_[static_cast<int>(v)] = true;
  return *this;
}

std::optional<long> Binding::get(Var v) const {
  if (!bound_[static_cast<int>(v)]) return std::nullopt;
  return values_[static_cast<int>(v)];
}

struct SeqExpr::Node {
  Kind kind;
  Rational value;                    // constant
  IndexForm form;                    // q_pow / q_int
  std::shared_ptr<const Node> a, b;  // operands
  long exponent = 0;                 // int_pow
};

SeqExpr SeqExpr::constant(Rational value) {
  // Keep constants non-negative so that rendering round-trips structurally:
  // the grammar has no negative literals, only unary negation.
  if (value < 0) return neg(constant(-value));
  return SeqExpr(std::make_shared<const Node>(
      Node{Kind::constant, std::move(value), {}, nullptr, nullptr, 0}));
}

SeqExpr SeqExpr::q() {
  return SeqExpr(std::make_shared<const Node>(Node{Kind::q, 0, {}, nullptr, nullptr, 0}));
}

SeqExpr SeqExpr::q_pow(IndexForm exponent) {
  return SeqExpr(std::make_shared<const Node>(
      Node{Kind::q_pow, 0, std::move(exponent), nullptr, nullptr, 0}));
}

SeqExpr SeqExpr::q_int(IndexForm index) {
  return SeqExpr(std::make_shared<const Node>(
      Node{Kind::q_int, 0, std::move(index), nullptr, nullptr, 0}));
}

SeqExpr SeqExpr::add(SeqExpr lhs, SeqExpr rhs) {
  return SeqExpr(std::make_shared<const Node>(
      Node{Kind::add, 0, {}, std::move(lhs.node_), std::move(rhs.node_), 0}));
}

SeqExpr SeqExpr::sub(SeqExpr lhs, SeqExpr rhs) {
  return SeqExpr(std::make_shared<const Node>(
      Node{Kind::sub, 0, {}, std::move(lhs.node_), std::move(rhs.node_), 0}));
}

SeqExpr SeqExpr::mul(SeqExpr lhs, SeqExpr rhs) {
  return SeqExpr(std::make_shared<const Node>(
      Node{Kind::mul, 0, {}, std::move(lhs.node_), std::move(rhs.node_), 0}));
}

SeqExpr SeqExpr::neg(SeqExpr operand) {
  return SeqExpr(std::make_shared<const Node>(
      Node{Kind::neg, 0, {}, std::move(operand.node_), nullptr, 0}));
}

SeqExpr SeqExpr::int_pow(SeqExpr operand, long exponent) {
  if (exponent < 0) throw DomainError("power exponent must be non-negative");
  return SeqExpr(std::make_shared<const Node>(
      Node{Kind::int_pow, 0, {}, std::move(operand.node_), nullptr, exponent}));
}

SeqExpr::Kind SeqExpr::kind() const { return node_->kind; }

const Rational& SeqExpr::constant_value() const {
  if (node_->kind != Kind::constant) throw DomainError("not a constant node");
  return node_->value;
}

const IndexForm& SeqExpr::index_form() const {
  if (node_->kind != Kind::q_pow && node_->kind != Kind::q_int)
    throw DomainError("node carries no index form");
  return node_->form;
}

SeqExpr SeqExpr::lhs() const {
  if (node_->kind != Kind::add && node_->kind != Kind::sub && node_->kind != Kind::mul)
    throw DomainError("not a binary node");
  return SeqExpr(node_->a);
}

SeqExpr SeqExpr::rhs() const {
  if (node_->kind != Kind::add && node_->kind != Kind::sub && node_->kind != Kind::mul)
    throw DomainError("not a binary node");
  return SeqExpr(node_->b);
}

SeqExpr SeqExpr::operand() const {
  if (node_->kind != Kind::neg && node_->kind != Kind::int_pow)
    throw DomainError("not a unary node");
  return SeqExpr(node_->a);
}

long SeqExpr::exponent() const {
  if (node_->kind != Kind::int_pow) throw DomainError("not a power node");
  return node_->exponent;
}

bool SeqExpr::references(Var v) const {
  switch (node_->kind) {
    case Kind::constant:
    case Kind::q:
      return false;
    case Kind::q_pow:
    case Kind::q_int:
      return node_->form.references(v);
    case Kind::add:
    case Kind::sub:
    case Kind::mul:
      return lhs().references(v) || rhs().references(v);
    case Kind::neg:
    case Kind::int_pow:
      return operand().references(v);
  }
  throw DomainError("unknown expression node");
}

Poly SeqExpr::evaluate(const Binding& binding) const {
  switch (node_->kind) {
    case Kind::constant:
      return Poly::constant(node_->value);
    case Kind::q:
      return Poly::variable();
    case Kind::q_pow: {
      const long e = node_->form.evaluate(binding);
      if (e < 0)
        throw NegativeIndex("q-power exponent '" + node_->form.render() + "' evaluated to " +
                            std::to_string(e));
      return Poly::monomial(1, e);
    }
    case Kind::q_int: {
      const long idx = node_->form.evaluate(binding);
      if (idx < 0)
        throw NegativeIndex("q-integer index '" + node_->form.render() + "' evaluated to " +
                            std::to_string(idx));
      return q_integer(idx);
    }
    case Kind::add:
      return lhs().evaluate(binding) + rhs().evaluate(binding);
    case Kind::sub:
      return lhs().evaluate(binding) - rhs().evaluate(binding);
    case Kind::mul:
      return lhs().evaluate(binding) * rhs().evaluate(binding);
    case Kind::neg:
      return -operand().evaluate(binding);
    case Kind::int_pow:
      return pow(operand().evaluate(binding), node_->exponent);
  }
  throw DomainError("unknown expression node");
}

namespace {

/// True when the form renders as a single bare token after "q^": one
/// variable with coefficient 1, or a non-negative integer constant.
bool bare_token_form(const IndexForm& form, std::string& token) {
  if (form.is_constant()) {
    if (form.constant_term() < 0) return false;
    token = std::to_string(form.constant_term());
    return true;
  }
  int nonzero = 0;
  Var which = Var::m;
  for (int i = 0; i < 3; ++i) {
    if (form.coefficient(static_cast<Var>(i)) != 0) {
      ++nonzero;
      which = static_cast<Var>(i);
    }
  }
  if (nonzero == 1 && form.coefficient(which) == 1 && form.constant_term() == 0) {
    token = std::string(1, var_name(which));
    return true;
  }
  return false;
}

}  // namespace

std::string SeqExpr::render() const {
  switch (node_->kind) {
    case Kind::constant:
      return to_string(node_->value);
    case Kind::q:
      return "q";
    case Kind::q_pow: {
      std::string token;
      if (bare_token_form(node_->form, token)) return "q^" + token;
      return "q^(" + node_->form.render() + ")";
    }
    case Kind::q_int:
      return "[" + node_->form.render() + "]";
    case Kind::add:
      return "(" + lhs().render() + " + " + rhs().render() + ")";
    case Kind::sub:
      return "(" + lhs().render() + " - " + rhs().render() + ")";
    case Kind::mul:
      return "(" + lhs().render() + " * " + rhs().render() + ")";
    case Kind::neg:
      return "-" + operand().render();
    case Kind::int_pow: {
      const Kind base_kind = operand().kind();
      const bool self_wrapped =
          base_kind == Kind::add || base_kind == Kind::sub || base_kind == Kind::mul;
      std::string base = operand().render();
      if (!self_wrapped) base = "(" + base + ")";
      return base + "^" + std::to_string(node_->exponent);
    }
  }
  throw DomainError("unknown expression node");
}

bool operator==(const SeqExpr& a, const SeqExpr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  using Kind = SeqExpr::Kind;
  switch (a.kind()) {
    case Kind::constant:
      return a.constant_value() == b.constant_value();
    case Kind::q:
      return true;
    case Kind::q_pow:
    case Kind::q_int:
      return a.index_form() == b.index_form();
    case Kind::add:
    case Kind::sub:
    case Kind::mul:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
    case Kind::neg:
      return a.operand() == b.operand();
    case Kind::int_pow:
      return a.exponent() == b.exponent() && a.operand() == b.operand();
  }
  return false;
}

}  // namespace qadd
