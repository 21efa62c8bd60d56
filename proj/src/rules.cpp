#include "qadd/rules.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "qadd/sweep.hpp"

namespace qadd {
namespace {

void require_positive(long value, const char* name) {
  if (value < 1)
    throw PreconditionViolated(std::string(name) + " must be >= 1, got " +
                               std::to_string(value));
}

void require_m_only(const SeqExpr& expr, const char* name) {
  if (expr.references(Var::n) || expr.references(Var::k))
    throw DomainError(std::string("coefficient expression ") + name +
                      " may reference only the variable m");
}

Binding bind_m(long m) {
  Binding b;
  b.set(Var::m, m);
  return b;
}

Poly q_minus_one() { return Poly::variable() - Poly::constant(1); }

}  // namespace

Poly linear_rule(long m, long n) {
  require_positive(m, "m");
  require_positive(n, "n");
  return q_integer(m) + Poly::monomial(1, m) * q_integer(n);
}

Poly quad1_rule(long m, long n) {
  require_positive(m, "m");
  require_positive(n, "n");
  const Poly im = q_integer(m);
  const Poly in = q_integer(n);
  return im + in + q_minus_one() * im * in;
}

Poly quad2_rule(long m, long n) {
  require_positive(m, "m");
  require_positive(n, "n");
  const Poly im = q_integer(m);
  const Poly in = q_integer(n);
  return Poly::monomial(1, n) * im + Poly::monomial(1, m) * in - q_minus_one() * im * in;
}

Poly mixed3_rule(long m, long n, long k) {
  require_positive(m, "m");
  require_positive(n, "n");
  require_positive(k, "k");
  const Poly qm = Poly::monomial(1, m);
  return q_integer(m) + qm * q_integer(n) + qm * q_integer(k) +
         qm * q_minus_one() * q_integer(n) * q_integer(k);
}

RuleSpec mixed3_spec() {
  const SeqExpr qm = SeqExpr::q_pow(IndexForm::variable(Var::m));
  return RuleSpec{
      SeqExpr::constant(1),
      qm,
      qm,
      SeqExpr::mul(qm, SeqExpr::sub(SeqExpr::q(), SeqExpr::constant(1))),
  };
}

Poly apply_rule(const RuleSpec& spec, long m, long n, long k) {
  require_m_only(spec.s, "s");
  require_m_only(spec.t, "t");
  require_m_only(spec.u, "u");
  require_m_only(spec.v, "v");
  require_positive(m, "m");
  require_positive(n, "n");
  require_positive(k, "k");
  const Binding at_m = bind_m(m);
  const Poly in = q_integer(n);
  const Poly ik = q_integer(k);
  return spec.s.evaluate(at_m) * q_integer(m) + spec.t.evaluate(at_m) * in +
         spec.u.evaluate(at_m) * ik + spec.v.evaluate(at_m) * in * ik;
}

VerificationReport verify_rule(const RuleSpec& spec, long max_m, long max_n, long max_k,
                               Exec exec) {
  require_m_only(spec.s, "s");
  require_m_only(spec.t, "t");
  require_m_only(spec.u, "u");
  require_m_only(spec.v, "v");
  if (max_m < 1 || max_n < 1 || max_k < 1)
    throw DomainError("verification box bounds must all be >= 1");

  // Coefficients depend on m alone; evaluate them (and the q-integers) once,
  // before the parallel sweep, so the cells do pure polynomial arithmetic.
  std::vector<std::array<Poly, 4>> coeffs(static_cast<std::size_t>(max_m) + 1);
  for (long m = 1; m <= max_m; ++m) {
    const Binding at_m = bind_m(m);
    coeffs[static_cast<std::size_t>(m)] = {spec.s.evaluate(at_m), spec.t.evaluate(at_m),
                                           spec.u.evaluate(at_m), spec.v.evaluate(at_m)};
  }
  std::vector<Poly> qi(static_cast<std::size_t>(max_m + max_n + max_k) + 1);
  for (long i = 0; i < static_cast<long>(qi.size()); ++i) qi[static_cast<std::size_t>(i)] = q_integer(i);

  return detail::sweep_box(max_m, max_n, max_k, exec, [&](long m, long n, long k) {
    const auto& c = coeffs[static_cast<std::size_t>(m)];
    Poly value = c[0] * qi[static_cast<std::size_t>(m)] + c[1] * qi[static_cast<std::size_t>(n)] +
                 c[2] * qi[static_cast<std::size_t>(k)] +
                 c[3] * qi[static_cast<std::size_t>(n)] * qi[static_cast<std::size_t>(k)];
    return value - qi[static_cast<std::size_t>(m + n + k)];
  });
}

std::optional<BuiltinRule> builtin_rule_from_name(std::string_view name) {
  if (name == "linear") return BuiltinRule::linear;
  if (name == "quad1") return BuiltinRule::quad1;
  if (name == "quad2") return BuiltinRule::quad2;
  if (name == "mixed3") return BuiltinRule::mixed3;
  return std::nullopt;
}

std::string_view builtin_rule_name(BuiltinRule rule) {
  switch (rule) {
    case BuiltinRule::linear: return "linear";
    case BuiltinRule::quad1: return "quad1";
    case BuiltinRule::quad2: return "quad2";
    case BuiltinRule::mixed3: return "mixed3";
  }
  throw DomainError("unknown builtin rule");
}

VerificationReport verify_builtin_rule(BuiltinRule rule, long max_m, long max_n, long max_k,
                                       Exec exec) {
  switch (rule) {
    case BuiltinRule::linear:
      return detail::sweep_box(max_m, max_n, 0, exec, [](long m, long n, long) {
        return linear_rule(m, n) - q_integer(m + n);
      });
    case BuiltinRule::quad1:
      return detail::sweep_box(max_m, max_n, 0, exec, [](long m, long n, long) {
        return quad1_rule(m, n) - q_integer(m + n);
      });
    case BuiltinRule::quad2:
      return detail::sweep_box(max_m, max_n, 0, exec, [](long m, long n, long) {
        return quad2_rule(m, n) - q_integer(m + n);
      });
    case BuiltinRule::mixed3:
      return verify_rule(mixed3_spec(), max_m, max_n, max_k, exec);
  }
  throw DomainError("unknown builtin rule");
}

DerivedCoefficients derive_from_constant_s(const SeqExpr& a, long m) {
  require_m_only(a, "a");
  require_positive(m, "m");
  const Poly value = a.evaluate(bind_m(m));
  if (value.degree() > Degree(0))
    throw DomainError("s must be constant-valued; at m = " + std::to_string(m) +
                      " it evaluates to " + value.to_string());
  const Rational a_m = value.coefficient(0);

  DerivedCoefficients out;
  out.a = a_m;
  out.u = q_integer(m + 1) - a_m * q_integer(m);
  out.t = out.u;
  out.v = Poly::monomial(1, m + 1) - out.u;
  const Poly lead = (a_m - 1) * q_integer(m);
  out.residual = [lead](long n, long k) {
    const Poly one = Poly::constant(1);
    return lead * (one - q_integer(n)) * (one - q_integer(k));
  };
  return out;
}

std::optional<ObstructionWitness> degree_obstruction(const SeqExpr& s, long m,
                                                     long search_bound) {
  require_m_only(s, "s");
  require_positive(m, "m");
  if (search_bound < 2)
    throw PreconditionViolated("search_bound must be >= 2, got " +
                               std::to_string(search_bound));
  const Poly s_m = s.evaluate(bind_m(m));
  if (!(s_m.degree() > Degree(2)))
    throw PreconditionViolated("s must have degree > 2 at m = " + std::to_string(m) +
                               "; got " + s_m.to_string());

  // Matching [m+n+k]_q at k = 1 and at n = 1 forces t = u and v exactly as
  // in the constant-s derivation, so any failure must show up off the
  // boundary: only triples with m < n + k - 1 are candidates.
  const Poly u = q_integer(m + 1) - s_m * q_integer(m);
  const Poly v = Poly::monomial(1, m + 1) - u;
  const Poly head = s_m * q_integer(m);
  for (long n = 1; n <= search_bound; ++n)
    for (long k = 1; k <= search_bound; ++k) {
      if (m >= n + k - 1) continue;
      const Poly in = q_integer(n);
      const Poly ik = q_integer(k);
      Poly lhs = head + u * in + u * ik + v * in * ik;
      Poly rhs = q_integer(m + n + k);
      if (lhs != rhs) return ObstructionWitness{n, k, std::move(lhs), std::move(rhs)};
    }
  return std::nullopt;
}

}  // namespace qadd
