#pragma once

#include <functional>
#include <optional>
#include <string_view>

#include "qadd/poly.hpp"
#include "qadd/report.hpp"
#include "qadd/seq_expr.hpp"

namespace qadd {

// Two-argument addition rules. Each evaluates to [m+n]_q for all m, n >= 1;
// arguments below 1 throw PreconditionViolated.
Poly linear_rule(long m, long n);  // [m] + q^m [n]
Poly quad1_rule(long m, long n);   // [m] + [n] + (q-1)[m][n]
Poly quad2_rule(long m, long n);   // q^n [m] + q^m [n] + (1-q)[m][n]

/// Three-argument rule [m] + q^m [n] + q^m [k] + q^m (q-1)[n][k], equal to
/// [m+n+k]_q for all m, n, k >= 1.
Poly mixed3_rule(long m, long n, long k);

/// Candidate three-argument rule with coefficient sequences indexed by m
/// alone: s_m [m] + t_m [n] + u_m [k] + v_m [n][k]. The expressions may
/// reference only the variable m.
struct RuleSpec {
  SeqExpr s, t, u, v;
};

/// The spec whose rule is mixed3_rule: s = 1, t = u = q^m, v = q^m (q-1).
RuleSpec mixed3_spec();

/// The rule's value at (m, n, k); all three indices must be >= 1.
Poly apply_rule(const RuleSpec& spec, long m, long n, long k);

/// Sweeps apply_rule - [m+n+k]_q over the box. Coefficient expressions are
/// evaluated once per m, outside the parallel region.
VerificationReport verify_rule(const RuleSpec& spec, long max_m, long max_n, long max_k,
                               Exec exec = Exec::parallel);

enum class BuiltinRule { linear, quad1, quad2, mixed3 };

std::optional<BuiltinRule> builtin_rule_from_name(std::string_view name);
std::string_view builtin_rule_name(BuiltinRule rule);

/// Sweeps a builtin rule against the matching q-integer. The two-argument
/// rules ignore max_k and report a two-argument box.
VerificationReport verify_builtin_rule(BuiltinRule rule, long max_m, long max_n, long max_k,
                                       Exec exec = Exec::parallel);

/// Requiring s_m [m] + t_m [n] + u_m [k] + v_m [n][k] to reproduce
/// [m+n+k]_q at k = 1 and n = 1 forces, for a constant-valued s with
/// s_m = a_m:
///
///   t_m = u_m = [m+1] - a_m [m],   v_m = q^(m+1) - u_m,
///
/// and leaves the residual (a_m - 1)[m](1 - [n] - [k] + [n][k]); the rule is
/// exact for all n, k precisely when a_m = 1.
struct DerivedCoefficients {
  Rational a;  // the value of s at this m
  Poly t, u, v;
  std::function<Poly(long n, long k)> residual;
};

/// Derives the forced coefficients at index m. The expression `a` may
/// reference only m and must evaluate to a constant (degree <= 0) there;
/// otherwise DomainError.
DerivedCoefficients derive_from_constant_s(const SeqExpr& a, long m);

/// First (n, k) in lexicographic order, both in [1, search_bound], with
/// m < n + k - 1, where the rule built from s and its forced coefficients
/// misses [m+n+k]_q.
struct ObstructionWitness {
  long n = 0;
  long k = 0;
  Poly lhs;  // rule value at (m, n, k)
  Poly rhs;  // [m+n+k]_q
};

/// Searches for a witness that no rule with this s works. Preconditions:
/// s evaluated at m has degree > 2 (else the degree argument does not
/// apply), m >= 1, search_bound >= 2; violations throw PreconditionViolated.
std::optional<ObstructionWitness> degree_obstruction(const SeqExpr& s, long m,
                                                     long search_bound);

}  // namespace qadd
