#include <vector>

#include "doctest.h"
#include "qadd/rules.hpp"
#include "test_util.hpp"

using namespace qadd;
using namespace qadd::testutil;

namespace {

// Independent dense recomputations of the three two-argument rules.
Dense dlinear(long m, long n) {
  return dadd(dqint(m), dmul(dmonomial(1, m), dqint(n)));
}

Dense dquad1(long m, long n) {
  const Dense q_minus_1 = dsub(dmonomial(1, 1), dconst(1));
  return dadd(dadd(dqint(m), dqint(n)), dmul(q_minus_1, dmul(dqint(m), dqint(n))));
}

Dense dquad2(long m, long n) {
  const Dense one_minus_q = dsub(dconst(1), dmonomial(1, 1));
  return dadd(dadd(dmul(dmonomial(1, n), dqint(m)), dmul(dmonomial(1, m), dqint(n))),
              dmul(one_minus_q, dmul(dqint(m), dqint(n))));
}

Dense dmixed3(long m, long n, long k) {
  const Dense qm = dmonomial(1, m);
  const Dense q_minus_1 = dsub(dmonomial(1, 1), dconst(1));
  Dense out = dqint(m);
  out = dadd(out, dmul(qm, dqint(n)));
  out = dadd(out, dmul(qm, dqint(k)));
  out = dadd(out, dmul(dmul(qm, q_minus_1), dmul(dqint(n), dqint(k))));
  return out;
}

}  // namespace

TEST_CASE("two-argument rules reproduce the q-integer of the sum") {
  for (long m = 1; m <= 12; ++m) {
    for (long n = 1; n <= 12; ++n) {
      const Dense expected = dqint(m + n);
      CHECK(to_dense(linear_rule(m, n)) == dlinear(m, n));
      CHECK(to_dense(quad1_rule(m, n)) == dquad1(m, n));
      CHECK(to_dense(quad2_rule(m, n)) == dquad2(m, n));
      CHECK(to_dense(linear_rule(m, n)) == expected);
      CHECK(to_dense(quad1_rule(m, n)) == expected);
      CHECK(to_dense(quad2_rule(m, n)) == expected);
    }
  }
}

TEST_CASE("the three-argument rule reproduces the q-integer of the sum") {
  for (long m = 1; m <= 8; ++m)
    for (long n = 1; n <= 8; ++n)
      for (long k = 1; k <= 8; ++k) {
        CHECK(to_dense(mixed3_rule(m, n, k)) == dmixed3(m, n, k));
        CHECK(mixed3_rule(m, n, k) == q_integer(m + n + k));
      }
}

TEST_CASE("rule arguments below one are rejected") {
  CHECK_THROWS_AS(linear_rule(0, 1), PreconditionViolated);
  CHECK_THROWS_AS(quad1_rule(1, 0), PreconditionViolated);
  CHECK_THROWS_AS(quad2_rule(-1, 1), PreconditionViolated);
  CHECK_THROWS_AS(mixed3_rule(1, 0, 1), PreconditionViolated);
  CHECK_THROWS_AS(apply_rule(mixed3_spec(), 0, 1, 1), PreconditionViolated);
}

TEST_CASE("the packaged spec and the direct rule agree") {
  const RuleSpec spec = mixed3_spec();
  for (long m = 1; m <= 6; ++m)
    for (long n = 1; n <= 6; ++n)
      for (long k = 1; k <= 6; ++k)
        CHECK(apply_rule(spec, m, n, k) == mixed3_rule(m, n, k));
}

TEST_CASE("builtin sweeps pass and report their box") {
  for (const BuiltinRule rule : {BuiltinRule::linear, BuiltinRule::quad1, BuiltinRule::quad2}) {
    const VerificationReport report = verify_builtin_rule(rule, 12, 12, 5, Exec::serial);
    CHECK(report.passed());
    CHECK(report.max_m == 12);
    CHECK(report.max_n == 12);
    CHECK(report.max_k == 0);  // two-argument box
  }
  const VerificationReport report =
      verify_builtin_rule(BuiltinRule::mixed3, 8, 8, 8, Exec::serial);
  CHECK(report.passed());
  CHECK(report.max_k == 8);
}

TEST_CASE("builtin rule names round-trip") {
  for (const BuiltinRule rule :
       {BuiltinRule::linear, BuiltinRule::quad1, BuiltinRule::quad2, BuiltinRule::mixed3}) {
    const auto name = builtin_rule_name(rule);
    REQUIRE(builtin_rule_from_name(name).has_value());
    CHECK(*builtin_rule_from_name(name) == rule);
  }
  CHECK_FALSE(builtin_rule_from_name("cubic").has_value());
  CHECK_FALSE(builtin_rule_from_name("").has_value());
}

TEST_CASE("a corrupted spec is caught cell by cell") {
  // Damage the product coefficient: q^m (q-2) instead of q^m (q-1). The
  // defect is -q^m [n][k], so every cell fails.
  RuleSpec spec = mixed3_spec();
  spec.v = parse_expr("q^m * (q - 2)");
  const VerificationReport report = verify_rule(spec, 2, 2, 2, Exec::serial);
  CHECK_FALSE(report.passed());
  REQUIRE(report.failures.size() == 8);

  std::vector<SweepFailure> expected;
  for (long m = 1; m <= 2; ++m)
    for (long n = 1; n <= 2; ++n)
      for (long k = 1; k <= 2; ++k)
        expected.push_back(
            {m, n, k, -(Poly::monomial(1, m) * q_integer(n) * q_integer(k))});
  CHECK(report.failures == expected);
  CHECK(report.failures.front().residual.to_string() == "-q");
}

TEST_CASE("specs referencing n or k are rejected up front") {
  RuleSpec spec = mixed3_spec();
  spec.t = parse_expr("q^n");
  CHECK_THROWS_AS(verify_rule(spec, 2, 2, 2, Exec::serial), DomainError);
  CHECK_THROWS_WITH(verify_rule(spec, 2, 2, 2, Exec::serial),
                    "coefficient expression t may reference only the variable m");
}

TEST_CASE("constant s = 1 forces the exact rule") {
  const SeqExpr one = SeqExpr::constant(1);
  for (long m = 1; m <= 10; ++m) {
    const DerivedCoefficients d = derive_from_constant_s(one, m);
    CHECK(d.a == 1);
    CHECK(d.t == Poly::monomial(1, m));
    CHECK(d.u == Poly::monomial(1, m));
    CHECK(d.v == Poly::monomial(1, m) * (Poly::variable() - Poly::constant(1)));
    for (long n = 1; n <= 5; ++n)
      for (long k = 1; k <= 5; ++k) CHECK(d.residual(n, k).is_zero());
  }
}

TEST_CASE("constant s != 1 leaves a frozen residual") {
  const DerivedCoefficients d = derive_from_constant_s(SeqExpr::constant(2), 1);
  CHECK(d.a == 2);
  CHECK(d.t.to_string() == "q - 1");
  CHECK(d.u.to_string() == "q - 1");
  CHECK(d.v.to_string() == "q^2 - q + 1");
  CHECK(d.residual(2, 2).to_string() == "q^2");
  // The boundary rows are exact by construction.
  for (long n = 1; n <= 6; ++n) CHECK(d.residual(n, 1).is_zero());
  for (long k = 1; k <= 6; ++k) CHECK(d.residual(1, k).is_zero());
}

TEST_CASE("derived residuals satisfy both defining identities") {
  const std::vector<Rational> values = {Rational(0), Rational(2), Rational(-1),
                                        make_rational(1, 2)};
  for (const Rational& a : values) {
    for (long m = 1; m <= 4; ++m) {
      const DerivedCoefficients d = derive_from_constant_s(SeqExpr::constant(a), m);
      // Forced shapes: t = u = [m+1] - a [m], v = q^(m+1) - u.
      CHECK(d.t == q_integer(m + 1) - Poly::constant(a) * q_integer(m));
      CHECK(d.u == d.t);
      CHECK(d.v == Poly::monomial(1, m + 1) - d.u);
      for (long n = 1; n <= 5; ++n)
        for (long k = 1; k <= 5; ++k) {
          // Route one: the rule's defect against the q-integer.
          const Poly rule = Poly::constant(a) * q_integer(m) + d.t * q_integer(n) +
                            d.u * q_integer(k) + d.v * q_integer(n) * q_integer(k);
          CHECK(d.residual(n, k) == rule - q_integer(m + n + k));
          // Route two: the factored closed form (a-1)[m](1-[n])(1-[k]).
          const Poly one = Poly::constant(1);
          const Poly closed = Poly::constant(a - 1) * q_integer(m) *
                              (one - q_integer(n)) * (one - q_integer(k));
          CHECK(d.residual(n, k) == closed);
        }
    }
  }
}

TEST_CASE("s may vary with m as long as each value is constant") {
  // [m] evaluates to the constant 1 at m = 1 and to 1 + q beyond.
  const SeqExpr s = parse_expr("[m]");
  const DerivedCoefficients d = derive_from_constant_s(s, 1);
  CHECK(d.a == 1);
  CHECK(d.residual(3, 4).is_zero());
  CHECK_THROWS_AS(derive_from_constant_s(s, 2), DomainError);
  CHECK_THROWS_AS(derive_from_constant_s(parse_expr("q"), 1), DomainError);
}

TEST_CASE("high-degree s admits a frozen obstruction witness") {
  const SeqExpr s = parse_expr("q^3");
  const auto witness = degree_obstruction(s, 1, 4);
  REQUIRE(witness.has_value());
  CHECK(witness->n == 2);
  CHECK(witness->k == 2);
  CHECK(witness->lhs.to_string() == "q^5 + q^4 + q^3 + q + 1");
  CHECK(witness->rhs == q_integer(5));
  CHECK((witness->lhs - witness->rhs).to_string() == "q^5 - q^2");
}

TEST_CASE("the witness search skips cells ruled out by degree") {
  // At m = 3 the first admissible cell (with m < n + k - 1) that is not a
  // boundary row is (2, 3); (2, 2) is filtered out.
  const auto witness = degree_obstruction(parse_expr("q^3"), 3, 4);
  REQUIRE(witness.has_value());
  CHECK(witness->n == 2);
  CHECK(witness->k == 3);
  CHECK(witness->rhs == q_integer(3 + 2 + 3));
  CHECK(witness->lhs != witness->rhs);
}

TEST_CASE("obstruction witnesses match an independent recomputation") {
  for (long m = 1; m <= 3; ++m) {
    for (const char* text : {"q^3", "q^4", "2*q^3", "q^3 + q"}) {
      const SeqExpr s = parse_expr(text);
      const auto witness = degree_obstruction(s, m, 4);
      REQUIRE(witness.has_value());
      Binding binding;
      binding.set(Var::m, m);
      const Poly sm = s.evaluate(binding);
      const Poly t = q_integer(m + 1) - sm * q_integer(m);
      const Poly v = Poly::monomial(1, m + 1) - t;
      const Poly lhs = sm * q_integer(m) + t * q_integer(witness->n) +
                       t * q_integer(witness->k) +
                       v * q_integer(witness->n) * q_integer(witness->k);
      CHECK(witness->lhs == lhs);
      CHECK(witness->rhs == q_integer(m + witness->n + witness->k));
      CHECK(witness->lhs != witness->rhs);
    }
  }
}

TEST_CASE("obstruction preconditions") {
  CHECK_THROWS_AS(degree_obstruction(parse_expr("q^2"), 1, 4), PreconditionViolated);
  CHECK_THROWS_AS(degree_obstruction(parse_expr("2"), 1, 4), PreconditionViolated);
  CHECK_THROWS_AS(degree_obstruction(parse_expr("q^3"), 0, 4), PreconditionViolated);
  CHECK_THROWS_AS(degree_obstruction(parse_expr("q^3"), 1, 1), PreconditionViolated);
  // [m] has degree m - 1, so the same expression can pass or fail the
  // degree gate depending on m.
  CHECK_THROWS_AS(degree_obstruction(parse_expr("[m]"), 3, 4), PreconditionViolated);
  CHECK(degree_obstruction(parse_expr("[m]"), 4, 4).has_value());
}
