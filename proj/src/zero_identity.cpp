#include "qadd/zero_identity.hpp"

#include <algorithm>
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

}  // namespace

DerivedFamily build_family(const ZeroIdentitySpec& spec) {
  if (spec.u0 == 0 || spec.v0 == 0)
    throw ZeroConstant("the scalar constants u0 and v0 must be nonzero");
  if (spec.r1k.references(Var::m) || spec.r1k.references(Var::n))
    throw DomainError("r1k may reference only the variable k");
  if (spec.rn1.references(Var::m) || spec.rn1.references(Var::k))
    throw DomainError("rn1 may reference only the variable n");

  auto r1k_at = [expr = spec.r1k](long k) {
    Binding b;
    b.set(Var::k, k);
    return expr.evaluate(b);
  };
  auto rn1_at = [expr = spec.rn1](long n) {
    Binding b;
    b.set(Var::n, n);
    return expr.evaluate(b);
  };

  const Poly r = r1k_at(1);
  if (r != rn1_at(1))
    throw InitialMismatch("r1k at k = 1 and rn1 at n = 1 must agree; got " + r.to_string() +
                          " vs " + rn1_at(1).to_string());

  const Rational u0 = spec.u0;
  const Rational v0 = spec.v0;
  const Poly s0 = spec.s0;
  const Poly t0 = spec.t0;
  // w'_m is -(r + u0 s0 + v0 t0)[m]; precompute the bracket.
  const Poly w_head = r + u0 * s0 + v0 * t0;

  DerivedFamily family;
  family.rprime = [r1k_at, rn1_at, r](long n, long k) {
    return r1k_at(k) * q_integer(n) + rn1_at(n) * q_integer(k) -
           r * q_integer(n) * q_integer(k);
  };
  family.sprime = [r1k_at, r, s0, u0](long k) {
    const Poly ik = q_integer(k);
    return Rational(-1) / u0 * (r1k_at(k) - r * ik - u0 * (s0 * ik));
  };
  family.tprime = [rn1_at, r, t0, v0](long n) {
    const Poly in = q_integer(n);
    return Rational(-1) / v0 * (rn1_at(n) - r * in - v0 * (t0 * in));
  };
  family.uprime = [u0](long m) { return u0 * q_integer(m); };
  family.vprime = [v0](long m) { return v0 * q_integer(m); };
  family.wprime = [w_head](long m) { return -(w_head * q_integer(m)); };
  return family;
}

Poly evaluate_identity(const DerivedFamily& family, long m, long n, long k) {
  require_positive(m, "m");
  require_positive(n, "n");
  require_positive(k, "k");
  const Poly in = q_integer(n);
  const Poly ik = q_integer(k);
  return family.rprime(n, k) * q_integer(m) + family.uprime(m) * family.sprime(k) * in +
         family.vprime(m) * family.tprime(n) * ik + family.wprime(m) * in * ik;
}

VerificationReport verify_family(const ZeroIdentitySpec& spec, long max_m, long max_n,
                                 long max_k, Exec exec) {
  const DerivedFamily family = build_family(spec);
  if (max_m < 1 || max_n < 1 || max_k < 1)
    throw DomainError("verification box bounds must all be >= 1");

  // Tabulate every sequence value the sweep needs up front. Expression
  // evaluation can throw (negative index forms), which must not happen
  // inside the parallel region, and r'_{n,k} would otherwise be recomputed
  // for every m.
  const long top = std::max(max_m, std::max(max_n, max_k));
  std::vector<Poly> qi(static_cast<std::size_t>(top) + 1);
  for (long i = 0; i <= top; ++i) qi[static_cast<std::size_t>(i)] = q_integer(i);

  auto tabulate = [](long bound, const std::function<Poly(long)>& f) {
    std::vector<Poly> values(static_cast<std::size_t>(bound) + 1);
    for (long i = 1; i <= bound; ++i) values[static_cast<std::size_t>(i)] = f(i);
    return values;
  };
  const std::vector<Poly> sp = tabulate(max_k, family.sprime);
  const std::vector<Poly> tp = tabulate(max_n, family.tprime);
  const std::vector<Poly> up = tabulate(max_m, family.uprime);
  const std::vector<Poly> vp = tabulate(max_m, family.vprime);
  const std::vector<Poly> wp = tabulate(max_m, family.wprime);
  std::vector<std::vector<Poly>> rp(static_cast<std::size_t>(max_n) + 1);
  for (long n = 1; n <= max_n; ++n) {
    rp[static_cast<std::size_t>(n)].resize(static_cast<std::size_t>(max_k) + 1);
    for (long k = 1; k <= max_k; ++k)
      rp[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] = family.rprime(n, k);
  }

  return detail::sweep_box(max_m, max_n, max_k, exec, [&](long m, long n, long k) {
    const auto um = static_cast<std::size_t>(m);
    const auto un = static_cast<std::size_t>(n);
    const auto uk = static_cast<std::size_t>(k);
    return rp[un][uk] * qi[um] + up[um] * sp[uk] * qi[un] + vp[um] * tp[un] * qi[uk] +
           wp[um] * qi[un] * qi[uk];
  });
}

}  // namespace qadd
