#pragma once

#include <functional>

#include "qadd/poly.hpp"
#include "qadd/report.hpp"
#include "qadd/seq_expr.hpp"

namespace qadd {

/// Parameters of the quadratic zero-identity family. The boundary sequences
/// r_{1,k} and r_{n,1} must agree at index 1 (their shared value r), and the
/// scalar constants u0, v0 must be nonzero; build_family enforces both.
struct ZeroIdentitySpec {
  SeqExpr r1k;   // r_{1,k}, an expression in k only
  SeqExpr rn1;   // r_{n,1}, an expression in n only
  Poly s0, t0;   // initial polynomials s(q), t(q)
  Rational u0, v0;
};

/// The six derived sequences
///
///   r'_{n,k} = r_{1,k}[n] + r_{n,1}[k] - r[n][k]
///   s'_k = -(1/u0)(r_{1,k} - r[k] - u0 s0 [k])
///   t'_n = -(1/v0)(r_{n,1} - r[n] - v0 t0 [n])
///   u'_m = u0 [m],   v'_m = v0 [m],   w'_m = -(r + u0 s0 + v0 t0)[m]
///
/// for which r'_{n,k}[m] + u'_m s'_k [n] + v'_m t'_n [k] + w'_m [n][k]
/// vanishes identically. The closures capture immutable data only and are
/// safe to call from concurrent threads.
struct DerivedFamily {
  std::function<Poly(long n, long k)> rprime;
  std::function<Poly(long k)> sprime;
  std::function<Poly(long n)> tprime;
  std::function<Poly(long m)> uprime;
  std::function<Poly(long m)> vprime;
  std::function<Poly(long m)> wprime;
};

/// Builds the derived sequences. Throws ZeroConstant when u0 or v0 is zero,
/// InitialMismatch when r_{1,k} and r_{n,1} disagree at index 1, and
/// DomainError when a boundary expression references a foreign variable.
DerivedFamily build_family(const ZeroIdentitySpec& spec);

/// The identity's left-hand side at (m, n, k); zero for families built by
/// build_family. All indices must be >= 1.
Poly evaluate_identity(const DerivedFamily& family, long m, long n, long k);

/// Sweeps evaluate_identity over the box and reports every nonzero cell.
VerificationReport verify_family(const ZeroIdentitySpec& spec, long max_m, long max_n,
                                 long max_k, Exec exec = Exec::parallel);

}  // namespace qadd
