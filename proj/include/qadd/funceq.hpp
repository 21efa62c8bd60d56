#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qadd/poly.hpp"
#include "qadd/report.hpp"

namespace qadd {

enum class SeqSource { iterated, closed_form, user_supplied };

/// A sequence f_1, f_2, ... of polynomials. values[i] holds f_{i+1}.
/// consistent_up_to is the largest N for which all three-part decompositions
/// of every total <= N were checked to agree (0 when never checked);
/// it never exceeds length().
struct FESequence {
  std::vector<Poly> values;
  SeqSource source = SeqSource::user_supplied;
  long consistent_up_to = 0;

  long length() const { return static_cast<long>(values.size()); }
  /// 1-based access. Throws DomainError when n is out of range.
  const Poly& at(long n) const;
};

FESequence make_user_sequence(std::vector<Poly> values);

/// One application of the three-argument quadratic step:
/// f_m + q^m f_n + q^m f_k + q^m (q-1) f_n f_k, the value the recurrence
/// assigns to index m+n+k. Throws PreconditionViolated when m < 1.
Poly mixed3_step(const Poly& f_m, const Poly& f_n, const Poly& f_k, long m);

/// An ordered way of writing a total as m + n + k with all parts >= 1.
struct Decomposition {
  long m = 0;
  long n = 0;
  long k = 0;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

/// Two decompositions of the same total whose step values differ.
struct ConsistencyViolation {
  long total = 0;
  Decomposition reference;    // lexicographically least decomposition
  Decomposition conflicting;  // first decomposition that disagrees
  Poly residual;              // conflicting value minus reference value

  friend bool operator==(const ConsistencyViolation&, const ConsistencyViolation&) = default;
};

enum class TrivialMatch { zero, q_integer, none };

/// Result of growing a sequence from the seed (f_1, f_2) total by total.
/// For each N from 3 up, every decomposition N = m + n + k must produce the
/// same value; the first disagreeing total stops the extension and its
/// conflicts are recorded.
struct ConsistencyReport {
  Poly f1, f2;
  long horizon = 0;
  TrivialMatch trivial_match = TrivialMatch::none;
  std::vector<ConsistencyViolation> violations;
  FESequence sequence;  // the values established before any violation

  bool consistent() const { return violations.empty(); }
};

/// Extends the seed up to the horizon (>= 3, else DomainError).
ConsistencyReport extend_sequence(const Poly& f1, const Poly& f2, long horizon);

struct CertifyParams {
  long horizon = 10;
  long trials = 200;
  long max_degree = 4;   // degree bound of sampled seed polynomials
  long coeff_bound = 5;  // coefficients drawn from [-coeff_bound, coeff_bound]
  std::uint64_t rng_seed = 0;
};

/// Outcome of a randomized search for consistent non-trivial seeds. Every
/// consistent seed found is a counterexample to triviality and is listed in
/// trial order.
struct CertifySummary {
  CertifyParams params;
  long consistent = 0;
  long inconsistent = 0;
  std::vector<std::pair<Poly, Poly>> counterexamples;
};

/// The seed drawn by trial number `trial` (deterministic): the trial's
/// stream is SplitMix64 seeded with splitmix_mix(rng_seed + trial *
/// golden_gamma); f1 then f2 are drawn coefficient by coefficient for
/// exponents 0..max_degree, each coefficient uniform on
/// [-coeff_bound, coeff_bound]; the two trivial seeds (0, 0) and
/// ([1], [2]) are skipped by redrawing both polynomials.
std::pair<Poly, Poly> sample_trial_seed(const CertifyParams& params, long trial);

/// Runs `trials` independent extension trials. Trials are independent, so
/// the parallel policy distributes them over threads; aggregation is by
/// trial index and the summary is identical to the serial run.
CertifySummary certify_trivial(const CertifyParams& params, Exec exec = Exec::parallel);

/// Residual of the ansatz f_j = h [j] for a fixed polynomial h: plugging it
/// into the three-argument step at (1, 1, 1) leaves q (q-1)(h^2 - h), and
/// the returned polynomial is that value with the invariant q (q-1) factor
/// stripped, i.e. h^2 - h. The ansatz solves the recurrence exactly when
/// the residual is zero, which forces h = 0 or h = 1.
Poly ansatz_check(const Poly& h);

// Closed-form solutions of the two-variable equations, each determined by
// f_1 alone (n >= 1, else PreconditionViolated):
//   linear:  f_{m+n} = f_m + q^m f_n          ->  f_n = [n] f_1
//   quad1:   f_{m+n} = f_m + f_n + (q-1) f_m f_n
//            ->  f_n = (1 - (1 + (q-1) f_1)^n) / (1 - q)
//   quad2:   f_{m+n} = q^n f_m + q^m f_n + (1-q) f_m f_n
//            ->  f_n = ((q + (1-q) f_1)^n - q^n) / (1 - q)
// The quadratic numerators are always divisible by 1 - q, so the results
// are exact polynomials.
Poly solve_linear(const Poly& f1, long n);
Poly solve_quad1(const Poly& f1, long n);
Poly solve_quad2(const Poly& f1, long n);

enum class FEKind { linear, quad1, quad2 };

/// f_1 .. f_length from the closed form of the given equation.
FESequence make_closed_form_sequence(FEKind kind, const Poly& f1, long length);

/// Checks f_{m+n} against the equation's right-hand side over the (max_m,
/// max_n) box. The sequence must have length >= max_m + max_n.
VerificationReport verify_two_var_fe(FEKind kind, const FESequence& seq, long max_m,
                                     long max_n, Exec exec = Exec::parallel);

}  // namespace qadd
