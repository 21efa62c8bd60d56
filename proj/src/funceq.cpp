#include "qadd/funceq.hpp"

#include <optional>
#include <string>
#include <utility>

#include "qadd/rng.hpp"
#include "qadd/sweep.hpp"

namespace qadd {
namespace {

void require_positive(long value, const char* name) {
  if (value < 1)
    throw PreconditionViolated(std::string(name) + " must be >= 1, got " +
                               std::to_string(value));
}

Poly q_minus_one() { return Poly::variable() - Poly::constant(1); }

}  // namespace

const Poly& FESequence::at(long n) const {
  if (n < 1 || n > length())
    throw DomainError("sequence index " + std::to_string(n) + " outside 1.." +
                      std::to_string(length()));
  return values[static_cast<std::size_t>(n - 1)];
}

FESequence make_user_sequence(std::vector<Poly> values) {
  FESequence seq;
  seq.values = std::move(values);
  seq.source = SeqSource::user_supplied;
  seq.consistent_up_to = 0;
  return seq;
}

Poly mixed3_step(const Poly& f_m, const Poly& f_n, const Poly& f_k, long m) {
  require_positive(m, "m");
  const Poly qm = Poly::monomial(1, m);
  return f_m + qm * f_n + qm * f_k + qm * q_minus_one() * f_n * f_k;
}

ConsistencyReport extend_sequence(const Poly& f1, const Poly& f2, long horizon) {
  if (horizon < 3) throw DomainError("horizon must be >= 3");

  ConsistencyReport report;
  report.f1 = f1;
  report.f2 = f2;
  report.horizon = horizon;
  if (f1.is_zero() && f2.is_zero())
    report.trivial_match = TrivialMatch::zero;
  else if (f1 == q_integer(1) && f2 == q_integer(2))
    report.trivial_match = TrivialMatch::q_integer;

  std::vector<Poly> values{f1, f2};  // values[i] = f_{i+1}
  for (long total = 3; total <= horizon; ++total) {
    std::optional<Poly> reference;
    Decomposition reference_at;
    bool conflicted = false;
    // Decompositions in lexicographic (m, n, k) order; all parts are < total,
    // so every value needed is already established.
    for (long m = 1; m <= total - 2; ++m)
      for (long n = 1; n <= total - m - 1; ++n) {
        const long k = total - m - n;
        Poly value = mixed3_step(values[static_cast<std::size_t>(m - 1)],
                                 values[static_cast<std::size_t>(n - 1)],
                                 values[static_cast<std::size_t>(k - 1)], m);
        if (!reference) {
          reference = std::move(value);
          reference_at = {m, n, k};
        } else if (value != *reference) {
          conflicted = true;
          report.violations.push_back(
              {total, reference_at, {m, n, k}, value - *reference});
        }
      }
    if (conflicted) break;
    values.push_back(std::move(*reference));
  }

  report.sequence.values = std::move(values);
  report.sequence.source = SeqSource::iterated;
  report.sequence.consistent_up_to = report.sequence.length();
  return report;
}

std::pair<Poly, Poly> sample_trial_seed(const CertifyParams& params, long trial) {
  if (trial < 0) throw DomainError("trial number must be >= 0");
  if (params.max_degree < 0) throw DomainError("max_degree must be >= 0");
  if (params.coeff_bound < 1) throw DomainError("coeff_bound must be >= 1");
  SplitMix64 rng(splitmix_mix(params.rng_seed +
                              static_cast<std::uint64_t>(trial) * SplitMix64::golden_gamma));
  auto draw = [&rng, &params] {
    Poly p;
    for (long e = 0; e <= params.max_degree; ++e) {
      const long c = rng.range(-params.coeff_bound, params.coeff_bound);
      if (c != 0) p += Poly::monomial(c, e);
    }
    return p;
  };
  const Poly trivial1 = q_integer(1);
  const Poly trivial2 = q_integer(2);
  Poly f1 = draw();
  Poly f2 = draw();
  while ((f1.is_zero() && f2.is_zero()) || (f1 == trivial1 && f2 == trivial2)) {
    f1 = draw();
    f2 = draw();
  }
  return {std::move(f1), std::move(f2)};
}

CertifySummary certify_trivial(const CertifyParams& params, Exec exec) {
  if (params.trials < 1) throw DomainError("trials must be >= 1");
  if (params.horizon < 3) throw DomainError("horizon must be >= 3");
  if (params.max_degree < 0) throw DomainError("max_degree must be >= 0");
  if (params.coeff_bound < 1) throw DomainError("coeff_bound must be >= 1");

  const long trials = params.trials;
  std::vector<std::pair<Poly, Poly>> seeds(static_cast<std::size_t>(trials));
  std::vector<char> consistent(static_cast<std::size_t>(trials), 0);
  auto run_trial = [&](long i) {
    auto seed = sample_trial_seed(params, i);
    const ConsistencyReport report = extend_sequence(seed.first, seed.second, params.horizon);
    consistent[static_cast<std::size_t>(i)] = report.consistent() ? 1 : 0;
    seeds[static_cast<std::size_t>(i)] = std::move(seed);
  };

  if (exec == Exec::serial) {
    for (long i = 0; i < trials; ++i) run_trial(i);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < trials; ++i) run_trial(i);
  }

  CertifySummary summary;
  summary.params = params;
  for (long i = 0; i < trials; ++i) {
    if (consistent[static_cast<std::size_t>(i)]) {
      ++summary.consistent;
      summary.counterexamples.push_back(std::move(seeds[static_cast<std::size_t>(i)]));
    } else {
      ++summary.inconsistent;
    }
  }
  return summary;
}

Poly ansatz_check(const Poly& h) {
  // Probe the step at (m, n, k) = (1, 1, 1): the ansatz would need
  // h [3] = h [1] + q h [1] + q h [1] + q (q-1) h^2 [1][1].
  const Poly residual = mixed3_step(h, h, h, 1) - h * q_integer(3);
  if (residual.is_zero()) return {};
  // By construction residual = q (q-1)(h^2 - h); strip the invariant factor.
  return exact_div(residual, Poly::variable() * q_minus_one());
}

Poly solve_linear(const Poly& f1, long n) {
  require_positive(n, "n");
  return q_integer(n) * f1;
}

Poly solve_quad1(const Poly& f1, long n) {
  require_positive(n, "n");
  const Poly one = Poly::constant(1);
  const Poly base = one + q_minus_one() * f1;
  return exact_div(one - pow(base, n), one - Poly::variable());
}

Poly solve_quad2(const Poly& f1, long n) {
  require_positive(n, "n");
  const Poly one = Poly::constant(1);
  const Poly base = Poly::variable() + (one - Poly::variable()) * f1;
  return exact_div(pow(base, n) - Poly::monomial(1, n), one - Poly::variable());
}

FESequence make_closed_form_sequence(FEKind kind, const Poly& f1, long length) {
  require_positive(length, "length");
  FESequence seq;
  seq.values.reserve(static_cast<std::size_t>(length));
  for (long n = 1; n <= length; ++n) {
    switch (kind) {
      case FEKind::linear: seq.values.push_back(solve_linear(f1, n)); break;
      case FEKind::quad1: seq.values.push_back(solve_quad1(f1, n)); break;
      case FEKind::quad2: seq.values.push_back(solve_quad2(f1, n)); break;
    }
  }
  seq.source = SeqSource::closed_form;
  seq.consistent_up_to = 0;
  return seq;
}

VerificationReport verify_two_var_fe(FEKind kind, const FESequence& seq, long max_m,
                                     long max_n, Exec exec) {
  if (max_m < 1 || max_n < 1) throw DomainError("verification box bounds must be >= 1");
  if (seq.length() < max_m + max_n)
    throw DomainError("sequence of length " + std::to_string(seq.length()) +
                      " cannot cover totals up to " + std::to_string(max_m + max_n));
  return detail::sweep_box(max_m, max_n, 0, exec, [&](long m, long n, long) {
    const Poly& f_m = seq.at(m);
    const Poly& f_n = seq.at(n);
    Poly rhs;
    switch (kind) {
      case FEKind::linear:
        rhs = f_m + Poly::monomial(1, m) * f_n;
        break;
      case FEKind::quad1:
        rhs = f_m + f_n + q_minus_one() * f_m * f_n;
        break;
      case FEKind::quad2:
        rhs = Poly::monomial(1, n) * f_m + Poly::monomial(1, m) * f_n -
              q_minus_one() * f_m * f_n;
        break;
    }
    return rhs - seq.at(m + n);
  });
}

}  // namespace qadd
