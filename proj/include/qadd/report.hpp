#pragma once

#include <vector>

#include "qadd/poly.hpp"

namespace qadd {

/// Execution policy for box sweeps and trial batches. `serial` is the
/// straightforward reference loop; `parallel` distributes the same work over
/// OpenMP threads. The two policies produce identical reports.
enum class Exec { serial, parallel };

/// One cell of a sweep whose residual was nonzero. For two-argument sweeps
/// k is always 0.
struct SweepFailure {
  long m = 0;
  long n = 0;
  long k = 0;
  Poly residual;

  friend bool operator==(const SweepFailure&, const SweepFailure&) = default;
};

/// Outcome of sweeping a rule or identity over a box of indices. Failures
/// are listed in lexicographic (m, n, k) order regardless of execution
/// policy.
struct VerificationReport {
  long max_m = 0;
  long max_n = 0;
  long max_k = 0;  // 0 marks a two-argument sweep
  std::vector<SweepFailure> failures;

  bool passed() const { return failures.empty(); }

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

}  // namespace qadd
