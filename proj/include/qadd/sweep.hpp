#pragma once

#include <algorithm>
#include <iterator>
#include <tuple>
#include <utility>
#include <vector>

#include "qadd/errors.hpp"
#include "qadd/report.hpp"

namespace qadd::detail {

/// Sweeps body(m, n, k) over 1..max_m x 1..max_n x 1..max_k and collects the
/// cells with nonzero residual. max_k == 0 requests a two-argument sweep:
/// the body is called with k pinned to 0. The cells are independent, so the
/// parallel policy splits the (m, n) plane across threads, gathers
/// per-thread failure lists, and sorts the merged list back into
/// lexicographic order; the result is identical to the serial loop.
template <class Body>
VerificationReport sweep_box(long max_m, long max_n, long max_k, Exec exec, Body&& body) {
  if (max_m < 1 || max_n < 1 || max_k < 0)
    throw DomainError("sweep bounds must satisfy max_m, max_n >= 1 and max_k >= 0");
  VerificationReport report{max_m, max_n, max_k, {}};
  const long k_lo = max_k == 0 ? 0 : 1;
  const long k_hi = max_k == 0 ? 0 : max_k;

  if (exec == Exec::serial) {
    for (long m = 1; m <= max_m; ++m)
      for (long n = 1; n <= max_n; ++n)
        for (long k = k_lo; k <= k_hi; ++k) {
          Poly residual = body(m, n, k);
          if (!residual.is_zero()) report.failures.push_back({m, n, k, std::move(residual)});
        }
    return report;
  }

#pragma omp parallel
  {
    std::vector<SweepFailure> local;
#pragma omp for collapse(2) schedule(dynamic) nowait
    for (long m = 1; m <= max_m; ++m)
      for (long n = 1; n <= max_n; ++n)
        for (long k = k_lo; k <= k_hi; ++k) {
          Poly residual = body(m, n, k);
          if (!residual.is_zero()) local.push_back({m, n, k, std::move(residual)});
        }
#pragma omp critical
    report.failures.insert(report.failures.end(), std::make_move_iterator(local.begin()),
                           std::make_move_iterator(local.end()));
  }
  std::sort(report.failures.begin(), report.failures.end(),
            [](const SweepFailure& a, const SweepFailure& b) {
              return std::tie(a.m, a.n, a.k) < std::tie(b.m, b.n, b.k);
            });
  return report;
}

}  // namespace qadd::detail
