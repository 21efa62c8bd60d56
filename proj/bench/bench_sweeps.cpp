// Times every parallel sweep kernel against its serial reference and checks
// that both produce identical reports. Run with --quick for smaller boxes.

#include <omp.h>

#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "qadd/funceq.hpp"
#include "qadd/rules.hpp"
#include "qadd/zero_identity.hpp"

using namespace qadd;

namespace {

struct Case {
  std::string name;
  long cells = 0;
  std::function<bool()> equal;          // serial report == parallel report
  std::function<void(Exec)> run;        // timed body
};

double time_once(const std::function<void(Exec)>& run, Exec exec) {
  const double start = omp_get_wtime();
  run(exec);
  return omp_get_wtime() - start;
}

}  // namespace

int main(int argc, char** argv) {
  bool quick = false;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--quick") == 0) {
      quick = true;
    } else {
      std::fprintf(stderr, "usage: %s [--quick]\n", argv[0]);
      return 2;
    }
  }

  const long rule_box = quick ? 10 : 16;
  const long family_box = quick ? 8 : 12;
  const long fe_box = quick ? 8 : 12;
  const long trials = quick ? 64 : 256;

  const ZeroIdentitySpec family_spec{parse_expr("[k]"), parse_expr("[n]"), Poly::variable(),
                                     Poly::constant(1), Rational(2), make_rational(3, 2)};
  const Poly fe_seed = Poly::variable() + Poly::constant(2);
  const FESequence fe_seq = make_closed_form_sequence(FEKind::quad2, fe_seed, 2 * fe_box);
  CertifyParams certify_params;
  certify_params.rng_seed = 2026;
  certify_params.trials = trials;
  certify_params.horizon = 8;

  std::vector<Case> cases;
  cases.push_back(
      {"verify-rule mixed3 " + std::to_string(rule_box) + "^3",
       rule_box * rule_box * rule_box,
       [=] {
         return verify_builtin_rule(BuiltinRule::mixed3, rule_box, rule_box, rule_box,
                                    Exec::serial) ==
                verify_builtin_rule(BuiltinRule::mixed3, rule_box, rule_box, rule_box,
                                    Exec::parallel);
       },
       [=](Exec exec) {
         verify_builtin_rule(BuiltinRule::mixed3, rule_box, rule_box, rule_box, exec);
       }});
  cases.push_back(
      {"zero-identity family " + std::to_string(family_box) + "^3",
       family_box * family_box * family_box,
       [=] {
         return verify_family(family_spec, family_box, family_box, family_box,
                              Exec::serial) ==
                verify_family(family_spec, family_box, family_box, family_box,
                              Exec::parallel);
       },
       [=](Exec exec) {
         verify_family(family_spec, family_box, family_box, family_box, exec);
       }});
  cases.push_back(
      {"two-variable quad2 " + std::to_string(fe_box) + "^2", fe_box * fe_box,
       [=] {
         return verify_two_var_fe(FEKind::quad2, fe_seq, fe_box, fe_box, Exec::serial) ==
                verify_two_var_fe(FEKind::quad2, fe_seq, fe_box, fe_box, Exec::parallel);
       },
       [=](Exec exec) { verify_two_var_fe(FEKind::quad2, fe_seq, fe_box, fe_box, exec); }});
  cases.push_back(
      {"certify-trivial " + std::to_string(trials) + " trials", trials,
       [=] {
         const CertifySummary a = certify_trivial(certify_params, Exec::serial);
         const CertifySummary b = certify_trivial(certify_params, Exec::parallel);
         return a.consistent == b.consistent && a.inconsistent == b.inconsistent &&
                a.counterexamples == b.counterexamples;
       },
       [=](Exec exec) { certify_trivial(certify_params, exec); }});

  std::printf("threads: %d\n\n", omp_get_max_threads());
  std::printf("%-32s %10s %12s %12s %9s %7s\n", "kernel", "cells", "serial [s]",
              "parallel [s]", "speedup", "match");

  bool all_match = true;
  for (const Case& c : cases) {
    const double serial = time_once(c.run, Exec::serial);
    const double parallel = time_once(c.run, Exec::parallel);
    const bool match = c.equal();
    all_match = all_match && match;
    std::printf("%-32s %10ld %12.4f %12.4f %8.2fx %7s\n", c.name.c_str(), c.cells, serial,
                parallel, parallel > 0 ? serial / parallel : 0.0, match ? "yes" : "NO");
  }

  if (!all_match) {
    std::fprintf(stderr, "\nserial and parallel reports disagree\n");
    return 1;
  }
  return 0;
}
