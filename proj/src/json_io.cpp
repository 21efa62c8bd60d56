#include "qadd/json_io.hpp"

namespace qadd {

using nlohmann::json;

namespace {

json to_json(const Decomposition& d) { return json{{"m", d.m}, {"n", d.n}, {"k", d.k}}; }

}  // namespace

json to_json(const VerificationReport& report) {
  json failures = json::array();
  for (const auto& f : report.failures)
    failures.push_back(
        {{"m", f.m}, {"n", f.n}, {"k", f.k}, {"residual", f.residual.to_string()}});
  return json{
      {"passed", report.passed()},
      {"range", {{"m", report.max_m}, {"n", report.max_n}, {"k", report.max_k}}},
      {"failures", std::move(failures)},
  };
}

std::string_view trivial_match_name(TrivialMatch match) {
  switch (match) {
    case TrivialMatch::zero: return "zero";
    case TrivialMatch::q_integer: return "q-integer";
    case TrivialMatch::none: return "none";
  }
  return "none";
}

json to_json(const ConsistencyReport& report) {
  json values = json::array();
  for (const auto& value : report.sequence.values) values.push_back(value.to_string());
  json violations = json::array();
  for (const auto& v : report.violations)
    violations.push_back({{"total", v.total},
                          {"reference", to_json(v.reference)},
                          {"conflicting", to_json(v.conflicting)},
                          {"residual", v.residual.to_string()}});
  return json{
      {"seed", {{"f1", report.f1.to_string()}, {"f2", report.f2.to_string()}}},
      {"horizon", report.horizon},
      {"consistent", report.consistent()},
      {"consistent_up_to", report.sequence.consistent_up_to},
      {"trivial_match", trivial_match_name(report.trivial_match)},
      {"values", std::move(values)},
      {"violations", std::move(violations)},
  };
}

json to_json(const CertifySummary& summary) {
  json counterexamples = json::array();
  for (const auto& [f1, f2] : summary.counterexamples)
    counterexamples.push_back({{"f1", f1.to_string()}, {"f2", f2.to_string()}});
  return json{
      {"params",
       {{"rng_seed", summary.params.rng_seed},
        {"trials", summary.params.trials},
        {"horizon", summary.params.horizon},
        {"max_degree", summary.params.max_degree},
        {"coeff_bound", summary.params.coeff_bound}}},
      {"consistent", summary.consistent},
      {"inconsistent", summary.inconsistent},
      {"counterexamples", std::move(counterexamples)},
  };
}

}  // namespace qadd
