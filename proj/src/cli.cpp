#include "qadd/cli.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "qadd/funceq.hpp"
#include "qadd/json_io.hpp"
#include "qadd/rules.hpp"
#include "qadd/zero_identity.hpp"

namespace qadd {
namespace {

enum class Format { text, json };

Format parse_format(const std::string& name) {
  return name == "json" ? Format::json : Format::text;
}

void emit(std::ostream& out, const nlohmann::json& j) { out << j.dump(2) << "\n"; }

/// Evaluates an expression that must not reference any index variable
/// (plain polynomial in q). UnboundVariable from evaluate() reports the
/// offender otherwise.
Poly eval_closed(const std::string& text) { return parse_expr(text).evaluate(Binding{}); }

Binding parse_bindings(const std::vector<std::string>& items,
                       std::map<char, long>& echoed) {
  Binding binding;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq != 1)
      throw DomainError("binding '" + item + "' must look like m=3");
    const auto var = var_from_name(item[0]);
    if (!var) throw DomainError("unknown index variable '" + std::string(1, item[0]) + "'");
    if (echoed.count(item[0]))
      throw DomainError("duplicate binding for '" + std::string(1, item[0]) + "'");
    const std::string digits = item.substr(2);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw DomainError("binding value in '" + item + "' must be a non-negative integer");
    long value = 0;
    try {
      value = std::stol(digits);
    } catch (const std::exception&) {
      throw DomainError("binding value in '" + item + "' is out of range");
    }
    binding.set(*var, value);
    echoed[item[0]] = value;
  }
  return binding;
}

void print_failures_text(std::ostream& out, const VerificationReport& report) {
  out << "result:   " << (report.passed() ? "pass" : "fail") << "\n";
  if (report.passed()) return;
  out << "failures: " << report.failures.size() << "\n";
  const std::size_t shown = std::min<std::size_t>(report.failures.size(), 10);
  for (std::size_t i = 0; i < shown; ++i) {
    const auto& f = report.failures[i];
    out << "  m=" << f.m << " n=" << f.n;
    if (report.max_k > 0) out << " k=" << f.k;
    out << "  residual: " << f.residual.to_string() << "\n";
  }
  if (report.failures.size() > shown)
    out << "  ... and " << report.failures.size() - shown << " more\n";
}

void print_range_text(std::ostream& out, const VerificationReport& report) {
  out << "range:    m<=" << report.max_m << " n<=" << report.max_n;
  if (report.max_k > 0) out << " k<=" << report.max_k;
  out << "\n";
}

// ---------------------------------------------------------------------------
// eval

struct EvalOpts {
  std::string expr;
  std::vector<std::string> bindings;
  std::string format = "text";
};

int cmd_eval(const EvalOpts& opts, std::ostream& out) {
  const SeqExpr expr = parse_expr(opts.expr);
  std::map<char, long> echoed;
  const Binding binding = parse_bindings(opts.bindings, echoed);
  const Poly value = expr.evaluate(binding);
  if (parse_format(opts.format) == Format::json) {
    nlohmann::json bound = nlohmann::json::object();
    for (const auto& [name, v] : echoed) bound[std::string(1, name)] = v;
    emit(out, {{"expr", expr.render()}, {"bindings", std::move(bound)},
               {"value", value.to_string()}});
    return 0;
  }
  out << "expr:  " << expr.render() << "\n";
  if (!echoed.empty()) {
    out << "bind: ";
    for (const auto& [name, v] : echoed) out << " " << name << "=" << v;
    out << "\n";
  }
  out << "value: " << value.to_string() << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// verify-rule

struct VerifyRuleOpts {
  std::string rule;
  std::string s, t, u, v;
  long max_m = 15, max_n = 15, max_k = 15;
  long max = 0;
  bool serial = false;
  std::string format = "text";
};

int cmd_verify_rule(const VerifyRuleOpts& opts, std::ostream& out) {
  VerifyRuleOpts o = opts;
  if (o.max > 0) o.max_m = o.max_n = o.max_k = o.max;
  const Exec exec = o.serial ? Exec::serial : Exec::parallel;
  const bool custom = !(o.s.empty() && o.t.empty() && o.u.empty() && o.v.empty());
  if (custom && !o.rule.empty())
    throw DomainError("--rule and a custom spec (--s/--t/--u/--v) are mutually exclusive");
  if (custom && (o.s.empty() || o.t.empty() || o.u.empty() || o.v.empty()))
    throw DomainError("a custom spec needs all four of --s --t --u --v");
  if (!custom && o.rule.empty())
    throw DomainError("pick a rule with --rule or give a custom spec via --s --t --u --v");

  VerificationReport report;
  nlohmann::json extra;
  std::string title;
  if (custom) {
    const RuleSpec spec{parse_expr(o.s), parse_expr(o.t), parse_expr(o.u), parse_expr(o.v)};
    report = verify_rule(spec, o.max_m, o.max_n, o.max_k, exec);
    extra["spec"] = {{"s", spec.s.render()},
                     {"t", spec.t.render()},
                     {"u", spec.u.render()},
                     {"v", spec.v.render()}};
    title = "verify-rule (custom spec)";
  } else {
    const auto rule = builtin_rule_from_name(o.rule);
    if (!rule)
      throw DomainError("unknown rule '" + o.rule +
                        "' (expected linear, quad1, quad2 or mixed3)");
    report = verify_builtin_rule(*rule, o.max_m, o.max_n, o.max_k, exec);
    extra["rule"] = o.rule;
    title = "verify-rule " + o.rule;
  }

  if (parse_format(o.format) == Format::json) {
    nlohmann::json j = to_json(report);
    j.update(extra);
    emit(out, j);
  } else {
    out << title << "\n";
    print_range_text(out, report);
    print_failures_text(out, report);
  }
  return report.passed() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// derive

struct DeriveOpts {
  std::string a;
  long max_m = 10;
  std::string format = "text";
};

int cmd_derive(const DeriveOpts& opts, std::ostream& out) {
  if (opts.max_m < 1) throw DomainError("--max-m must be >= 1");
  const SeqExpr a = parse_expr(opts.a);

  bool residual_zero = true;
  std::optional<std::pair<long, Poly>> witness;  // first m with nonzero residual at (2,2)
  for (long m = 1; m <= opts.max_m; ++m) {
    const DerivedCoefficients derived = derive_from_constant_s(a, m);
    if (derived.a != 1) {
      residual_zero = false;
      if (!witness) witness.emplace(m, derived.residual(2, 2));
    }
  }

  // Symbolic forced coefficients: t = u = [m+1] - a [m], v = q^(m+1) - u.
  // When the residual vanishes (a = 1) these collapse to q^m and q^m (q-1).
  const IndexForm m_var = IndexForm::variable(Var::m);
  const IndexForm m_plus_1 = IndexForm::variable(Var::m).add_constant(1);
  SeqExpr t_sym = SeqExpr::sub(SeqExpr::q_int(m_plus_1), SeqExpr::mul(a, SeqExpr::q_int(m_var)));
  SeqExpr v_sym = SeqExpr::sub(SeqExpr::q_pow(m_plus_1), t_sym);
  if (residual_zero) {
    t_sym = SeqExpr::q_pow(m_var);
    v_sym = SeqExpr::mul(SeqExpr::q_pow(m_var),
                         SeqExpr::sub(SeqExpr::q(), SeqExpr::constant(1)));
  }

  if (parse_format(opts.format) == Format::json) {
    nlohmann::json j{{"a", a.render()},
                     {"checked_m", opts.max_m},
                     {"residual_zero", residual_zero},
                     {"t", t_sym.render()},
                     {"u", t_sym.render()},
                     {"v", v_sym.render()},
                     {"witness", nullptr}};
    if (witness)
      j["witness"] = {{"m", witness->first},
                      {"n", 2},
                      {"k", 2},
                      {"residual", witness->second.to_string()}};
    emit(out, j);
  } else {
    out << "derive: a = " << a.render() << "\n";
    out << "t = u = " << t_sym.render() << "\n";
    out << "v = " << v_sym.render() << "\n";
    if (residual_zero) {
      out << "residual: 0 for all m <= " << opts.max_m << "\n";
    } else {
      out << "residual: nonzero, witness m=" << witness->first
          << " n=2 k=2: " << witness->second.to_string() << "\n";
    }
  }
  return residual_zero ? 0 : 1;
}

// ---------------------------------------------------------------------------
// obstruction

struct ObstructionOpts {
  std::string s;
  long m = 1;
  long bound = 4;
  std::string format = "text";
};

int cmd_obstruction(const ObstructionOpts& opts, std::ostream& out) {
  const SeqExpr s = parse_expr(opts.s);
  const auto witness = degree_obstruction(s, opts.m, opts.bound);

  if (parse_format(opts.format) == Format::json) {
    nlohmann::json j{{"s", s.render()},
                     {"m", opts.m},
                     {"bound", opts.bound},
                     {"status", witness ? "fail" : "pass"},
                     {"witness", nullptr}};
    if (witness)
      j["witness"] = {{"n", witness->n},
                      {"k", witness->k},
                      {"lhs", witness->lhs.to_string()},
                      {"rhs", witness->rhs.to_string()},
                      {"residual", (witness->lhs - witness->rhs).to_string()}};
    emit(out, j);
  } else {
    out << "obstruction: s = " << s.render() << ", m = " << opts.m
        << ", bound = " << opts.bound << "\n";
    if (witness) {
      out << "witness:  n=" << witness->n << " k=" << witness->k << "\n";
      out << "lhs:      " << witness->lhs.to_string() << "\n";
      out << "rhs:      " << witness->rhs.to_string() << "\n";
      out << "residual: " << (witness->lhs - witness->rhs).to_string() << "\n";
    } else {
      out << "no witness within bound\n";
    }
  }
  return witness ? 1 : 0;
}

// ---------------------------------------------------------------------------
// zero-identity

struct ZeroIdentityOpts {
  std::string r1k, rn1;
  std::string s0 = "0", t0 = "0";
  std::string u0 = "1", v0 = "1";
  long max = 10;
  bool serial = false;
  std::string format = "text";
};

int cmd_zero_identity(const ZeroIdentityOpts& opts, std::ostream& out) {
  const ZeroIdentitySpec spec{parse_expr(opts.r1k), parse_expr(opts.rn1),
                              eval_closed(opts.s0), eval_closed(opts.t0),
                              parse_rational(opts.u0), parse_rational(opts.v0)};
  const Exec exec = opts.serial ? Exec::serial : Exec::parallel;
  const VerificationReport report = verify_family(spec, opts.max, opts.max, opts.max, exec);

  if (parse_format(opts.format) == Format::json) {
    nlohmann::json j = to_json(report);
    j["spec"] = {{"r1k", spec.r1k.render()}, {"rn1", spec.rn1.render()},
                 {"s0", spec.s0.to_string()}, {"t0", spec.t0.to_string()},
                 {"u0", to_string(spec.u0)},  {"v0", to_string(spec.v0)}};
    emit(out, j);
  } else {
    out << "zero-identity family\n";
    out << "r1k:      " << spec.r1k.render() << "\n";
    out << "rn1:      " << spec.rn1.render() << "\n";
    print_range_text(out, report);
    print_failures_text(out, report);
  }
  return report.passed() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// solve-fe

struct SolveFeOpts {
  std::string eq;
  std::string f1;
  std::string f2;
  long n = 1;
  std::string format = "text";
};

int cmd_solve_fe(const SolveFeOpts& opts, std::ostream& out) {
  FEKind kind = FEKind::linear;
  if (opts.eq == "quad1") kind = FEKind::quad1;
  else if (opts.eq == "quad2") kind = FEKind::quad2;
  else if (opts.eq != "linear")
    throw DomainError("unknown equation '" + opts.eq + "' (expected linear, quad1 or quad2)");

  auto solve = [kind](const Poly& f1, long n) {
    switch (kind) {
      case FEKind::linear: return solve_linear(f1, n);
      case FEKind::quad1: return solve_quad1(f1, n);
      case FEKind::quad2: return solve_quad2(f1, n);
    }
    throw DomainError("unknown equation kind");
  };

  const Poly f1 = eval_closed(opts.f1);
  const Poly f_n = solve(f1, opts.n);

  bool f2_consistent = true;
  std::optional<Poly> f2_given, f2_expected;
  if (!opts.f2.empty()) {
    f2_given = eval_closed(opts.f2);
    f2_expected = solve(f1, 2);
    f2_consistent = *f2_given == *f2_expected;
  }

  if (parse_format(opts.format) == Format::json) {
    nlohmann::json j{{"eq", opts.eq},
                     {"f1", f1.to_string()},
                     {"n", opts.n},
                     {"f_n", f_n.to_string()}};
    if (f2_given) {
      j["f2_given"] = f2_given->to_string();
      j["f2_expected"] = f2_expected->to_string();
      j["f2_consistent"] = f2_consistent;
    }
    emit(out, j);
  } else {
    out << "solve-fe " << opts.eq << "\n";
    out << "f1:  " << f1.to_string() << "\n";
    out << "f_" << opts.n << ": " << f_n.to_string() << "\n";
    if (f2_given) {
      if (f2_consistent)
        out << "f2 check: consistent\n";
      else
        out << "f2 check: mismatch (expected " << f2_expected->to_string() << ", got "
            << f2_given->to_string() << ")\n";
    }
  }
  return f2_consistent ? 0 : 1;
}

// ---------------------------------------------------------------------------
// extend

struct ExtendOpts {
  std::string f1, f2;
  long horizon = 8;
  std::string format = "text";
};

int cmd_extend(const ExtendOpts& opts, std::ostream& out) {
  const Poly f1 = eval_closed(opts.f1);
  const Poly f2 = eval_closed(opts.f2);
  const ConsistencyReport report = extend_sequence(f1, f2, opts.horizon);

  if (parse_format(opts.format) == Format::json) {
    emit(out, to_json(report));
  } else {
    out << "extend\n";
    out << "seed:    f1 = " << f1.to_string() << ", f2 = " << f2.to_string() << "\n";
    out << "horizon: " << opts.horizon << "\n";
    out << "trivial: " << trivial_match_name(report.trivial_match) << "\n";
    for (long i = 1; i <= report.sequence.length(); ++i)
      out << "f_" << i << " = " << report.sequence.at(i).to_string() << "\n";
    if (report.consistent()) {
      out << "consistent through N=" << opts.horizon << "\n";
    } else {
      for (const auto& v : report.violations)
        out << "violation at N=" << v.total << ": (" << v.conflicting.m << ","
            << v.conflicting.n << "," << v.conflicting.k << ") vs (" << v.reference.m << ","
            << v.reference.n << "," << v.reference.k
            << "), residual = " << v.residual.to_string() << "\n";
    }
  }
  return report.consistent() ? 0 : 1;
}

// ---------------------------------------------------------------------------
// certify-trivial

struct CertifyOpts {
  std::uint64_t seed = 0;
  long trials = 200;
  long horizon = 10;
  long max_degree = 4;
  long coeff_bound = 5;
  bool serial = false;
  std::string format = "text";
};

int cmd_certify(const CertifyOpts& opts, std::ostream& out) {
  const CertifyParams params{opts.horizon, opts.trials, opts.max_degree, opts.coeff_bound,
                             opts.seed};
  const Exec exec = opts.serial ? Exec::serial : Exec::parallel;
  const CertifySummary summary = certify_trivial(params, exec);

  if (parse_format(opts.format) == Format::json) {
    emit(out, to_json(summary));
  } else {
    out << "certify-trivial\n";
    out << "seed:        " << params.rng_seed << "\n";
    out << "trials:      " << params.trials << "\n";
    out << "horizon:     " << params.horizon << "\n";
    out << "max degree:  " << params.max_degree << "\n";
    out << "coeff bound: " << params.coeff_bound << "\n";
    out << "inconsistent seeds: " << summary.inconsistent << "\n";
    out << "consistent non-trivial seeds: " << summary.consistent << "\n";
    for (const auto& [f1, f2] : summary.counterexamples)
      out << "  counterexample: f1 = " << f1.to_string() << ", f2 = " << f2.to_string()
          << "\n";
  }
  return summary.counterexamples.empty() ? 0 : 1;
}

void add_format_option(CLI::App* sub, std::string& target) {
  sub->add_option("--format", target, "output format")
      ->check(CLI::IsMember({"text", "json"}));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact q-integer addition rules: verification and search"};
  app.name("qadd");
  app.require_subcommand(1);

  EvalOpts eval_opts;
  auto* eval = app.add_subcommand("eval", "evaluate an expression at integer indices");
  eval->add_option("expr", eval_opts.expr, "sequence expression")->required();
  eval->add_option("bindings", eval_opts.bindings, "index bindings like m=3");
  add_format_option(eval, eval_opts.format);

  VerifyRuleOpts vr_opts;
  auto* vr = app.add_subcommand("verify-rule", "sweep an addition rule over an index box");
  vr->add_option("--rule", vr_opts.rule, "builtin rule: linear, quad1, quad2, mixed3");
  vr->add_option("--s", vr_opts.s, "custom spec: coefficient of [m]");
  vr->add_option("--t", vr_opts.t, "custom spec: coefficient of [n]");
  vr->add_option("--u", vr_opts.u, "custom spec: coefficient of [k]");
  vr->add_option("--v", vr_opts.v, "custom spec: coefficient of [n][k]");
  vr->add_option("--max-m", vr_opts.max_m, "m bound");
  vr->add_option("--max-n", vr_opts.max_n, "n bound");
  vr->add_option("--max-k", vr_opts.max_k, "k bound (three-argument rules)");
  vr->add_option("--max", vr_opts.max, "set all bounds at once");
  vr->add_flag("--serial", vr_opts.serial, "use the serial reference sweep");
  add_format_option(vr, vr_opts.format);

  DeriveOpts derive_opts;
  auto* derive = app.add_subcommand(
      "derive", "forced coefficients for a constant-valued s sequence");
  derive->add_option("--a", derive_opts.a, "constant-valued expression for s")->required();
  derive->add_option("--max-m", derive_opts.max_m, "indices m to derive");
  add_format_option(derive, derive_opts.format);

  ObstructionOpts obs_opts;
  auto* obs = app.add_subcommand(
      "obstruction", "witness that no rule exists when deg s > 2");
  obs->add_option("--s", obs_opts.s, "expression for s")->required();
  obs->add_option("--m", obs_opts.m, "index m")->required();
  obs->add_option("--bound", obs_opts.bound, "search bound for n and k");
  add_format_option(obs, obs_opts.format);

  ZeroIdentityOpts zi_opts;
  auto* zi = app.add_subcommand("zero-identity",
                                "build and verify a quadratic zero-identity family");
  zi->add_option("--r1k", zi_opts.r1k, "boundary sequence r_{1,k} (in k)")->required();
  zi->add_option("--rn1", zi_opts.rn1, "boundary sequence r_{n,1} (in n)")->required();
  zi->add_option("--s0", zi_opts.s0, "initial polynomial s(q)");
  zi->add_option("--t0", zi_opts.t0, "initial polynomial t(q)");
  zi->add_option("--u0", zi_opts.u0, "nonzero rational constant");
  zi->add_option("--v0", zi_opts.v0, "nonzero rational constant");
  zi->add_option("--max", zi_opts.max, "verification box bound");
  zi->add_flag("--serial", zi_opts.serial, "use the serial reference sweep");
  add_format_option(zi, zi_opts.format);

  SolveFeOpts fe_opts;
  auto* fe = app.add_subcommand("solve-fe", "closed-form solution of a two-variable equation");
  fe->add_option("--eq", fe_opts.eq, "equation: linear, quad1, quad2")->required();
  fe->add_option("--f1", fe_opts.f1, "initial value f_1 (polynomial in q)")->required();
  fe->add_option("--n", fe_opts.n, "index to solve for")->required();
  fe->add_option("--f2", fe_opts.f2, "optional f_2 to cross-check");
  add_format_option(fe, fe_opts.format);

  ExtendOpts ext_opts;
  auto* ext = app.add_subcommand("extend",
                                 "grow a sequence from (f1, f2) under the three-argument step");
  ext->add_option("--f1", ext_opts.f1, "seed value f_1")->required();
  ext->add_option("--f2", ext_opts.f2, "seed value f_2")->required();
  ext->add_option("--horizon", ext_opts.horizon, "largest total to reach");
  add_format_option(ext, ext_opts.format);

  CertifyOpts cert_opts;
  auto* cert = app.add_subcommand(
      "certify-trivial", "random search for consistent non-trivial seeds");
  cert->add_option("--seed", cert_opts.seed, "RNG seed")->required();
  cert->add_option("--trials", cert_opts.trials, "number of seeds to try");
  cert->add_option("--horizon", cert_opts.horizon, "extension horizon per trial");
  cert->add_option("--max-degree", cert_opts.max_degree, "degree bound of sampled seeds");
  cert->add_option("--coeff-bound", cert_opts.coeff_bound, "coefficient bound of samples");
  cert->add_flag("--serial", cert_opts.serial, "run trials on one thread");
  add_format_option(cert, cert_opts.format);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("qadd");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (app.got_subcommand(eval)) return cmd_eval(eval_opts, out);
    if (app.got_subcommand(vr)) return cmd_verify_rule(vr_opts, out);
    if (app.got_subcommand(derive)) return cmd_derive(derive_opts, out);
    if (app.got_subcommand(obs)) return cmd_obstruction(obs_opts, out);
    if (app.got_subcommand(zi)) return cmd_zero_identity(zi_opts, out);
    if (app.got_subcommand(fe)) return cmd_solve_fe(fe_opts, out);
    if (app.got_subcommand(ext)) return cmd_extend(ext_opts, out);
    if (app.got_subcommand(cert)) return cmd_certify(cert_opts, out);
    err << "qadd: no subcommand selected\n";
    return 2;
  } catch (const CLI::ParseError& e) {
    // --help and friends exit 0 through here; real parse errors become
    // usage errors.
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    err << "qadd: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace qadd
