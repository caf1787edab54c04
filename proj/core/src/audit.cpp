#include "stieltjes/audit.hpp"

#include <atomic>
#include <thread>

#include "stieltjes/bell.hpp"
#include "stieltjes/errors.hpp"
#include "stieltjes/gamma.hpp"
#include "stieltjes/hasse.hpp"
#include "stieltjes/kernels.hpp"
#include "stieltjes/polylog.hpp"
#include "stieltjes/series.hpp"

namespace stieltjes {

std::string to_string(Family f) {
  return f == Family::Rigorous ? "RIGOROUS" : "SECTION2_AUDIT";
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::AuditDeviation: return "AUDIT_DEVIATION";
    case Verdict::Error: return "ERROR";
  }
  return "ERROR";
}

AuditReport evaluate_case(const IdentityCase& c, EvalContext& ctx,
                          std::optional<double> tolerance_override) {
  const Bits p = ctx.prec;
  AuditReport rep;
  rep.id = c.id;
  rep.family = c.family;
  rep.relation = c.relation;
  rep.params = c.params;
  rep.anchor = c.anchor;
  rep.note = c.note;
  rep.tolerance = tolerance_override.value_or(c.tolerance);
  rep.lhs = rep.rhs = rep.lhs_error = rep.rhs_error = rep.abs_residual = rep.rel_residual = XReal(p);
  try {
    Estimate l = c.lhs(ctx);
    Estimate r = c.rhs(ctx);
    rep.lhs = l.value.rounded(p);
    rep.rhs = r.value.rounded(p);
    rep.lhs_error = l.error.rounded(p);
    rep.rhs_error = r.error.rounded(p);
    rep.lhs_work = l.work;
    rep.rhs_work = r.work;
  } catch (const NonConvergence& e) {
    rep.error = e.what();
    rep.non_convergence = true;
    return rep;
  } catch (const std::exception& e) {
    rep.error = e.what();
    return rep;
  }

  const XReal tol(rep.tolerance, p);
  bool pass = false;
  if (c.relation == Relation::Positive) {
    pass = rep.lhs > 0;
    rep.abs_residual = pass ? XReal(p) : abs(rep.lhs);
    rep.rel_residual = rep.abs_residual;
  } else {
    rep.abs_residual = abs(rep.lhs - rep.rhs);
    rep.rel_residual = rep.rhs.is_zero() ? rep.abs_residual : rep.abs_residual / abs(rep.rhs);
    pass = rep.abs_residual <= tol || (abs(rep.rhs) > 1 && rep.rel_residual <= tol);
  }
  if (pass)
    rep.verdict = Verdict::Pass;
  else
    rep.verdict = c.family == Family::Rigorous ? Verdict::Fail : Verdict::AuditDeviation;
  return rep;
}

std::vector<AuditReport> run_cases(const std::vector<IdentityCase>& cases, const RunOptions& opts,
                                   ConstantPool& pool) {
  std::vector<AuditReport> out(cases.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    EvalContext ctx{opts.prec, pool};
    for (std::size_t i = next++; i < cases.size(); i = next++)
      out[i] = evaluate_case(cases[i], ctx, opts.tolerance_override);
  };
  const std::size_t jobs =
      std::min<std::size_t>(static_cast<std::size_t>(std::max(1, opts.jobs)), cases.size());
  if (jobs <= 1) {
    worker();
    return out;
  }
  std::vector<std::thread> threads;
  for (std::size_t t = 0; t < jobs; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  return out;
}

std::vector<AuditReport> run_cases(const std::vector<IdentityCase>& cases, const RunOptions& opts) {
  ConstantPool pool(opts.prec);
  return run_cases(cases, opts, pool);
}

DnTable compute_dn_table(long n_max, ConstantPool& pool) {
  if (n_max < 0 || n_max > 6) throw DomainError("compute_dn_table: need 0 <= n_max <= 6");
  DnTable t;
  for (long n = 0; n <= n_max; ++n) t.d.push_back(pool.dn(n));
  return t;
}

XReal reconstruct_gamma_via_dn(long m, const DnTable& dn, ConstantPool& pool) {
  if (m < 0 || m > 3) throw DomainError("reconstruct_gamma_via_dn: need 0 <= m <= 3");
  if (dn.n_max() < m) throw DomainError("reconstruct_gamma_via_dn: d table too short");
  const Bits p = pool.precision();
  std::vector<XReal> args{-pool.euler_gamma()};
  for (long k = 2; k <= std::max(m, 1L); ++k)
    args.push_back(-pool.zeta(k) * XReal(factorial_exact(k - 1), p));
  std::vector<XReal> e = bell_sequence(static_cast<int>(m), args);
  XReal s(p);
  for (long k = 0; k <= m; ++k)
    s += XReal(binomial_exact(m, k), p) * dn[k].value * e[static_cast<std::size_t>(m - k)];
  return s;
}

namespace {

std::string decide(const XReal& printed_res, const XReal& alt_res, const XReal& tol) {
  bool printed_ok = printed_res <= tol, alt_ok = alt_res <= tol;
  if (alt_ok && !printed_ok) return "alternative";
  if (printed_ok && !alt_ok) return "printed";
  return "inconclusive";
}

}  // namespace

Adjudication adjudicate_stieltjes_families(ConstantPool& pool, double tolerance) {
  const Bits p = pool.precision();
  const XReal tol(tolerance, p);
  const XReal g = pool.euler_gamma();
  const XReal g1 = pool.stieltjes(1, 1).value, g2 = pool.stieltjes(2, 1).value;
  Adjudication a;

  FamilyComparison& f = a.first;
  f.quantity = "int_0^1 Omega(y) log|log y| dy";
  f.quadrature = pool.dn(1);
  f.quadrature.value = -f.quadrature.value;
  f.printed_prediction = -(g1 * 2 + g * g);
  f.alternative_prediction = -(g1 + g * g);
  f.printed_residual = abs(f.quadrature.value - f.printed_prediction);
  f.alternative_residual = abs(f.quadrature.value - f.alternative_prediction);
  f.winner = decide(f.printed_residual, f.alternative_residual, tol);
  a.gap = abs(f.printed_prediction - f.alternative_prediction);

  FamilyComparison& s = a.second;
  s.quantity = "int_0^1 Omega(y) log^2|log y| dy";
  s.quadrature = pool.dn(2);
  const XReal z2 = pool.zeta(2);
  s.printed_prediction = g2 * 3 + g * g1 * 4 - (z2 - g * g) * g;
  s.alternative_prediction = pool.gamma_derivative_at_1(2) * g -
                             pool.gamma_derivative_at_1(1) * g1 * 2 + g2;
  s.printed_residual = abs(s.quadrature.value - s.printed_prediction);
  s.alternative_residual = abs(s.quadrature.value - s.alternative_prediction);
  s.winner = decide(s.printed_residual, s.alternative_residual, tol);

  a.conclusive = f.quadrature.error < a.gap / 2 && f.winner != "inconclusive" &&
                 s.winner != "inconclusive";
  a.second_integral_positive = s.quadrature.value > 0;
  return a;
}

std::vector<SuiteEntry> sign_suites(ConstantPool& pool) {
  std::vector<SuiteEntry> out;
  for (long n = 0; n <= 4; ++n) {
    XReal d = pool.dn(n).value;
    out.push_back({"d_" + std::to_string(n), d, "> 0", d > 0});
  }
  for (long n = 0; n <= 10; ++n) {
    XReal v = pool.gamma_derivative_at_1(n);
    bool even = n % 2 == 0;
    out.push_back({"Gamma^(" + std::to_string(n) + ")(1)", v, even ? "> 0" : "< 0",
                   even ? v > 0 : v < 0});
  }
  std::vector<XReal> gs;
  for (long k = 0; k <= 3; ++k) gs.push_back(pool.stieltjes(k, 1).value);
  std::vector<XReal> eta = eta_sequence(3, gs);
  for (long n = 0; n <= 3; ++n) {
    const XReal& v = eta[static_cast<std::size_t>(n)];
    bool pos = n % 2 != 0;
    out.push_back({"eta_" + std::to_string(n), v, pos ? "> 0" : "< 0", pos ? v > 0 : v < 0});
  }
  XReal g = pool.euler_gamma();
  XReal c = gs[1] * 2 + g * g;
  out.push_back({"2 gamma_1 + gamma^2", c, "> 0", c > 0});
  return out;
}

std::vector<LimitTrace> limit_suite(Bits prec) {
  struct Expr {
    const char* name;
    int limit;  // 0, -1 for -gamma, +1 for +gamma
    std::function<XReal(const XReal& x, const XReal& c, const XReal& l)> f;
  };
  // x = 1 - c, l = -log x
  const std::vector<Expr> exprs = {
      {"log(1-x) + log(-log x)", 0,
       [](const XReal&, const XReal& c, const XReal& l) { return log(c) + log(l); }},
      {"x log log(1/x) - li(x)", -1,
       [](const XReal& x, const XReal& c, const XReal& l) { return x * log(l) - li_nielsen(x, c); }},
      {"-log(1-x) + li(x)", 1,
       [](const XReal& x, const XReal& c, const XReal&) { return li_nielsen(x, c) - log(c); }},
      {"x log log(1/x) - log(1-x)", 0,
       [](const XReal& x, const XReal& c, const XReal& l) { return x * log(l) - log(c); }},
      {"(x-1) li(x)", 0,
       [](const XReal& x, const XReal& c, const XReal&) { return -c * li_nielsen(x, c); }},
      {"(x-1) log(-log x)", 0,
       [](const XReal&, const XReal& c, const XReal& l) { return -c * log(l); }},
      {"log(1-x) - log(-log x)", 0,
       [](const XReal&, const XReal& c, const XReal& l) { return log(c) - log(l); }},
  };
  const XReal g = euler_gamma(prec);
  std::vector<LimitTrace> out;
  for (const Expr& e : exprs) {
    LimitTrace t;
    t.name = e.name;
    t.limit = e.limit == 0 ? XReal(prec) : (e.limit > 0 ? g : -g);
    for (long k = 4; k <= 16; ++k) {
      XReal c = ldexp(XReal(1L, prec), -k);
      XReal x = 1 - c;
      t.deviations.push_back(abs(e.f(x, c, neg_log(x, c)) - t.limit));
    }
    t.monotone = true;
    for (std::size_t i = 1; i < t.deviations.size(); ++i)
      if (!(t.deviations[i] < t.deviations[i - 1])) t.monotone = false;
    t.pass = t.monotone && t.deviations.back() < XReal(0.05, prec);
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace stieltjes
