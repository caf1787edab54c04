#include "cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <thread>

#include <mpfr.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "stieltjes/bell.hpp"
#include "stieltjes/errors.hpp"
#include "stieltjes/gamma.hpp"
#include "stieltjes/hasse.hpp"

namespace stieltjes::cli {

using json = nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = "0.1.0";
constexpr int kResidualDigits = 6;

struct Common {
  std::optional<long> prec;
  std::optional<double> tol;
  std::string id;
  std::string family;
  std::string format = "text";
  int jobs = 1;
  std::string out;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void add_common(CLI::App* app, Common& c, bool filters, const std::string& default_format) {
  c.format = default_format;
  app->add_option("--prec", c.prec, "working precision in bits (>= 64)");
  app->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app->add_option("--out", c.out, "write output to this file");
  if (filters) {
    app->add_option("--tol", c.tol, "override every case tolerance")->check(CLI::PositiveNumber);
    app->add_option("--id", c.id, "case id, or id prefix up to an underscore");
    app->add_option("--family", c.family, "case family")
        ->check(CLI::IsMember({"rigorous", "section2"}));
    app->add_option("--jobs", c.jobs, "cases evaluated in parallel; 0 means all cores")
        ->check(CLI::NonNegativeNumber);
  }
}

Bits resolve_precision(const Common& c) {
  long p = 256;
  if (c.prec) {
    p = *c.prec;
  } else if (const char* env = std::getenv("STIELTJES_PREC"); env && *env) {
    char* end = nullptr;
    p = std::strtol(env, &end, 10);
    if (*end != '\0') throw UsageError("STIELTJES_PREC is not an integer: " + std::string(env));
  }
  if (p < kMinPrecision.value) throw UsageError("precision must be at least 64 bits");
  return Bits{p};
}

int resolve_jobs(int jobs) {
  if (jobs > 0) return jobs;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

std::vector<IdentityCase> filter(const std::vector<IdentityCase>& all, const Common& c) {
  std::optional<std::string> id;
  std::optional<Family> fam;
  if (!c.id.empty()) id = c.id;
  if (!c.family.empty()) fam = c.family == "rigorous" ? Family::Rigorous : Family::Section2Audit;
  std::vector<IdentityCase> sel = select_cases(all, id, fam);
  if (sel.empty() && id) throw UsageError("unknown case id: " + *id);
  if (sel.empty()) throw UsageError("filter matches no case");
  return sel;
}

// Sends `text` to the file named by `path`, or to `out` when path is empty.
int emit(const std::string& text, const std::string& path, std::ostream& out, std::ostream& err) {
  if (path.empty()) {
    out << text;
    out.flush();
    return out ? kOk : kIo;
  }
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) {
    err << "error: cannot open " << path << " for writing\n";
    return kIo;
  }
  f << text;
  f.close();
  if (!f) {
    err << "error: write to " << path << " failed\n";
    return kIo;
  }
  return kOk;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

std::string tol_string(double t) {
  std::ostringstream os;
  os << t;
  return os.str();
}

std::string params_string(const std::vector<std::pair<std::string, std::string>>& ps) {
  std::string s;
  for (const auto& [k, v] : ps) {
    if (!s.empty()) s += ";";
    s += k + "=" + v;
  }
  return s;
}

json case_json(const AuditReport& r, int digits) {
  json j;
  j["id"] = r.id;
  j["family"] = to_string(r.family);
  json params = json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = params;
  j["relation"] = r.relation == Relation::Positive ? "lhs > 0" : "lhs = rhs";
  j["lhs"] = decimal(r.lhs, digits);
  j["rhs"] = decimal(r.rhs, digits);
  j["lhs_error"] = r.lhs_error.to_string(kResidualDigits);
  j["rhs_error"] = r.rhs_error.to_string(kResidualDigits);
  j["abs_residual"] = r.abs_residual.to_string(kResidualDigits);
  j["rel_residual"] = r.rel_residual.to_string(kResidualDigits);
  j["tolerance"] = tol_string(r.tolerance);
  j["verdict"] = to_string(r.verdict);
  j["anchor"] = r.anchor;
  if (!r.note.empty()) j["note"] = r.note;
  j["work"] = {{"lhs", r.lhs_work}, {"rhs", r.rhs_work}};
  if (r.verdict == Verdict::Error) j["error"] = r.error;
  return j;
}

std::string render_reports(const std::vector<AuditReport>& reps, const std::string& format,
                           Bits prec) {
  const int digits = value_digits(prec);
  std::ostringstream os;
  if (format == "json") {
    json arr = json::array();
    for (const auto& r : reps) arr.push_back(case_json(r, digits));
    json doc;
    doc["precision"] = prec.value;
    doc["digits"] = digits;
    doc["cases"] = arr;
    os << doc.dump(2) << "\n";
  } else if (format == "csv") {
    os << "id,family,verdict,lhs,rhs,abs_residual,rel_residual,tolerance,params,anchor\n";
    for (const auto& r : reps)
      os << r.id << "," << to_string(r.family) << "," << to_string(r.verdict) << ","
         << decimal(r.lhs, digits) << "," << decimal(r.rhs, digits) << ","
         << r.abs_residual.to_string(kResidualDigits) << ","
         << r.rel_residual.to_string(kResidualDigits) << "," << tol_string(r.tolerance) << ","
         << csv_field(params_string(r.params)) << "," << csv_field(r.anchor) << "\n";
  } else {
    std::size_t pass = 0, fail = 0, dev = 0, errs = 0;
    for (const auto& r : reps) {
      os << r.id << " " << to_string(r.verdict);
      if (r.verdict == Verdict::Error) {
        os << " error=" << r.error << "\n";
        ++errs;
        continue;
      }
      os << " lhs=" << decimal(r.lhs, 20) << " rhs=" << decimal(r.rhs, 20)
         << " abs_residual=" << r.abs_residual.to_string(3) << " tol=" << tol_string(r.tolerance);
      if (!r.note.empty()) os << " [" << r.note << "]";
      os << "\n";
      switch (r.verdict) {
        case Verdict::Pass: ++pass; break;
        case Verdict::Fail: ++fail; break;
        default: ++dev; break;
      }
    }
    os << "# " << reps.size() << " cases: " << pass << " pass, " << fail << " fail, " << dev
       << " audit deviation, " << errs << " error\n";
  }
  return os.str();
}

json estimate_json(const Estimate& e, int digits) {
  return {{"value", decimal(e.value, digits)}, {"error", e.error.to_string(kResidualDigits)}};
}

json comparison_json(const FamilyComparison& f, int digits) {
  json j;
  j["quantity"] = f.quantity;
  j["quadrature"] = estimate_json(f.quadrature, digits);
  j["printed_prediction"] = decimal(f.printed_prediction, digits);
  j["alternative_prediction"] = decimal(f.alternative_prediction, digits);
  j["printed_residual"] = f.printed_residual.to_string(kResidualDigits);
  j["alternative_residual"] = f.alternative_residual.to_string(kResidualDigits);
  j["winner"] = f.winner;
  return j;
}

int cmd_report(const Common& c, const std::vector<IdentityCase>& all, std::ostream& out,
               std::ostream& err) {
  if (c.format != "json") throw UsageError("report supports --format json only");
  const Bits prec = resolve_precision(c);
  const int digits = value_digits(prec);
  std::vector<IdentityCase> sel = filter(all, c);
  ConstantPool pool(prec);

  json doc;
  json meta;
  meta["precision"] = prec.value;
  meta["digits"] = digits;
  meta["residual_digits"] = kResidualDigits;
  meta["versions"] = {{"stieltjes", kVersion}, {"mpfr", mpfr_get_version()}, {"gmp", gmp_version}};
  meta["hasse_n_max"] = pool.hasse_config().n_max;
  if (c.tol) meta["tolerance_override"] = tol_string(*c.tol);
  if (!c.id.empty()) meta["id_filter"] = c.id;
  if (!c.family.empty()) meta["family_filter"] = c.family;
  doc["meta"] = meta;

  try {
    json k;
    k["gamma"] = decimal(pool.euler_gamma(), digits);
    json gn = json::array();
    std::vector<XReal> gs;
    for (long n = 0; n <= 3; ++n) {
      Estimate e = pool.stieltjes(n, 1);
      gs.push_back(e.value);
      gn.push_back(estimate_json(e, digits));
    }
    k["gamma_n"] = gn;
    json en = json::array();
    for (const XReal& v : eta_sequence(3, gs)) en.push_back(decimal(v, digits));
    k["eta_n"] = en;
    json dn = json::array();
    for (const Estimate& e : compute_dn_table(6, pool).d) dn.push_back(estimate_json(e, digits));
    k["dn"] = dn;
    doc["constants"] = k;

    Adjudication a = adjudicate_stieltjes_families(pool);
    json adj;
    adj["first"] = comparison_json(a.first, digits);
    adj["second"] = comparison_json(a.second, digits);
    adj["gap"] = a.gap.to_string(kResidualDigits);
    adj["conclusive"] = a.conclusive;
    adj["second_integral_positive"] = a.second_integral_positive;
    doc["adjudication"] = adj;

    json signs = json::array();
    for (const SuiteEntry& e : sign_suites(pool))
      signs.push_back({{"name", e.name},
                       {"value", e.value.to_string(kResidualDigits + 4)},
                       {"expect", e.expectation},
                       {"pass", e.pass}});
    doc["sign_suite"] = signs;

    json limits = json::array();
    for (const LimitTrace& t : limit_suite(prec))
      limits.push_back({{"expression", t.name},
                        {"limit", decimal(t.limit, 12)},
                        {"final_deviation", t.deviations.back().to_string(kResidualDigits)},
                        {"monotone", t.monotone},
                        {"pass", t.pass}});
    doc["limit_suite"] = limits;
  } catch (const NonConvergence& e) {
    err << "error: " << e.what() << "\n";
    return kNonConvergence;
  }

  RunOptions opts{prec, resolve_jobs(c.jobs), c.tol};
  std::vector<AuditReport> reps = run_cases(sel, opts, pool);
  json arr = json::array();
  for (const auto& r : reps) arr.push_back(case_json(r, digits));
  doc["cases"] = arr;

  int io = emit(doc.dump(2) + "\n", c.out, out, err);
  if (io != kOk) return io;
  return exit_code_for(reps);
}

int cmd_verify(const Common& c, const std::vector<IdentityCase>& all, std::ostream& out,
               std::ostream& err) {
  const Bits prec = resolve_precision(c);
  std::vector<IdentityCase> sel = filter(all, c);
  RunOptions opts{prec, resolve_jobs(c.jobs), c.tol};
  std::vector<AuditReport> reps = run_cases(sel, opts);
  int io = emit(render_reports(reps, c.format, prec), c.out, out, err);
  if (io != kOk) return io;
  return exit_code_for(reps);
}

int cmd_list(const Common& c, const std::vector<IdentityCase>& all, std::ostream& out,
             std::ostream& err) {
  std::vector<IdentityCase> sel = filter(all, c);
  std::ostringstream os;
  if (c.format == "json") {
    json arr = json::array();
    for (const auto& k : sel) {
      json params = json::object();
      for (const auto& [n, v] : k.params) params[n] = v;
      arr.push_back({{"id", k.id},
                     {"family", to_string(k.family)},
                     {"params", params},
                     {"tolerance", tol_string(k.tolerance)},
                     {"anchor", k.anchor},
                     {"lhs_modules", module_names(k.lhs_deps)},
                     {"rhs_modules", module_names(k.rhs_deps)}});
    }
    os << arr.dump(2) << "\n";
  } else if (c.format == "csv") {
    os << "id,family,tolerance,params,anchor\n";
    for (const auto& k : sel)
      os << k.id << "," << to_string(k.family) << "," << tol_string(k.tolerance) << ","
         << csv_field(params_string(k.params)) << "," << csv_field(k.anchor) << "\n";
  } else {
    for (const auto& k : sel)
      os << k.id << "  " << to_string(k.family) << "  " << k.anchor << "\n";
  }
  return emit(os.str(), c.out, out, err);
}

struct ComputeArgs {
  std::string target;
  long n = 0;
  std::string u = "1";
  std::string x = "1";
};

int cmd_compute(const Common& c, const ComputeArgs& a, std::ostream& out, std::ostream& err) {
  const Bits prec = resolve_precision(c);
  const int digits = value_digits(prec);
  if (a.n < 0) throw UsageError("--n must be non-negative");
  auto parse = [&](const std::string& s, const char* what) {
    try {
      return XReal::parse(s, prec);
    } catch (const std::exception&) {
      throw UsageError(std::string("cannot parse --") + what + ": " + s);
    }
  };

  json j;
  j["target"] = a.target;
  j["precision"] = prec.value;
  j["digits"] = digits;
  std::string text;
  try {
    if (a.target == "gamma_n") {
      XReal u = parse(a.u, "u");
      if (!(u > 0)) throw UsageError("--u must be positive");
      StieltjesValue v = stieltjes_gamma(a.n, u);
      j["n"] = a.n;
      j["u"] = a.u;
      j["value"] = decimal(v.value, digits);
      j["error_estimate"] = v.error_estimate.to_string(kResidualDigits);
      j["terms_used"] = v.terms_used;
    } else if (a.target == "eta_n") {
      std::vector<XReal> gs;
      XReal err_sum(prec);
      long terms = 0;
      for (long k = 0; k <= a.n; ++k) {
        StieltjesValue v = stieltjes_gamma(k, XReal(1L, prec));
        gs.push_back(v.value);
        err_sum += v.error_estimate;
        terms += v.terms_used;
      }
      std::vector<XReal> eta = eta_sequence(a.n, gs);
      j["n"] = a.n;
      j["value"] = decimal(eta.back(), digits);
      j["error_estimate"] = err_sum.to_string(kResidualDigits);
      j["terms_used"] = terms;
    } else if (a.target == "bell") {
      if (a.n > 40) throw UsageError("--n must be at most 40 for bell");
      BellPoly y = bell_complete(static_cast<int>(a.n));
      j["n"] = a.n;
      j["value"] = y.to_string();
      j["terms"] = y.size();
      text = y.to_string();
    } else if (a.target == "gamma_deriv") {
      XReal x = parse(a.x, "x");
      if (!(x > 0)) throw UsageError("--x must be positive");
      j["n"] = a.n;
      j["x"] = a.x;
      j["value"] = decimal(gamma_derivative(a.n, x), digits);
      j["error_estimate"] = "0";
    } else {  // dn
      if (a.n > 6) throw UsageError("--n must be at most 6 for dn");
      ConstantPool pool(prec);
      Estimate e = pool.dn(a.n);
      j["n"] = a.n;
      j["value"] = decimal(e.value, digits);
      j["error_estimate"] = e.error.to_string(kResidualDigits);
      j["evaluations"] = e.work;
    }
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  } catch (const PrecisionTooLow& e) {
    throw UsageError(e.what());
  } catch (const NonConvergence& e) {
    err << "error: " << e.what() << "\n";
    return kNonConvergence;
  }

  std::ostringstream os;
  if (c.format == "json") {
    os << j.dump(2) << "\n";
  } else if (c.format == "csv") {
    std::string keys, vals;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!keys.empty()) { keys += ","; vals += ","; }
      keys += it.key();
      vals += csv_field(it->is_string() ? it->get<std::string>() : it->dump());
    }
    os << keys << "\n" << vals << "\n";
  } else if (!text.empty()) {
    os << text << "\n";
  } else {
    os << j["value"].get<std::string>() << "\n";
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it.key() == "value" || it.key() == "target") continue;
      os << "# " << it.key() << " = " << (it->is_string() ? it->get<std::string>() : it->dump())
         << "\n";
    }
  }
  return emit(os.str(), c.out, out, err);
}

}  // namespace

int exit_code_for(const std::vector<AuditReport>& reports) {
  bool rigorous_bad = false, nonconv = false;
  for (const auto& r : reports) {
    if (r.family == Family::Rigorous &&
        (r.verdict == Verdict::Fail || (r.verdict == Verdict::Error && !r.non_convergence)))
      rigorous_bad = true;
    if (r.verdict == Verdict::Error && r.non_convergence) nonconv = true;
  }
  if (rigorous_bad) return kRigorousFailure;
  if (nonconv) return kNonConvergence;
  return kOk;
}

int value_digits(Bits prec) {
  return static_cast<int>(std::floor(static_cast<double>(prec.value - 16) * std::log10(2.0)));
}

std::string decimal(const XReal& x, int digits) {
  if (digits < 1) digits = 1;
  if (x.is_zero()) return "0";
  if (!x.is_finite()) return x.to_string(digits);
  // decimal exponent of the leading digit, from the scientific rendering so
  // that rounding across a power of ten is handled by MPFR
  std::string sci = x.to_string(digits);
  long e10 = std::strtol(sci.c_str() + sci.find('e') + 1, nullptr, 10);
  if (e10 < -5 || e10 > 20) return sci;
  return x.to_fixed(static_cast<int>(digits - 1 - e10));
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
        const std::vector<IdentityCase>* cases) {
  const std::vector<IdentityCase>& all = cases ? *cases : registry();
  CLI::App app{"Stieltjes constants, Bell polynomials and identity audits"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  Common cc, vc, rc, lc;
  ComputeArgs ca;
  CLI::App* compute = app.add_subcommand("compute", "compute one constant");
  compute->add_option("target", ca.target, "gamma_n, eta_n, bell, gamma_deriv or dn")
      ->required()
      ->check(CLI::IsMember({"gamma_n", "eta_n", "bell", "gamma_deriv", "dn"}));
  compute->add_option("--n", ca.n, "index or order");
  compute->add_option("--u", ca.u, "shift u of gamma_n(u)");
  compute->add_option("--x", ca.x, "argument of Gamma^(n)(x)");
  add_common(compute, cc, false, "text");
  CLI::App* verify = app.add_subcommand("verify", "run identity cases");
  add_common(verify, vc, true, "text");
  CLI::App* report = app.add_subcommand("report", "full JSON report");
  add_common(report, rc, true, "json");
  CLI::App* list = app.add_subcommand("list", "list identity cases");
  add_common(list, lc, true, "text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // help and version exit with 0, everything else is a usage error
    return app.exit(e, out, err) == 0 ? kOk : kUsage;
  }

  try {
    if (*compute) return cmd_compute(cc, ca, out, err);
    if (*verify) return cmd_verify(vc, all, out, err);
    if (*report) return cmd_report(rc, all, out, err);
    return cmd_list(lc, all, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace stieltjes::cli
