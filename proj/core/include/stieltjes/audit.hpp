#ifndef STIELTJES_AUDIT_HPP
#define STIELTJES_AUDIT_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "stieltjes/constants.hpp"
#include "stieltjes/xreal.hpp"

namespace stieltjes {

/// Library modules, as a bit set. Used to declare what each side of a case
/// calls into.
enum class Module : unsigned {
  PrecisionCore = 1u << 0,
  Constants = 1u << 1,
  Bell = 1u << 2,
  ZetaGamma = 1u << 3,
  Hasse = 1u << 4,
  Quadrature = 1u << 5,
  Polylog = 1u << 6,
  Coppo = 1u << 7,
};

struct ModuleSet {
  unsigned bits = 0;
  ModuleSet() = default;
  ModuleSet(std::initializer_list<Module> ms) {
    for (Module m : ms) bits |= static_cast<unsigned>(m);
  }
  bool contains(Module m) const { return (bits & static_cast<unsigned>(m)) != 0; }
  friend ModuleSet operator&(ModuleSet a, ModuleSet b) { ModuleSet r; r.bits = a.bits & b.bits; return r; }
  friend ModuleSet operator|(ModuleSet a, ModuleSet b) { ModuleSet r; r.bits = a.bits | b.bits; return r; }
  friend bool operator==(ModuleSet, ModuleSet) = default;
};

/// The modules reachable from `direct` through library-internal calls.
ModuleSet module_closure(ModuleSet direct);
std::string module_names(ModuleSet s);

enum class Family { Rigorous, Section2Audit };
enum class Relation {
  Equal,     // |lhs - rhs| within tolerance
  Positive,  // lhs > 0; rhs is ignored
};
enum class Verdict { Pass, Fail, AuditDeviation, Error };

std::string to_string(Family f);
std::string to_string(Verdict v);

struct EvalContext {
  Bits prec;
  ConstantPool& pool;
};

using SideFn = std::function<Estimate(EvalContext&)>;

struct IdentityCase {
  std::string id;
  std::vector<std::pair<std::string, std::string>> params;
  SideFn lhs;
  SideFn rhs;
  ModuleSet lhs_deps;
  ModuleSet rhs_deps;
  Family family = Family::Rigorous;
  Relation relation = Relation::Equal;
  double tolerance = 1e-10;
  std::string anchor;
  /// Free text carried into reports.
  std::string note;
};

struct AuditReport {
  std::string id;
  Family family = Family::Rigorous;
  Relation relation = Relation::Equal;
  std::vector<std::pair<std::string, std::string>> params;
  XReal lhs;
  XReal rhs;
  XReal lhs_error;
  XReal rhs_error;
  XReal abs_residual;
  XReal rel_residual;
  double tolerance = 0;
  Verdict verdict = Verdict::Error;
  std::string anchor;
  std::string note;
  long lhs_work = 0;
  long rhs_work = 0;
  /// Set for Verdict::Error.
  std::string error;
  bool non_convergence = false;
};

/// The built-in registry, in report order.
const std::vector<IdentityCase>& registry();

/// The unit-interval binomial case int_0^1 y^(u-1) (1-y)^n / log^r y dy
/// against its finite log sum. The integral diverges at y = 1 when n < r.
IdentityCase binomial_log_power_case(long r, const mpq_class& u, long n);

/// Problems found in a registry: duplicate ids, missing anchors, sides whose
/// module closures overlap beyond PrecisionCore and Constants. Empty if sound.
std::vector<std::string> validate_registry(const std::vector<IdentityCase>& cases);

/// Cases whose id equals `id` or starts with `id` followed by '_'.
std::vector<IdentityCase> select_cases(const std::vector<IdentityCase>& cases,
                                       const std::optional<std::string>& id,
                                       const std::optional<Family>& family);

/// Evaluates both sides and grades the residual. Evaluator exceptions become
/// Verdict::Error.
AuditReport evaluate_case(const IdentityCase& c, EvalContext& ctx,
                          std::optional<double> tolerance_override = std::nullopt);

struct RunOptions {
  Bits prec = kDefaultPrecision;
  int jobs = 1;
  std::optional<double> tolerance_override;
};

/// Evaluates all cases, up to `jobs` at a time, sharing one ConstantPool.
/// Reports come back in input order.
std::vector<AuditReport> run_cases(const std::vector<IdentityCase>& cases, const RunOptions& opts);
std::vector<AuditReport> run_cases(const std::vector<IdentityCase>& cases, const RunOptions& opts,
                                   ConstantPool& pool);

struct DnTable {
  std::vector<Estimate> d;
  const Estimate& operator[](long n) const { return d.at(static_cast<std::size_t>(n)); }
  long n_max() const { return static_cast<long>(d.size()) - 1; }
};

/// d_0..d_{n_max} by quadrature. n_max <= 6.
DnTable compute_dn_table(long n_max, ConstantPool& pool);

/// gamma_m = sum_k C(m,k) d_k e_{m-k}, where e_j = Y_j(-gamma, -zeta(2) 1!,
/// -zeta(3) 2!, ...) are the Taylor coefficients of 1/Gamma(1-t). m <= 3.
XReal reconstruct_gamma_via_dn(long m, const DnTable& dn, ConstantPool& pool);

struct FamilyComparison {
  std::string quantity;
  Estimate quadrature;
  XReal printed_prediction;
  XReal alternative_prediction;
  XReal printed_residual;
  XReal alternative_residual;
  std::string winner;  // "printed", "alternative" or "inconclusive"
};

struct Adjudication {
  /// int Omega log|log y| against -(2 g1 + g^2) and -(g1 + g^2).
  FamilyComparison first;
  /// int Omega log^2|log y| against 3 g2 + 4 g g1 - (zeta(2) - g^2) g and the
  /// binomial combination sum_k C(2,k) (-1)^k Gamma^(2-k)(1) g_k.
  FamilyComparison second;
  /// |prediction difference| for the first comparison; equals |g1|.
  XReal gap;
  bool conclusive = false;
  bool second_integral_positive = false;
};

Adjudication adjudicate_stieltjes_families(ConstantPool& pool, double tolerance = 1e-8);

struct SuiteEntry {
  std::string name;
  XReal value;
  std::string expectation;
  bool pass = false;
};

/// Sign laws: d_n > 0 (n <= 4), sign Gamma^(n)(1) = (-1)^n (n <= 10),
/// sign eta_n = (-1)^(n+1) (n <= 3), 2 g1 + g^2 > 0.
std::vector<SuiteEntry> sign_suites(ConstantPool& pool);

struct LimitTrace {
  std::string name;
  XReal limit;
  std::vector<XReal> deviations;  // at x_k = 1 - 2^-k, k = 4..16
  bool monotone = false;
  bool pass = false;
};

/// The six printed limits, in order, followed by log(1-x) - log(-log x),
/// the sign-flipped companion of the first one. As printed, the first
/// expression tends to -infinity.
std::vector<LimitTrace> limit_suite(Bits prec);

}  // namespace stieltjes

#endif  // STIELTJES_AUDIT_HPP
