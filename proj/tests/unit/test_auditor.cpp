#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "stieltjes/audit.hpp"
#include "stieltjes/errors.hpp"
#include "stieltjes/hasse.hpp"
#include "stieltjes/series.hpp"

using namespace stieltjes;
using M = Module;

namespace {

const Bits P{256};

SideFn constant(double v) {
  return [v](EvalContext& c) { return Estimate{XReal(v, c.prec), XReal(c.prec)}; };
}

IdentityCase synthetic(const std::string& id, double lhs, double rhs, Family f = Family::Rigorous) {
  IdentityCase c;
  c.id = id;
  c.lhs = constant(lhs);
  c.rhs = constant(rhs);
  c.lhs_deps = {M::Quadrature};
  c.rhs_deps = {M::Hasse};
  c.family = f;
  c.anchor = "synthetic";
  return c;
}

const std::vector<AuditReport>& full_run() {
  static const auto reps = run_cases(registry(), RunOptions{P, 1, std::nullopt});
  return reps;
}

}  // namespace

TEST(Registry, ValidatesClean) {
  auto problems = validate_registry(registry());
  EXPECT_TRUE(problems.empty()) << (problems.empty() ? "" : problems.front());
}

TEST(Registry, IdsUniqueAnchorsDescriptive) {
  std::set<std::string> ids;
  for (const auto& c : registry()) {
    EXPECT_TRUE(ids.insert(c.id).second) << c.id;
    EXPECT_GE(c.anchor.size(), 10u) << c.id;
    EXPECT_GT(c.tolerance, 0) << c.id;
  }
  for (const char* id : {"EQ_1_11", "EQ_B_5", "EQ_B_6", "EQ_B_8", "EQ_B_10", "EQ_B_11", "EQ_B_30", "EQ_2_5",
                         "EQ_2_10", "EQ_2_14_DERIVED", "EQ_2_15_DERIVED", "EQ_C_1"})
    EXPECT_TRUE(ids.count(id)) << id;
}

TEST(Registry, IndependenceCheckCatchesSharedModules) {
  auto c = synthetic("X", 1, 1);
  c.lhs_deps = {M::Coppo};
  c.rhs_deps = {M::Bell};
  auto problems = validate_registry({c});
  ASSERT_EQ(problems.size(), 1u);
  EXPECT_NE(problems[0].find("bell"), std::string::npos);
  auto ok = synthetic("Y", 1, 1);
  ok.lhs_deps = {M::Polylog};
  ok.rhs_deps = {M::Hasse, M::Constants};
  EXPECT_TRUE(validate_registry({ok}).empty());
  EXPECT_EQ(validate_registry({ok, ok}).size(), 1u);
}

TEST(Registry, ModuleClosure) {
  auto s = module_closure({M::Coppo});
  EXPECT_TRUE(s.contains(M::Quadrature) && s.contains(M::ZetaGamma) && s.contains(M::Bell));
  EXPECT_TRUE(s.contains(M::PrecisionCore));
  EXPECT_FALSE(s.contains(M::Hasse));
}

TEST(Registry, SelectByPrefixAndFamily) {
  auto all = registry();
  auto b2 = select_cases(all, std::string("EQ_B_2"), std::nullopt);
  EXPECT_EQ(b2.size(), 20u);
  for (const auto& c : b2) EXPECT_EQ(c.id.rfind("EQ_B_2_n", 0), 0u);
  EXPECT_EQ(select_cases(all, std::string("EQ_1_11"), std::nullopt).size(), 1u);
  EXPECT_TRUE(select_cases(all, std::string("NO_SUCH"), std::nullopt).empty());
  for (const auto& c : select_cases(all, std::nullopt, Family::Section2Audit))
    EXPECT_EQ(c.family, Family::Section2Audit);
}

TEST(Verdicts, FamilyDecidesFailureLabel) {
  ConstantPool pool(P);
  EvalContext ctx{P, pool};
  EXPECT_EQ(evaluate_case(synthetic("a", 1, 1), ctx).verdict, Verdict::Pass);
  EXPECT_EQ(evaluate_case(synthetic("b", 1, 2), ctx).verdict, Verdict::Fail);
  EXPECT_EQ(evaluate_case(synthetic("c", 1, 2, Family::Section2Audit), ctx).verdict, Verdict::AuditDeviation);
  EXPECT_EQ(evaluate_case(synthetic("d", 1, 1.5), ctx, 1.0).verdict, Verdict::Pass);
}

TEST(Verdicts, RelativeResidualForLargeValues) {
  ConstantPool pool(P);
  EvalContext ctx{P, pool};
  auto c = synthetic("big", 1e12 + 1e-1, 1e12);
  EXPECT_EQ(evaluate_case(c, ctx).verdict, Verdict::Pass);
  auto r = evaluate_case(synthetic("small", 1e-3, 2e-3), ctx);
  EXPECT_EQ(r.verdict, Verdict::Fail);
  EXPECT_LT(abs(r.abs_residual - XReal(1e-3, P)).to_double(), 1e-15);
}

TEST(Verdicts, PositiveRelation) {
  ConstantPool pool(P);
  EvalContext ctx{P, pool};
  auto c = synthetic("pos", 0.25, 0, Family::Section2Audit);
  c.relation = Relation::Positive;
  EXPECT_EQ(evaluate_case(c, ctx).verdict, Verdict::Pass);
  c.lhs = constant(-0.25);
  EXPECT_EQ(evaluate_case(c, ctx).verdict, Verdict::AuditDeviation);
}

TEST(Verdicts, ErrorsAndNonConvergence) {
  ConstantPool pool(P);
  EvalContext ctx{P, pool};
  auto c = synthetic("e", 1, 1);
  c.rhs = [](EvalContext&) -> Estimate { throw DomainError("bad"); };
  auto r = evaluate_case(c, ctx);
  EXPECT_EQ(r.verdict, Verdict::Error);
  EXPECT_FALSE(r.non_convergence);
  EXPECT_EQ(r.error, "bad");
  c.rhs = [](EvalContext&) -> Estimate { throw NonConvergence("slow"); };
  r = evaluate_case(c, ctx);
  EXPECT_EQ(r.verdict, Verdict::Error);
  EXPECT_TRUE(r.non_convergence);
}

TEST(Runner, ParallelOrderMatchesSerial) {
  std::vector<IdentityCase> cases;
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> d(-1, 1);
  for (int i = 0; i < 40; ++i) {
    double a = d(rng);
    cases.push_back(synthetic("s" + std::to_string(i), a, i % 3 ? a : a + 1,
                              i % 2 ? Family::Rigorous : Family::Section2Audit));
  }
  auto serial = run_cases(cases, RunOptions{P, 1, std::nullopt});
  auto par = run_cases(cases, RunOptions{P, 4, std::nullopt});
  ASSERT_EQ(serial.size(), par.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    EXPECT_EQ(serial[i].id, par[i].id);
    EXPECT_EQ(serial[i].verdict, par[i].verdict);
    EXPECT_EQ(serial[i].lhs, par[i].lhs);
  }
}

TEST(Runner, FullRegistryOutcome) {
  const std::set<std::string> deviations{
      "EQ_2_4_u1",  "EQ_2_4_u2",  "EQ_2_5",     "EQ_2_9_u2",  "EQ_2_10",    "EQ_2_11",
      "EQ_2_14",    "EQ_2_15",    "EQ_3_12_m1", "EQ_3_12_m2", "EQ_3_12_m3", "EQ_3_15_m1",
      "EQ_3_15_m2", "EQ_3_15_m3", "EQ_3_PRINTED_a1_p2", "EQ_3_PRINTED_a2_p3"};
  const auto& reps = full_run();
  EXPECT_EQ(reps.size(), registry().size());
  for (const auto& r : reps) {
    EXPECT_TRUE(r.error.empty()) << r.id << ": " << r.error;
    if (r.family == Family::Rigorous) EXPECT_EQ(r.verdict, Verdict::Pass) << r.id;
    if (r.verdict == Verdict::AuditDeviation) EXPECT_TRUE(deviations.count(r.id)) << r.id;
    if (deviations.count(r.id)) EXPECT_EQ(r.verdict, Verdict::AuditDeviation) << r.id;
  }
}

TEST(Invariants, DnConvolution) {
  ConstantPool pool(P);
  auto g = oracle::stieltjes_constants(3, P);
  XReal one(1L, P);
  for (long n = 0; n <= 3; ++n) {
    XReal ref(0L, P);
    for (long k = 0; k <= n; ++k)
      ref += XReal(binomial_exact(n, k), P) * g[k] * abs(oracle::gamma_derivative(static_cast<int>(n - k), one));
    Estimate d = pool.dn(n);
    EXPECT_TRUE(abs(d.value - ref) <= d.error + XReal(1e-25, P)) << n << " " << (d.value - ref).to_string(5);
  }
}

TEST(Invariants, TruncatedDigammaSeriesTail) {
  // -S_N(1, u = 1, p = 1) approaches gamma with tail O(1/N)
  XReal g = oracle::euler(P);
  std::vector<double> scaled;
  for (long n : {128L, 256L, 512L}) {
    XReal tail = abs(g + S_partial(1, XReal(1L, P), 1, n, false));
    scaled.push_back((tail * n).to_double());
  }
  for (double s : scaled) EXPECT_LT(s, 2.0);
  EXPECT_LE(scaled[2], scaled[0] * 1.01);
}

TEST(Invariants, ReconstructionFromDn) {
  ConstantPool pool(P);
  auto table = compute_dn_table(3, pool);
  auto g = oracle::stieltjes_constants(3, P);
  for (long m = 0; m <= 3; ++m)
    EXPECT_LT(abs(reconstruct_gamma_via_dn(m, table, pool) - g[m]).to_double(), 1e-20) << m;
  EXPECT_THROW(compute_dn_table(7, pool), DomainError);
  EXPECT_THROW(reconstruct_gamma_via_dn(4, table, pool), DomainError);
}

TEST(Suites, AdjudicationAndSigns) {
  ConstantPool pool(P);
  auto a = adjudicate_stieltjes_families(pool);
  EXPECT_EQ(a.first.winner, "alternative");
  EXPECT_EQ(a.second.winner, "alternative");
  EXPECT_TRUE(a.conclusive);
  EXPECT_TRUE(a.second_integral_positive);
  for (const auto& e : sign_suites(pool)) EXPECT_TRUE(e.pass) << e.name;
}

TEST(Suites, LimitTraces) {
  auto traces = limit_suite(Bits{192});
  ASSERT_EQ(traces.size(), 7u);
  for (const auto& t : traces) EXPECT_EQ(t.deviations.size(), 13u);
  EXPECT_FALSE(traces[0].pass);
  for (std::size_t i = 1; i < traces.size(); ++i) EXPECT_TRUE(traces[i].pass) << traces[i].name;
}
