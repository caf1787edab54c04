#include "stieltjes/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>

namespace stieltjes {

namespace {

struct Node {
  XReal x;   // abscissa
  XReal xc;  // 1 - x on the unit interval; unused on the half line
  XReal w;   // dx/dt
  double t = 0;
};

using Level = std::vector<Node>;
using LevelPtr = std::shared_ptr<const Level>;

enum class Rule { Unit, HalfLine };

// Largest |t| worth sampling: beyond it the Jacobian is below 2^-(p+64).
double unit_tmax(long prec) { return std::asinh(2.0 * (prec + 64) * std::log(2.0) / M_PI); }

Level build_level(Rule rule, long prec, int level) {
  const Bits p{prec};
  const XReal half_pi = pi(p) / 2;
  Level out;
  // Level 0 walks integer t; later levels add the odd multiples of 2^-level.
  const long step_den = 1L << level;
  auto make = [&](long k) -> std::optional<Node> {
    XReal t = ldexp(XReal(k, p), -level);
    XReal s = half_pi * sinh(t);
    if (rule == Rule::Unit) {
      XReal e = exp(2 * s);
      XReal x = 1 / (1 + 1 / e);
      XReal xc = 1 / (1 + e);
      XReal w = 2 * half_pi * cosh(t) * x * xc;
      if (x.is_zero() || xc.is_zero()) return std::nullopt;
      return Node{x, xc, w, t.to_double()};
    }
    XReal x = exp(s);
    XReal w = half_pi * cosh(t) * x;
    return Node{x, XReal(p), w, t.to_double()};
  };
  if (rule == Rule::Unit) {
    const double tmax = unit_tmax(prec);
    const long kmax = static_cast<long>(std::floor(tmax * static_cast<double>(step_den)));
    for (long k = (level == 0 ? 0 : 1); k <= kmax; k += (level == 0 ? 1 : 2)) {
      if (auto n = make(k)) out.push_back(*n);
    }
  } else {
    // negative t: x -> 0 until the Jacobian vanishes; positive t: up to
    // x = 2^(p+64), so a 1/x^2 tail is also negligible.
    const double lo = std::asinh(2.0 * (prec + 64) * std::log(2.0) / (M_PI / 2));
    const double hi = std::asinh((prec + 64) * std::log(2.0) / (M_PI / 2));
    const long kmin = -static_cast<long>(std::floor(lo * static_cast<double>(step_den)));
    const long kmax = static_cast<long>(std::ceil(hi * static_cast<double>(step_den)));
    for (long k = kmin; k <= kmax; ++k) {
      if (level > 0 && k % 2 == 0) continue;
      if (auto n = make(k)) out.push_back(*n);
    }
  }
  return out;
}

class NodeCache {
 public:
  LevelPtr get(Rule rule, long prec, int level) {
    std::lock_guard lock(mu_);
    auto key = std::make_tuple(static_cast<int>(rule), prec, level);
    auto it = table_.find(key);
    if (it != table_.end()) return it->second;
    auto lv = std::make_shared<const Level>(build_level(rule, prec, level));
    table_.emplace(key, lv);
    return lv;
  }

 private:
  std::mutex mu_;
  std::map<std::tuple<int, long, int>, LevelPtr> table_;
};

NodeCache& cache() {
  static NodeCache c;
  return c;
}

XReal checked_value(const std::optional<XReal>& v, const XReal& x) {
  if (!v) return XReal(x.precision());
  if (!v->is_finite()) {
    throw DomainError("quadrature: non-finite integrand value at x = " + x.to_string(20));
  }
  return *v;
}

template <typename Eval>
QuadResult run(Rule rule, Eval eval, const XReal& tol_in, const QuadOptions& opts) {
  if (!(tol_in > 0)) throw DomainError("quadrature: tolerance must be positive");
  const long prec = opts.precision > 0 ? opts.precision : tol_in.precision().value;
  const Bits p{prec};
  XReal floor_tol = ldexp(XReal(1L, p), -prec + 16);
  XReal tol = max(tol_in.rounded(p), floor_tol);

  QuadResult res{XReal(p), XReal(p), 0, false, {}};
  XReal sum(p);
  // |w f| at the outermost nodes sampled so far, one per side
  XReal edge_lo(p), edge_hi(p);
  double t_lo = 0, t_hi = 0;
  XReal prev(p);
  bool have_prev = false;
  for (int level = 0; level <= opts.max_level; ++level) {
    LevelPtr nodes = cache().get(rule, prec, level);
    const std::size_t n = nodes->size();
    for (std::size_t i = 0; i < n; ++i) {
      const Node& nd = (*nodes)[i];
      XReal c = eval(nd, sum, res.evaluations);
      if (i + 1 == n && nd.t >= t_hi) {
        t_hi = nd.t;
        edge_hi = c;
      }
      if (rule == Rule::HalfLine && i == 0 && nd.t <= t_lo) {
        t_lo = nd.t;
        edge_lo = c;
      }
    }
    XReal est = ldexp(sum, -level);
    if (level < opts.min_level) continue;
    if (have_prev) {
      XReal d = abs(est - prev);
      res.level_differences.push_back(d);
      res.value = est;
      res.error_estimate = d;
      if (d <= tol / 2) {
        res.converged = max(edge_lo, edge_hi) <= tol;
        break;
      }
    }
    prev = est;
    have_prev = true;
    res.value = est;
  }
  if (!res.converged && opts.throw_on_failure) {
    throw NonConvergence("quadrature: no convergence (last difference " +
                         res.error_estimate.to_string(6) + ", endpoint weight " +
                         max(edge_lo, edge_hi).to_string(6) + ")");
  }
  return res;
}

}  // namespace

QuadResult integrate_unit(const UnitIntegrand& f, const XReal& tol, QuadOptions opts) {
  auto eval = [&f](const Node& nd, XReal& sum, long& evals) {
    XReal a = checked_value(f(nd.x, nd.xc), nd.x) * nd.w;
    sum += a;
    ++evals;
    XReal c = abs(a);
    if (!(nd.x == nd.xc)) {
      // mirror node at -t
      XReal b = checked_value(f(nd.xc, nd.x), nd.xc) * nd.w;
      sum += b;
      ++evals;
      c = max(c, abs(b));
    }
    return c;
  };
  return run(Rule::Unit, eval, tol, opts);
}

QuadResult integrate_halfline(const HalfLineIntegrand& f, const XReal& tol, QuadOptions opts) {
  auto eval = [&f](const Node& nd, XReal& sum, long& evals) {
    XReal a = checked_value(f(nd.x), nd.x) * nd.w;
    sum += a;
    ++evals;
    return abs(a);
  };
  return run(Rule::HalfLine, eval, tol, opts);
}

}  // namespace stieltjes
