#include "stieltjes/bell.hpp"

#include <algorithm>

#include "stieltjes/series.hpp"

namespace stieltjes {

int Partition::n() const {
  int s = 0;
  for (std::size_t i = 0; i < k.size(); ++i) s += static_cast<int>(i + 1) * k[i];
  return s;
}

namespace {

void enumerate_into(int n, int i, int remaining, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (i > n) {
    if (remaining == 0) out.push_back(Partition{cur});
    return;
  }
  if (i == n) {
    if (remaining % n == 0) {
      cur[static_cast<std::size_t>(i - 1)] = remaining / n;
      out.push_back(Partition{cur});
      cur[static_cast<std::size_t>(i - 1)] = 0;
    }
    return;
  }
  for (int ki = remaining / i; ki >= 0; --ki) {
    cur[static_cast<std::size_t>(i - 1)] = ki;
    enumerate_into(n, i + 1, remaining - ki * i, cur, out);
  }
  cur[static_cast<std::size_t>(i - 1)] = 0;
}

int exponent_of(const Monomial& m, int i) {
  for (const auto& [idx, e] : m) {
    if (idx == i) return e;
    if (idx > i) break;
  }
  return 0;
}

int weight(const Monomial& m) {
  int w = 0;
  for (const auto& [i, e] : m) w += i * e;
  return w;
}

void add_term(BellPoly::Terms& t, Monomial m, const mpz_class& c) {
  auto [it, inserted] = t.try_emplace(std::move(m), c);
  if (!inserted) it->second += c;
}

Monomial multiply_var(Monomial m, int i) {
  auto it = std::find_if(m.begin(), m.end(), [&](const auto& pr) { return pr.first >= i; });
  if (it != m.end() && it->first == i) {
    ++it->second;
  } else {
    m.insert(it, {i, 1});
  }
  return m;
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw DomainError("enumerate_partitions: negative n");
  std::vector<Partition> out;
  if (n == 0) {
    out.push_back(Partition{});
    return out;
  }
  std::vector<int> cur(static_cast<std::size_t>(n), 0);
  enumerate_into(n, 1, n, cur, out);
  return out;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  std::size_t ia = 0, ib = 0;
  while (ia < a.size() || ib < b.size()) {
    int next = std::min(ia < a.size() ? a[ia].first : 1 << 30, ib < b.size() ? b[ib].first : 1 << 30);
    int ea = exponent_of(a, next), eb = exponent_of(b, next);
    if (ea != eb) return ea > eb;
    if (ia < a.size() && a[ia].first == next) ++ia;
    if (ib < b.size() && b[ib].first == next) ++ib;
  }
  return false;
}

Monomial to_monomial(const Partition& p) {
  Monomial m;
  for (std::size_t i = 0; i < p.k.size(); ++i) {
    if (p.k[i] > 0) m.emplace_back(static_cast<int>(i + 1), p.k[i]);
  }
  return m;
}

BellPoly::BellPoly() { terms_.emplace(Monomial{}, mpz_class(1)); }

BellPoly BellPoly::from_terms(int degree, Terms terms) {
  if (degree < 0) throw MalformedInput("BellPoly: negative degree");
  for (const auto& [m, c] : terms) {
    int last = 0;
    for (const auto& [i, e] : m) {
      if (i <= last || e <= 0) throw MalformedInput("BellPoly: non-canonical monomial key");
      last = i;
    }
    if (weight(m) != degree) throw MalformedInput("BellPoly: monomial weight differs from degree");
    if (c <= 0) throw MalformedInput("BellPoly: non-positive coefficient");
  }
  if (terms.empty()) throw MalformedInput("BellPoly: empty polynomial");
  return BellPoly(degree, std::move(terms));
}

mpz_class BellPoly::coefficient(const Partition& p) const {
  auto it = terms_.find(to_monomial(p));
  return it == terms_.end() ? mpz_class(0) : it->second;
}

mpz_class BellPoly::coefficient_sum() const {
  mpz_class s = 0;
  for (const auto& [m, c] : terms_) s += c;
  return s;
}

std::string BellPoly::to_string() const {
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    std::string mono;
    for (const auto& [i, e] : m) {
      if (!mono.empty()) mono += '*';
      mono += "x" + std::to_string(i);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      out += c.get_str();
    } else if (c == 1) {
      out += mono;
    } else {
      out += c.get_str() + "*" + mono;
    }
  }
  return out;
}

BellPoly bell_complete(int n) {
  if (n < 0) throw DomainError("bell_complete: negative n");
  if (n == 0) return BellPoly();
  const mpz_class nfact = factorial_exact(n);
  BellPoly::Terms terms;
  for (const Partition& p : enumerate_partitions(n)) {
    mpz_class den = 1;
    for (std::size_t i = 0; i < p.k.size(); ++i) {
      if (p.k[i] == 0) continue;
      mpz_class ifact = factorial_exact(static_cast<long>(i + 1));
      mpz_class pw;
      mpz_pow_ui(pw.get_mpz_t(), ifact.get_mpz_t(), static_cast<unsigned long>(p.k[i]));
      den *= factorial_exact(p.k[i]) * pw;
    }
    terms.emplace(to_monomial(p), mpz_class(nfact / den));
  }
  return BellPoly::from_terms(n, std::move(terms));
}

BellPoly bell_next_by_recurrence(const BellPoly& y) {
  // re-validate: callers may hand us anything built through from_terms
  BellPoly checked = BellPoly::from_terms(y.degree(), y.terms());
  BellPoly::Terms next;
  for (const auto& [m, c] : checked.terms()) {
    add_term(next, multiply_var(m, 1), c);
    for (std::size_t j = 0; j < m.size(); ++j) {
      const auto [i, e] = m[j];
      Monomial d = m;
      if (e == 1) {
        d.erase(d.begin() + static_cast<long>(j));
      } else {
        --d[j].second;
      }
      add_term(next, multiply_var(std::move(d), i + 1), c * e);
    }
  }
  return BellPoly::from_terms(y.degree() + 1, std::move(next));
}

namespace {

template <typename T, typename PowFn, typename CoefFn>
T eval_impl(const BellPoly& y, const std::vector<T>& args, T zero, PowFn pw, CoefFn coef) {
  if (static_cast<int>(args.size()) < y.degree()) {
    throw DomainError("bell_eval: need " + std::to_string(y.degree()) + " arguments, got " +
                      std::to_string(args.size()));
  }
  T sum = zero;
  for (const auto& [m, c] : y.terms()) {
    T term = zero + 1;
    for (const auto& [i, e] : m) term *= pw(args[static_cast<std::size_t>(i - 1)], e);
    sum += term * coef(c);
  }
  return sum;
}

}  // namespace

XReal bell_eval(const BellPoly& y, const std::vector<XReal>& args) {
  Bits p = kMinPrecision;
  for (const XReal& a : args) p = max(p, a.precision());
  return eval_impl<XReal>(y, args, XReal(p), [](const XReal& x, int e) {
    return pow(x, static_cast<long>(e));
  }, [p](const mpz_class& c) { return XReal(c, p); });
}

mpq_class bell_eval(const BellPoly& y, const std::vector<mpq_class>& args) {
  return eval_impl<mpq_class>(y, args, mpq_class(0), [](const mpq_class& x, int e) {
    mpq_class r = 1;
    for (int k = 0; k < e; ++k) r *= x;
    return r;
  }, [](const mpz_class& c) { return mpq_class(c); });
}

std::vector<XReal> bell_sequence(int n, const std::vector<XReal>& args) {
  if (n < 0) throw DomainError("bell_sequence: negative n");
  if (static_cast<int>(args.size()) < n) throw DomainError("bell_sequence: too few arguments");
  Bits p = kMinPrecision;
  for (const XReal& a : args) p = max(p, a.precision());
  std::vector<XReal> y{XReal(1L, p)};
  for (int m = 0; m < n; ++m) {
    XReal s(p);
    for (int k = 0; k <= m; ++k) {
      s += XReal(binomial_exact(m, k), p) * args[static_cast<std::size_t>(k)] *
           y[static_cast<std::size_t>(m - k)];
    }
    y.push_back(s);
  }
  return y;
}

}  // namespace stieltjes
