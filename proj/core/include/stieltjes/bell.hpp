#ifndef STIELTJES_BELL_HPP
#define STIELTJES_BELL_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "stieltjes/xreal.hpp"

namespace stieltjes {

/// Multiplicities k_1..k_n with sum i*k_i = n.
struct Partition {
  std::vector<int> k;

  int n() const;
  friend bool operator==(const Partition&, const Partition&) = default;
};

/// All partitions of n, ordered descending lexicographically on (k_1, ..., k_n).
/// The first entry is always k_1 = n.
std::vector<Partition> enumerate_partitions(int n);

/// Sparse exponent vector: (i, k_i) pairs with k_i > 0, ascending in i.
using Monomial = std::vector<std::pair<int, int>>;

/// Orders monomials the same way enumerate_partitions orders partitions.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Integer-coefficient polynomial in x_1, x_2, ... of fixed weight
/// (sum of i * k_i over each monomial).
class BellPoly {
 public:
  using Terms = std::map<Monomial, mpz_class, MonomialOrder>;

  /// The constant 1, of weight 0.
  BellPoly();

  /// Validates that every key is a canonical monomial of weight `degree`
  /// with a positive coefficient; throws MalformedInput otherwise.
  static BellPoly from_terms(int degree, Terms terms);

  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  mpz_class coefficient(const Partition& p) const;
  mpz_class coefficient_sum() const;

  /// e.g. "x1^3 + 3*x1*x2 + x3".
  std::string to_string() const;

  friend bool operator==(const BellPoly& a, const BellPoly& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
  }

 private:
  BellPoly(int degree, Terms terms) : degree_(degree), terms_(std::move(terms)) {}

  int degree_ = 0;
  Terms terms_;
};

Monomial to_monomial(const Partition& p);

/// Y_n from the partition formula.
BellPoly bell_complete(int n);

/// Y_{m+1} = x_1 Y_m + D(Y_m), where D maps x_i to x_{i+1}.
BellPoly bell_next_by_recurrence(const BellPoly& y);

/// Y(args[0], args[1], ...). Throws DomainError when fewer than degree() args.
XReal bell_eval(const BellPoly& y, const std::vector<XReal>& args);
mpq_class bell_eval(const BellPoly& y, const std::vector<mpq_class>& args);

/// Y_0..Y_n at the same arguments via Y_{m+1} = sum_k C(m,k) x_{k+1} Y_{m-k}.
std::vector<XReal> bell_sequence(int n, const std::vector<XReal>& args);

}  // namespace stieltjes

#endif  // STIELTJES_BELL_HPP
