#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "vsl/error.hpp"

namespace vsl {

using Rational = mpq_class;

/// Exponent pair (q-exponent, t-exponent). Lexicographic order fixes the
/// canonical term order used for printing and serialization.
using Monomial = std::pair<int, int>;

/// Laurent polynomial in q and t with exact rational coefficients.
///
/// Invariant: no stored coefficient is zero, so two values are equal iff
/// their term maps are identical.
class Coeff {
 public:
  using Terms = std::map<Monomial, Rational>;

  Coeff() = default;
  Coeff(long value);  // NOLINT: integers are coefficients
  explicit Coeff(const Rational& value);

  static Coeff monomial(int q_exp, int t_exp = 0, const Rational& c = 1);
  static Coeff q(int exp = 1) { return monomial(exp, 0); }
  static Coeff t(int exp = 1) { return monomial(0, exp); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Coefficient of q^i t^j (zero when absent).
  Rational at(int q_exp, int t_exp = 0) const;

  /// Adds c * q^i t^j in place.
  void add_term(int q_exp, int t_exp, const Rational& c);

  int min_q() const;
  int max_q() const;
  int min_t() const;
  int max_t() const;

  Coeff& operator+=(const Coeff& other);
  Coeff& operator-=(const Coeff& other);
  Coeff& operator*=(const Coeff& other);
  Coeff& operator*=(const Rational& scalar);

  friend Coeff operator+(Coeff a, const Coeff& b) { return a += b; }
  friend Coeff operator-(Coeff a, const Coeff& b) { return a -= b; }
  friend Coeff operator*(const Coeff& a, const Coeff& b);
  friend Coeff operator*(Coeff a, const Rational& s) { return a *= s; }
  friend Coeff operator*(const Rational& s, Coeff a) { return a *= s; }
  Coeff operator-() const;

  friend bool operator==(const Coeff& a, const Coeff& b) { return a.terms_ == b.terms_; }

  /// Multiplies by q^a t^b.
  Coeff shifted(int q_exp, int t_exp = 0) const;

  /// Human form with terms in increasing (q, t) order, e.g. "1 - 2*q + q^2".
  std::string to_string() const;

 private:
  Terms terms_;
};

Coeff add(const Coeff& a, const Coeff& b);
Coeff mul(const Coeff& a, const Coeff& b);

/// Returns c with b * c == a. Throws NotDivisible when no Laurent quotient exists.
Coeff exact_div(const Coeff& a, const Coeff& b);

/// Substitutes q -> q + c. Negative q-exponents are rejected when c != 0.
Coeff shift_q(const Coeff& a, long c);

/// Substitutes q -> 1/q.
Coeff subst_q_reciprocal(const Coeff& a);

/// Exchanges the roles of q and t.
Coeff swap_qt(const Coeff& a);

/// Substitutes q -> value (a rational number); negative q-exponents need value != 0.
Coeff specialize_q(const Coeff& a, const Rational& value);

/// True iff every rational coefficient is non-negative.
bool is_nonneg(const Coeff& a);

/// (q^k - 1)
Coeff q_power_minus_one(int k);

/// base^k for k >= 0.
Coeff power(const Coeff& base, int k);

}  // namespace vsl
