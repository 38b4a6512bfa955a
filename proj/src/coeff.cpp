#include "vsl/coeff.hpp"

#include <algorithm>
#include <sstream>

namespace vsl {

namespace {

Rational rational_power(const Rational& base, int exp) {
  Rational result = 1;
  Rational b = exp >= 0 ? base : Rational(1) / base;
  for (int i = 0; i < std::abs(exp); ++i) result *= b;
  return result;
}

mpz_class binomial(int n, int k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace

Coeff::Coeff(long value) {
  if (value != 0) terms_.emplace(Monomial{0, 0}, Rational(value));
}

Coeff::Coeff(const Rational& value) {
  if (value != 0) terms_.emplace(Monomial{0, 0}, value);
}

Coeff Coeff::monomial(int q_exp, int t_exp, const Rational& c) {
  Coeff r;
  r.add_term(q_exp, t_exp, c);
  return r;
}

Rational Coeff::at(int q_exp, int t_exp) const {
  auto it = terms_.find({q_exp, t_exp});
  return it == terms_.end() ? Rational(0) : it->second;
}

void Coeff::add_term(int q_exp, int t_exp, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(Monomial{q_exp, t_exp}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int Coeff::min_q() const { return terms_.empty() ? 0 : terms_.begin()->first.first; }
int Coeff::max_q() const { return terms_.empty() ? 0 : terms_.rbegin()->first.first; }

int Coeff::min_t() const {
  int m = 0;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    if (first || mono.second < m) m = mono.second;
    first = false;
  }
  return m;
}

int Coeff::max_t() const {
  int m = 0;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    if (first || mono.second > m) m = mono.second;
    first = false;
  }
  return m;
}

Coeff& Coeff::operator+=(const Coeff& other) {
  for (const auto& [mono, c] : other.terms_) add_term(mono.first, mono.second, c);
  return *this;
}

Coeff& Coeff::operator-=(const Coeff& other) {
  for (const auto& [mono, c] : other.terms_) add_term(mono.first, mono.second, -c);
  return *this;
}

Coeff operator*(const Coeff& a, const Coeff& b) {
  Coeff r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      r.add_term(ma.first + mb.first, ma.second + mb.second, ca * cb);
    }
  }
  return r;
}

Coeff& Coeff::operator*=(const Coeff& other) {
  *this = *this * other;
  return *this;
}

Coeff& Coeff::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, c] : terms_) c *= scalar;
  return *this;
}

Coeff Coeff::operator-() const {
  Coeff r = *this;
  for (auto& [mono, c] : r.terms_) c = -c;
  return r;
}

Coeff Coeff::shifted(int q_exp, int t_exp) const {
  Coeff r;
  for (const auto& [mono, c] : terms_) r.terms_.emplace(Monomial{mono.first + q_exp, mono.second + t_exp}, c);
  return r;
}

std::string Coeff::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [mono, c] : terms_) {
    Rational mag = abs(c);
    bool negative = c < 0;
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;

    std::string vars;
    auto append_var = [&](char name, int exp) {
      if (exp == 0) return;
      if (!vars.empty()) vars += "*";
      vars += name;
      if (exp != 1) vars += "^" + std::to_string(exp);
    };
    append_var('q', mono.first);
    append_var('t', mono.second);

    if (vars.empty()) {
      out << mag.get_str();
    } else if (mag == 1) {
      out << vars;
    } else {
      out << mag.get_str() << "*" << vars;
    }
  }
  return out.str();
}

Coeff add(const Coeff& a, const Coeff& b) { return a + b; }
Coeff mul(const Coeff& a, const Coeff& b) { return a * b; }

Coeff exact_div(const Coeff& a, const Coeff& b) {
  if (b.is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero");
  if (a.is_zero()) return {};

  // The quotient, if it exists, has its exponents inside this box.
  const int q_lo = a.min_q() - b.min_q();
  const int q_hi = a.max_q() - b.max_q();
  const int t_lo = a.min_t() - b.min_t();
  const int t_hi = a.max_t() - b.max_t();
  auto fail = [&] {
    return Error(ErrorKind::NotDivisible, "(" + a.to_string() + ") / (" + b.to_string() + ")");
  };
  if (q_lo > q_hi || t_lo > t_hi) throw fail();

  const auto& [b_lead, b_coeff] = *b.terms().rbegin();
  Coeff remainder = a;
  Coeff quotient;
  while (!remainder.is_zero()) {
    const auto& [r_lead, r_coeff] = *remainder.terms().rbegin();
    const int qe = r_lead.first - b_lead.first;
    const int te = r_lead.second - b_lead.second;
    if (qe < q_lo || qe > q_hi || te < t_lo || te > t_hi) throw fail();
    Coeff step = Coeff::monomial(qe, te, r_coeff / b_coeff);
    quotient += step;
    remainder -= step * b;
  }
  return quotient;
}

Coeff shift_q(const Coeff& a, long c) {
  if (c == 0) return a;
  Coeff r;
  for (const auto& [mono, coeff] : a.terms()) {
    const int e = mono.first;
    if (e < 0) {
      throw Error(ErrorKind::NegativeExponentShift,
                  "cannot substitute q -> q + c in " + a.to_string());
    }
    for (int k = 0; k <= e; ++k) {
      Rational term = coeff * Rational(binomial(e, k)) * rational_power(Rational(c), e - k);
      r.add_term(k, mono.second, term);
    }
  }
  return r;
}

Coeff subst_q_reciprocal(const Coeff& a) {
  Coeff r;
  for (const auto& [mono, c] : a.terms()) r.add_term(-mono.first, mono.second, c);
  return r;
}

Coeff swap_qt(const Coeff& a) {
  Coeff r;
  for (const auto& [mono, c] : a.terms()) r.add_term(mono.second, mono.first, c);
  return r;
}

Coeff specialize_q(const Coeff& a, const Rational& value) {
  Coeff r;
  for (const auto& [mono, c] : a.terms()) {
    if (value == 0 && mono.first < 0) {
      throw Error(ErrorKind::InvalidArgument, "q = 0 in a Laurent polynomial with negative powers");
    }
    if (value == 0 && mono.first > 0) continue;
    r.add_term(0, mono.second, c * rational_power(value, mono.first));
  }
  return r;
}

bool is_nonneg(const Coeff& a) {
  return std::all_of(a.terms().begin(), a.terms().end(),
                     [](const auto& kv) { return kv.second > 0; });
}

Coeff q_power_minus_one(int k) { return Coeff::q(k) - Coeff(1); }

Coeff power(const Coeff& base, int k) {
  if (k < 0) throw Error(ErrorKind::InvalidArgument, "negative power");
  Coeff r(1);
  for (int i = 0; i < k; ++i) r *= base;
  return r;
}

}  // namespace vsl
