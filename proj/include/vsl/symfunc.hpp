#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "vsl/coeff.hpp"
#include "vsl/partitions.hpp"

namespace vsl {

enum class Basis { m, e, h, p, s };

std::string_view to_string(Basis b);
Basis parse_basis(std::string_view name);  // InvalidArgument on unknown names

/// Finite linear combination of basis elements b_lambda with Coeff scalars.
/// Degrees may be mixed; conversions act on each homogeneous slice separately.
class SymFunc {
 public:
  using Terms = std::map<Partition, Coeff>;

  explicit SymFunc(Basis basis = Basis::m) : basis_(basis) {}

  /// c * b_lambda
  static SymFunc element(Basis basis, const Partition& lambda, const Coeff& c = Coeff(1));

  Basis basis() const { return basis_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Coeff at(const Partition& lambda) const;
  void add_term(const Partition& lambda, const Coeff& c);

  SymFunc& operator+=(const SymFunc& other);  // other is converted when bases differ
  SymFunc& operator-=(const SymFunc& other);
  SymFunc& operator*=(const Coeff& c);

  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  friend SymFunc operator*(SymFunc a, const Coeff& c) { return a *= c; }
  friend SymFunc operator*(const Coeff& c, SymFunc a) { return a *= c; }

  /// Literal equality: same basis, same terms. Use `equal` for basis-independent comparison.
  friend bool operator==(const SymFunc& a, const SymFunc& b) = default;

  /// Applies fn to every coefficient, dropping results that vanish.
  SymFunc map_coeffs(const std::function<Coeff(const Coeff&)>& fn) const;

  /// "q^2*s[1,1,1] + q*s[2,1]", larger partitions in graded order first.
  std::string to_string() const;

 private:
  Basis basis_;
  Terms terms_;
};

SymFunc convert(const SymFunc& f, Basis target);

/// Abstract equality of the underlying symmetric functions.
bool equal(const SymFunc& a, const SymFunc& b);

/// Product, expressed in f's basis.
SymFunc multiply(const SymFunc& f, const SymFunc& g);

/// The involution with omega(e_lambda) = h_lambda, in f's basis.
SymFunc omega(const SymFunc& f);

/// f[x(q-1)]: p_k -> (q^k - 1) p_k, in f's basis.
SymFunc pleth_q_minus_1(const SymFunc& f);

struct SignedPartition {
  int sign;
  Partition shape;
};

/// Rewrites s_alpha (Jacobi-Trudi determinant of a composition) as +-s_lambda or 0.
std::optional<SignedPartition> straighten_schur(const Composition& alpha);

/// lambda-coefficient of f in the requested basis.
Coeff coefficient(const SymFunc& f, Basis basis, const Partition& lambda);

/// Entry [lambda][mu] of the transition matrix to m: coefficient of m_mu in b_lambda.
Rational to_monomial_entry(Basis b, const Partition& lambda, const Partition& mu);

}  // namespace vsl
