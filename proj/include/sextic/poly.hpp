#ifndef SEXTIC_POLY_H
#define SEXTIC_POLY_H

#include "sextic/field.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sextic {

/// Dense univariate polynomial over a FieldDescriptor, coefficients stored
/// lowest degree first. The zero polynomial has an empty coefficient list and
/// degree -1; otherwise the leading coefficient is nonzero.
class Polynomial {
public:
  explicit Polynomial(FieldDescriptor field);
  Polynomial(FieldDescriptor field, std::vector<FieldElement> coeffs);

  const FieldDescriptor &field() const { return field_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const;
  /// Coefficient of x^i; zero beyond the degree.
  FieldElement coeff(int i) const;
  const std::vector<FieldElement> &coeffs() const { return coeffs_; }
  FieldElement leading() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial &rhs) const;
  Polynomial operator-(const Polynomial &rhs) const;
  Polynomial operator*(const Polynomial &rhs) const;
  Polynomial operator*(const FieldElement &scalar) const;
  bool operator==(const Polynomial &rhs) const;
  bool operator!=(const Polynomial &rhs) const { return !(*this == rhs); }

  /// Euclidean division by a nonzero divisor: returns (quotient, remainder).
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial &a, const Polynomial &b);
  Polynomial operator/(const Polynomial &rhs) const { return divmod(*this, rhs).first; }
  Polynomial operator%(const Polynomial &rhs) const { return divmod(*this, rhs).second; }
  /// True iff rhs divides this exactly.
  bool divisible_by(const Polynomial &rhs) const;

  Polynomial monic() const;
  Polynomial derivative() const;
  FieldElement eval(const FieldElement &x) const;

  std::string to_string(const std::string &var = "x") const;

private:
  void trim();

  FieldDescriptor field_;
  std::vector<FieldElement> coeffs_;
};

/// Monic greatest common divisor by the Euclidean algorithm.
Polynomial poly_gcd(const Polynomial &f, const Polynomial &g);

/// base^e mod m over the polynomial ring.
Polynomial poly_powmod(const Polynomial &base, Int e, const Polynomial &m);

/// Multiset of irreducible-factor degrees (with multiplicity), ascending.
/// Finite fields only: squarefree decomposition (including the p-th-power
/// case when the derivative vanishes) followed by distinct-degree splitting
/// with gcd(f, x^{q^i} - x).
std::vector<int> factor_degrees(const Polynomial &f);

/// Resultant of f and g via Gaussian elimination on the Sylvester matrix.
FieldElement resultant(const Polynomial &f, const Polynomial &g);

/// Discriminant: (-1)^{n(n-1)/2} Res(f, f') / lc(f).
FieldElement discriminant(const Polynomial &f);

/// Exact decision for a degree-3 polynomial: a root in the base field, if one
/// exists. Over Q: rational-root enumeration on the integer-cleared cubic
/// (certified numeric rounding as a fallback when the constant term resists
/// factorization). Over F_q: exhaustive search for q <= 10^6, otherwise
/// gcd with x^q - x followed by equal-degree splitting. Over Q(sqrt d):
/// repeated roots are extracted exactly from gcd(R, R'); simple roots are
/// recovered by pairing certified numeric roots of the two conjugate
/// embeddings and verifying the rounded candidate exactly.
std::optional<FieldElement> cubic_rational_root(const Polynomial &r);

/// x^6 + a x^3 + b over the common field of a and b.
Polynomial sextic_trinomial(const FieldElement &a, const FieldElement &b);

/// R(x) = x^3 - 3 b x + a b, the resolvent cubic of the sextic trinomial.
Polynomial resolvent_cubic(const FieldElement &a, const FieldElement &b);

/// Exact irreducibility decision for x^6 + a x^3 + b over Q or Q(sqrt d):
/// empty when irreducible, otherwise a monic proper factor verified by exact
/// division. Certified numeric subset search over the six radical-formula
/// roots; coefficients are rounded to the integer (resp. half-integer)
/// lattice and every candidate is checked by exact polynomial division.
std::optional<Polynomial> sextic_trinomial_irreducible_char0(const FieldElement &a,
                                                             const FieldElement &b);

} // namespace sextic

#endif
