#ifndef SEXTIC_NUMERIC_H
#define SEXTIC_NUMERIC_H

#include "sextic/field.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <vector>

namespace sextic {

using Real = boost::multiprecision::mpfr_float;

/// Sets the working mpfr precision (in bits) for the lifetime of the scope,
/// restoring the previous precision on exit. All Real temporaries created
/// inside the scope carry that precision.
class PrecisionScope {
public:
  explicit PrecisionScope(unsigned bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope &) = delete;
  PrecisionScope &operator=(const PrecisionScope &) = delete;

private:
  unsigned saved_digits_;
};

/// Minimal complex type over Real; principal-branch sqrt and cbrt.
struct Complex {
  Real re, im;

  Complex() : re(0), im(0) {}
  Complex(Real r) : re(std::move(r)), im(0) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  Complex operator-() const { return {-re, -im}; }
  Complex operator+(const Complex &o) const { return {re + o.re, im + o.im}; }
  Complex operator-(const Complex &o) const { return {re - o.re, im - o.im}; }
  Complex operator*(const Complex &o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  Complex operator/(const Complex &o) const;
};

Real complex_abs(const Complex &z);
Complex complex_sqrt(const Complex &z); // principal branch, arg in (-pi/2, pi/2]
Complex complex_cbrt(const Complex &z); // principal branch, arg in (-pi/3, pi/3]
Complex zeta3();                        // (-1 + i sqrt 3)/2 at current precision

/// Embeds a characteristic-0 field element at the current precision. For
/// Q(sqrt d) the formal square root s maps to the principal complex sqrt(d);
/// with conjugate = true it maps to its negative (the other embedding).
Complex embed(const FieldElement &x, bool conjugate = false);

/// Roots of a z^2 + b z + c (a != 0), both quadratic-formula branches.
std::vector<Complex> solve_quadratic(const Complex &a, const Complex &b, const Complex &c);

/// The three roots of a cubic with leading coefficient c3 != 0, by Cardano
/// after depression, Newton-polished against the original coefficients.
std::vector<Complex> solve_cubic(const Complex &c3, const Complex &c2, const Complex &c1,
                                 const Complex &c0);

/// Newton-polishes rho against the polynomial given by coeffs (lowest first).
Complex newton_polish(const std::vector<Complex> &coeffs, Complex rho, int iterations = 4);

/// First-order certified bound on the distance from rho to the nearest true
/// root: deg * |f(rho)| / |f'(rho)|. Returns a huge sentinel when the
/// derivative is too small to trust.
Real root_error_bound(const std::vector<Complex> &coeffs, const Complex &rho);

} // namespace sextic

#endif
