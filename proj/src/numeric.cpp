#include "sextic/numeric.hpp"

#include "sextic/errors.hpp"

#include <cmath>

namespace sextic {

namespace {

unsigned bits_to_digits(unsigned bits) {
  return static_cast<unsigned>(bits * 0.30103) + 3;
}

} // namespace

PrecisionScope::PrecisionScope(unsigned bits) : saved_digits_(Real::default_precision()) {
  Real::default_precision(bits_to_digits(bits));
}

PrecisionScope::~PrecisionScope() { Real::default_precision(saved_digits_); }

Complex Complex::operator/(const Complex &o) const {
  Real n = o.re * o.re + o.im * o.im;
  return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
}

Real complex_abs(const Complex &z) {
  using boost::multiprecision::sqrt;
  return sqrt(z.re * z.re + z.im * z.im);
}

namespace {

Real complex_arg(const Complex &z) { return atan2(z.im, z.re); }

Complex from_polar(const Real &r, const Real &theta) {
  return {r * cos(theta), r * sin(theta)};
}

} // namespace

Complex complex_sqrt(const Complex &z) {
  using boost::multiprecision::sqrt;
  if (z.re == 0 && z.im == 0)
    return {Real(0), Real(0)};
  return from_polar(sqrt(complex_abs(z)), complex_arg(z) / 2);
}

Complex complex_cbrt(const Complex &z) {
  if (z.re == 0 && z.im == 0)
    return {Real(0), Real(0)};
  Real r = complex_abs(z);
  Real third = Real(1) / 3;
  return from_polar(pow(r, third), complex_arg(z) / 3);
}

Complex zeta3() {
  using boost::multiprecision::sqrt;
  Real half(Real(1) / 2);
  return {-half, sqrt(Real(3)) / 2};
}

Complex embed(const FieldElement &x, bool conjugate) {
  switch (x.field().kind()) {
  case FieldKind::Rationals:
    return {Real(x.rational()), Real(0)};
  case FieldKind::QuadExt: {
    Complex s = complex_sqrt({Real(x.field().d()), Real(0)});
    if (conjugate)
      s = -s;
    return Complex{Real(x.quad_u()), Real(0)} + Complex{Real(x.quad_v()), Real(0)} * s;
  }
  case FieldKind::Finite:
    throw PreconditionError("finite-field elements have no complex embedding");
  }
  throw Error("unreachable");
}

std::vector<Complex> solve_quadratic(const Complex &a, const Complex &b, const Complex &c) {
  Complex disc = b * b - Complex{Real(4), Real(0)} * a * c;
  Complex root = complex_sqrt(disc);
  Complex two_a = a + a;
  return {(-b + root) / two_a, (-b - root) / two_a};
}

std::vector<Complex> solve_cubic(const Complex &c3, const Complex &c2, const Complex &c1,
                                 const Complex &c0) {
  // Normalize and depress: x = y - a2/3 turns y^3 + a2 y^2 + a1 y + a0 into
  // y^3 + p y + q.
  Complex a2 = c2 / c3, a1 = c1 / c3, a0 = c0 / c3;
  Complex third{Real(1) / 3, Real(0)};
  Complex shift = a2 * third;
  Complex p = a1 - a2 * a2 * third;
  Complex q = a0 - a2 * a1 * third + (a2 * a2 * a2) * Complex{Real(2) / 27, Real(0)};

  std::vector<Complex> roots;
  Complex half{Real(1) / 2, Real(0)};
  Complex disc = (q * q) * Complex{Real(1) / 4, Real(0)} + (p * p * p) * Complex{Real(1) / 27, Real(0)};
  Complex s = complex_sqrt(disc);
  Complex u3 = -q * half + s;
  // Guard against catastrophic cancellation: take the larger branch.
  Complex u3_alt = -q * half - s;
  if (complex_abs(u3_alt) > complex_abs(u3))
    u3 = u3_alt;
  Complex w = zeta3();
  if (complex_abs(u3) == 0) {
    // p == q == 0: triple root at the shift point.
    roots.assign(3, -shift);
  } else {
    Complex u = complex_cbrt(u3);
    for (int j = 0; j < 3; ++j) {
      Complex v = -p * third / u;
      roots.push_back(u + v - shift);
      u = u * w;
    }
  }
  std::vector<Complex> coeffs = {c0, c1, c2, c3};
  for (auto &r : roots)
    r = newton_polish(coeffs, r);
  return roots;
}

namespace {

Complex poly_eval_complex(const std::vector<Complex> &coeffs, const Complex &x) {
  Complex acc{Real(0), Real(0)};
  for (std::size_t i = coeffs.size(); i-- > 0;)
    acc = acc * x + coeffs[i];
  return acc;
}

std::vector<Complex> poly_derivative_complex(const std::vector<Complex> &coeffs) {
  std::vector<Complex> d;
  for (std::size_t i = 1; i < coeffs.size(); ++i)
    d.push_back(coeffs[i] * Complex{Real(static_cast<long>(i)), Real(0)});
  return d;
}

} // namespace

Complex newton_polish(const std::vector<Complex> &coeffs, Complex rho, int iterations) {
  std::vector<Complex> deriv = poly_derivative_complex(coeffs);
  for (int it = 0; it < iterations; ++it) {
    Complex fp = poly_eval_complex(deriv, rho);
    if (complex_abs(fp) == 0)
      break;
    rho = rho - poly_eval_complex(coeffs, rho) / fp;
  }
  return rho;
}

Real root_error_bound(const std::vector<Complex> &coeffs, const Complex &rho) {
  std::vector<Complex> deriv = poly_derivative_complex(coeffs);
  Real fp = complex_abs(poly_eval_complex(deriv, rho));
  Real fv = complex_abs(poly_eval_complex(coeffs, rho));
  if (fv == 0)
    return Real(0);
  if (fp == 0)
    return Real(1e30);
  int n = static_cast<int>(coeffs.size()) - 1;
  return Real(n) * fv / fp;
}

} // namespace sextic
