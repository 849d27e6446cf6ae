#include "sextic/poly.hpp"

#include "sextic/errors.hpp"
#include "sextic/numeric.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace sextic {

Polynomial::Polynomial(FieldDescriptor field) : field_(std::move(field)) {}

Polynomial::Polynomial(FieldDescriptor field, std::vector<FieldElement> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (const auto &c : coeffs_)
    if (c.field() != field_)
      throw FieldMismatchError("polynomial coefficient from a different field");
  trim();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero())
    coeffs_.pop_back();
}

bool Polynomial::is_monic() const { return !is_zero() && coeffs_.back().is_one(); }

FieldElement Polynomial::coeff(int i) const {
  if (i < 0 || i > degree())
    return field_.zero();
  return coeffs_[static_cast<std::size_t>(i)];
}

FieldElement Polynomial::leading() const {
  if (is_zero())
    throw PreconditionError("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Polynomial Polynomial::operator-() const {
  std::vector<FieldElement> c;
  c.reserve(coeffs_.size());
  for (const auto &x : coeffs_)
    c.push_back(-x);
  return Polynomial(field_, std::move(c));
}

Polynomial Polynomial::operator+(const Polynomial &rhs) const {
  if (field_ != rhs.field_)
    throw FieldMismatchError("polynomial operands over different fields");
  std::vector<FieldElement> c;
  std::size_t n = std::max(coeffs_.size(), rhs.coeffs_.size());
  c.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    c.push_back(coeff(static_cast<int>(i)) + rhs.coeff(static_cast<int>(i)));
  return Polynomial(field_, std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial &rhs) const { return *this + (-rhs); }

Polynomial Polynomial::operator*(const Polynomial &rhs) const {
  if (field_ != rhs.field_)
    throw FieldMismatchError("polynomial operands over different fields");
  if (is_zero() || rhs.is_zero())
    return Polynomial(field_);
  std::vector<FieldElement> c(coeffs_.size() + rhs.coeffs_.size() - 1, field_.zero());
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      c[i + j] = c[i + j] + coeffs_[i] * rhs.coeffs_[j];
  return Polynomial(field_, std::move(c));
}

Polynomial Polynomial::operator*(const FieldElement &scalar) const {
  std::vector<FieldElement> c;
  c.reserve(coeffs_.size());
  for (const auto &x : coeffs_)
    c.push_back(x * scalar);
  return Polynomial(field_, std::move(c));
}

bool Polynomial::operator==(const Polynomial &rhs) const {
  return field_ == rhs.field_ && coeffs_ == rhs.coeffs_;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial &a, const Polynomial &b) {
  if (a.field_ != b.field_)
    throw FieldMismatchError("polynomial operands over different fields");
  if (b.is_zero())
    throw PreconditionError("polynomial division by zero");
  const FieldDescriptor &K = a.field_;
  int da = a.degree(), db = b.degree();
  if (da < db)
    return {Polynomial(K), a};
  std::vector<FieldElement> rem = a.coeffs_;
  std::vector<FieldElement> quot(static_cast<std::size_t>(da - db + 1), K.zero());
  FieldElement inv_lead = b.leading().inverse();
  for (int i = da; i >= db; --i) {
    FieldElement factor = rem[static_cast<std::size_t>(i)] * inv_lead;
    if (factor.is_zero())
      continue;
    quot[static_cast<std::size_t>(i - db)] = factor;
    for (int j = 0; j <= db; ++j)
      rem[static_cast<std::size_t>(i - db + j)] =
          rem[static_cast<std::size_t>(i - db + j)] - factor * b.coeffs_[static_cast<std::size_t>(j)];
  }
  return {Polynomial(K, std::move(quot)), Polynomial(K, std::move(rem))};
}

bool Polynomial::divisible_by(const Polynomial &rhs) const {
  return divmod(*this, rhs).second.is_zero();
}

Polynomial Polynomial::monic() const {
  if (is_zero())
    return *this;
  return *this * leading().inverse();
}

Polynomial Polynomial::derivative() const {
  std::vector<FieldElement> c;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    c.push_back(coeffs_[i] * field_.from_integer(Int(i)));
  return Polynomial(field_, std::move(c));
}

FieldElement Polynomial::eval(const FieldElement &x) const {
  FieldElement acc = field_.zero();
  for (std::size_t i = coeffs_.size(); i-- > 0;)
    acc = acc * x + coeffs_[i];
  return acc;
}

namespace {

// Renders a coefficient for display; may start with '-'. Wraps two-term
// quadratic-extension values in parentheses.
std::string pretty_coeff(const FieldElement &c) {
  const FieldDescriptor &K = c.field();
  auto rat_pretty = [](const Rat &q) {
    std::ostringstream os;
    os << num(q);
    if (den(q) != 1)
      os << "/" << den(q);
    return os.str();
  };
  switch (K.kind()) {
  case FieldKind::Rationals:
    return rat_pretty(c.rational());
  case FieldKind::QuadExt:
    if (c.quad_v() == 0)
      return rat_pretty(c.quad_u());
    return "(" + c.to_string() + ")";
  case FieldKind::Finite:
    return c.to_string();
  }
  return c.to_string();
}

bool is_minus_one(const FieldElement &c) {
  return c.field().characteristic() == 0 && c == -c.field().one();
}

} // namespace

std::string Polynomial::to_string(const std::string &var) const {
  if (is_zero())
    return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    FieldElement c = coeff(i);
    if (c.is_zero())
      continue;
    std::string term;
    if (i == 0) {
      term = pretty_coeff(c);
    } else {
      std::string base = i == 1 ? var : var + "^" + std::to_string(i);
      if (c.is_one())
        term = base;
      else if (is_minus_one(c))
        term = "-" + base;
      else
        term = pretty_coeff(c) + "*" + base;
    }
    if (out.empty())
      out = term;
    else if (!term.empty() && term[0] == '-')
      out += term;
    else
      out += "+" + term;
  }
  return out;
}

Polynomial poly_gcd(const Polynomial &f, const Polynomial &g) {
  if (f.is_zero() && g.is_zero())
    throw PreconditionError("gcd of two zero polynomials");
  Polynomial a = f, b = g;
  while (!b.is_zero()) {
    Polynomial r = a % b;
    a = b;
    b = r;
  }
  return a.monic();
}

Polynomial poly_powmod(const Polynomial &base, Int e, const Polynomial &m) {
  if (e < 0)
    throw PreconditionError("negative exponent in poly_powmod");
  const FieldDescriptor &K = base.field();
  Polynomial result(K, {K.one()});
  Polynomial b = base % m;
  while (e > 0) {
    if (boost::multiprecision::bit_test(e, 0))
      result = result * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return result;
}

namespace {

Polynomial x_poly(const FieldDescriptor &K) { return Polynomial(K, {K.zero(), K.one()}); }

// p-th root of a monic polynomial of the form u(x^p) over F_{p^k}:
// coefficient a of x^{pi} maps to a^{p^{k-1}} at x^i (inverse Frobenius).
Polynomial pth_root(const Polynomial &f) {
  const FieldDescriptor &K = f.field();
  std::uint64_t p = K.characteristic();
  unsigned k = K.extension_degree();
  Int frob_inv = boost::multiprecision::pow(Int(p), k - 1);
  std::vector<FieldElement> c;
  for (int i = 0; i * static_cast<int>(p) <= f.degree(); ++i)
    c.push_back(f.coeff(i * static_cast<int>(p)).pow(frob_inv));
  return Polynomial(K, std::move(c));
}

void squarefree_decomposition(const Polynomial &f, int multiplier,
                              std::vector<std::pair<Polynomial, int>> &out) {
  const FieldDescriptor &K = f.field();
  std::uint64_t p = K.characteristic();
  Polynomial fp = f.derivative();
  if (fp.is_zero()) {
    squarefree_decomposition(pth_root(f), multiplier * static_cast<int>(p), out);
    return;
  }
  Polynomial c = poly_gcd(f, fp);
  Polynomial w = f / c;
  int i = 1;
  while (w.degree() > 0) {
    Polynomial y = poly_gcd(w, c);
    Polynomial fac = w / y;
    if (fac.degree() > 0)
      out.emplace_back(fac.monic(), multiplier * i);
    w = y;
    c = c / y;
    ++i;
  }
  if (c.degree() > 0)
    squarefree_decomposition(pth_root(c.monic()), multiplier * static_cast<int>(p), out);
}

std::vector<int> distinct_degree_degrees(Polynomial g) {
  const FieldDescriptor &K = g.field();
  Int q = K.order();
  std::vector<int> degrees;
  Polynomial h = x_poly(K) % g;
  int i = 1;
  while (g.degree() >= 2 * i) {
    h = poly_powmod(h, q, g);
    Polynomial part = poly_gcd(h - x_poly(K), g);
    if (part.degree() > 0) {
      for (int c = 0; c < part.degree() / i; ++c)
        degrees.push_back(i);
      g = g / part;
      h = h % g;
    }
    ++i;
  }
  if (g.degree() > 0)
    degrees.push_back(g.degree());
  return degrees;
}

} // namespace

std::vector<int> factor_degrees(const Polynomial &f) {
  if (f.field().kind() != FieldKind::Finite)
    throw PreconditionError("factor_degrees requires a finite field");
  if (f.is_zero())
    throw PreconditionError("factor_degrees of the zero polynomial");
  if (f.degree() == 0)
    return {};
  std::vector<std::pair<Polynomial, int>> sqf;
  squarefree_decomposition(f.monic(), 1, sqf);
  std::vector<int> degrees;
  for (const auto &[part, mult] : sqf) {
    std::vector<int> d = distinct_degree_degrees(part);
    for (int deg : d)
      for (int c = 0; c < mult; ++c)
        degrees.push_back(deg);
  }
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

FieldElement resultant(const Polynomial &f, const Polynomial &g) {
  if (f.field() != g.field())
    throw FieldMismatchError("resultant operands over different fields");
  const FieldDescriptor &K = f.field();
  if (f.is_zero() || g.is_zero())
    return K.zero();
  int n = f.degree(), m = g.degree();
  if (n == 0)
    return f.leading().pow(m);
  if (m == 0)
    return g.leading().pow(n);
  std::size_t size = static_cast<std::size_t>(n + m);
  std::vector<std::vector<FieldElement>> s(size, std::vector<FieldElement>(size, K.zero()));
  for (int r = 0; r < m; ++r)
    for (int j = 0; j <= n; ++j)
      s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + j)] = f.coeff(n - j);
  for (int r = 0; r < n; ++r)
    for (int j = 0; j <= m; ++j)
      s[static_cast<std::size_t>(m + r)][static_cast<std::size_t>(r + j)] = g.coeff(m - j);
  // Determinant by Gaussian elimination with partial pivoting by first
  // nonzero entry; exact arithmetic, sign tracked through row swaps.
  FieldElement det = K.one();
  for (std::size_t col = 0; col < size; ++col) {
    std::size_t pivot = col;
    while (pivot < size && s[pivot][col].is_zero())
      ++pivot;
    if (pivot == size)
      return K.zero();
    if (pivot != col) {
      std::swap(s[pivot], s[col]);
      det = -det;
    }
    det = det * s[col][col];
    FieldElement inv = s[col][col].inverse();
    for (std::size_t row = col + 1; row < size; ++row) {
      if (s[row][col].is_zero())
        continue;
      FieldElement factor = s[row][col] * inv;
      for (std::size_t j = col; j < size; ++j)
        s[row][j] = s[row][j] - factor * s[col][j];
    }
  }
  return det;
}

FieldElement discriminant(const Polynomial &f) {
  if (f.degree() < 1)
    throw PreconditionError("discriminant requires degree >= 1");
  int n = f.degree();
  FieldElement res = resultant(f, f.derivative());
  FieldElement d = res / f.leading();
  if ((n * (n - 1) / 2) % 2 != 0)
    d = -d;
  return d;
}

namespace {

// ---- cubic root search over finite fields ----

FieldElement random_ff_element(const FieldDescriptor &K, std::mt19937_64 &rng) {
  std::vector<std::uint64_t> digits(K.extension_degree());
  for (auto &d : digits)
    d = rng() % K.characteristic();
  return K.from_coeffs(std::move(digits));
}

// g is a nonconstant product of distinct monic linear factors; returns one
// root by repeated quadratic-residue splitting.
FieldElement split_to_root(Polynomial g, std::mt19937_64 &rng) {
  const FieldDescriptor &K = g.field();
  Int half = (K.order() - 1) / 2;
  while (g.degree() > 1) {
    std::vector<FieldElement> tc = {random_ff_element(K, rng), K.one()};
    Polynomial t(K, std::move(tc));
    Polynomial h = poly_powmod(t, half, g) - Polynomial(K, {K.one()});
    if (h.is_zero())
      continue;
    Polynomial d = poly_gcd(h, g);
    if (d.degree() == 0 || d.degree() == g.degree())
      continue;
    g = 2 * d.degree() <= g.degree() ? d : g / d;
  }
  return -g.monic().coeff(0);
}

std::optional<FieldElement> finite_cubic_root(const Polynomial &r) {
  const FieldDescriptor &K = r.field();
  if (K.order_fits_u64() && K.order_u64() <= 1000000) {
    std::uint64_t q = K.order_u64();
    for (std::uint64_t idx = 0; idx < q; ++idx) {
      FieldElement x = K.element_at(idx);
      if (r.eval(x).is_zero())
        return x;
    }
    return std::nullopt;
  }
  Polynomial h = poly_powmod(x_poly(K), K.order(), r);
  Polynomial linear_part = poly_gcd(h - x_poly(K), r);
  if (linear_part.degree() == 0)
    return std::nullopt;
  if (linear_part.degree() == 1)
    return -linear_part.coeff(0);
  std::mt19937_64 rng(0x53585449435231ULL);
  return split_to_root(linear_part, rng);
}

// ---- cubic root search over Q ----

Int lcm_int(const Int &a, const Int &b) { return boost::multiprecision::lcm(a, b); }

// All positive divisors from a complete factorization; empty when the
// factorization is too splintered to enumerate within the cap.
std::vector<Int> divisors_from_factorization(const std::vector<std::pair<Int, unsigned>> &factors,
                                             std::size_t cap = 200000) {
  std::vector<Int> divs = {Int(1)};
  for (const auto &[prime, exp] : factors) {
    std::size_t base = divs.size();
    if (base * (exp + 1) > cap)
      return {};
    Int pe(1);
    for (unsigned e = 1; e <= exp; ++e) {
      pe *= prime;
      for (std::size_t i = 0; i < base; ++i)
        divs.push_back(divs[i] * pe);
    }
  }
  return divs;
}

std::optional<FieldElement> rational_cubic_root(const Polynomial &r) {
  const FieldDescriptor &K = r.field();
  Int lam(1);
  for (int i = 0; i <= 3; ++i)
    lam = lcm_int(lam, den(r.coeff(i).rational()));
  Int c[4];
  for (int i = 0; i <= 3; ++i) {
    Rat scaled = r.coeff(i).rational() * Rat(lam);
    c[i] = num(scaled);
  }
  if (c[0] == 0)
    return K.zero();
  bool complete0 = false, complete3 = false;
  auto f0 = trial_factor(boost::multiprecision::abs(c[0]), complete0);
  auto f3 = trial_factor(boost::multiprecision::abs(c[3]), complete3);
  if (complete0 && complete3) {
    std::vector<Int> num_divs = divisors_from_factorization(f0);
    std::vector<Int> den_divs = divisors_from_factorization(f3);
    if (!num_divs.empty() && !den_divs.empty()) {
      for (const Int &dd : den_divs) {
        for (const Int &nn : num_divs) {
          Rat cand = Rat(nn) / Rat(dd);
          for (int sign = 0; sign < 2; ++sign) {
            FieldElement x = K.from_rational(sign ? -cand : cand);
            if (r.eval(x).is_zero())
              return x;
          }
        }
      }
      return std::nullopt;
    }
  }
  // Certified numeric fallback: for a rational root p/q in lowest terms,
  // q | c3, so c3 * root is an integer; round it once the error bound is
  // provably below 1/4.
  Int c3abs = boost::multiprecision::abs(c[3]);
  for (unsigned bits = 256; bits <= 4096; bits *= 2) {
    PrecisionScope scope(bits);
    std::vector<Complex> coeffs;
    for (int i = 0; i <= 3; ++i)
      coeffs.push_back(Complex{Real(Rat(c[i])), Real(0)});
    std::vector<Complex> roots = solve_cubic(coeffs[3], coeffs[2], coeffs[1], coeffs[0]);
    Real threshold = Real(1) / (Real(4) * Real(c3abs));
    bool certified = true;
    for (const Complex &rho : roots)
      if (!(root_error_bound(coeffs, rho) < threshold))
        certified = false;
    if (!certified)
      continue;
    for (const Complex &rho : roots) {
      Real t = rho.re * Real(c3abs);
      Int m = Int(boost::multiprecision::floor(t + Real(1) / 2).convert_to<Int>());
      for (const Int &mm : {m, Int(-m)}) {
        FieldElement x = K.from_rational(Rat(mm) / Rat(c3abs));
        if (r.eval(x).is_zero())
          return x;
      }
    }
    return std::nullopt;
  }
  throw PrecisionError("cubic root search exceeded the precision cap");
}

// ---- cubic root search over Q(sqrt d) ----

std::optional<FieldElement> quad_cubic_root(const Polynomial &r) {
  const FieldDescriptor &K = r.field();
  Int lam(1);
  for (int i = 0; i <= 3; ++i) {
    lam = lcm_int(lam, den(r.coeff(i).quad_u()));
    lam = lcm_int(lam, den(r.coeff(i).quad_v()));
  }
  FieldElement lead = r.leading() * K.from_integer(lam);
  // lead is integral in Z[sqrt d]; its norm bounds the denominator of any
  // root of the cleared cubic: lead * root is an algebraic integer, so the
  // root's coordinates lie on the 1/(2N) grid.
  Rat norm_rat = lead.quad_u() * lead.quad_u() - Rat(K.d()) * lead.quad_v() * lead.quad_v();
  Int n_abs = boost::multiprecision::abs(num(norm_rat));
  Int grid = 2 * n_abs;
  for (unsigned bits = 256; bits <= 4096; bits *= 2) {
    PrecisionScope scope(bits);
    std::vector<Complex> sc, tc;
    for (int i = 0; i <= 3; ++i) {
      sc.push_back(embed(r.coeff(i), false));
      tc.push_back(embed(r.coeff(i), true));
    }
    std::vector<Complex> z = solve_cubic(sc[3], sc[2], sc[1], sc[0]);
    std::vector<Complex> w = solve_cubic(tc[3], tc[2], tc[1], tc[0]);
    Real threshold = Real(1) / (Real(8) * Real(grid));
    bool certified = true;
    for (const Complex &rho : z)
      if (!(root_error_bound(sc, rho) < threshold))
        certified = false;
    for (const Complex &rho : w)
      if (!(root_error_bound(tc, rho) < threshold))
        certified = false;
    if (!certified)
      continue;
    Complex s = complex_sqrt(Complex{Real(K.d()), Real(0)});
    for (const Complex &zi : z) {
      for (const Complex &wj : w) {
        Complex u = (zi + wj) * Complex{Real(1) / 2, Real(0)};
        Complex v = (zi - wj) / (s + s);
        auto snap = [&](const Real &x) {
          Int m = Int(boost::multiprecision::floor(x * Real(grid) + Real(1) / 2).convert_to<Int>());
          return Rat(m) / Rat(grid);
        };
        FieldElement cand = K.quad(snap(u.re), snap(v.re));
        if (r.eval(cand).is_zero())
          return cand;
      }
    }
    return std::nullopt;
  }
  throw PrecisionError("cubic root search exceeded the precision cap");
}

} // namespace

std::optional<FieldElement> cubic_rational_root(const Polynomial &r) {
  if (r.degree() != 3)
    throw PreconditionError("cubic_rational_root requires degree 3");
  const FieldDescriptor &K = r.field();
  if (K.kind() == FieldKind::Finite)
    return finite_cubic_root(r);
  // Exact repeated-root path: a repeated root of a cubic over a field of
  // characteristic 0 already lies in the base field.
  Polynomial g = poly_gcd(r, r.derivative());
  if (g.degree() >= 1) {
    FieldElement root = g.degree() == 1 ? -g.coeff(0) : -(r / g).monic().coeff(0);
    if (!r.eval(root).is_zero())
      throw InternalInconsistencyError("repeated-root extraction produced a non-root");
    return root;
  }
  if (K.kind() == FieldKind::Rationals)
    return rational_cubic_root(r);
  return quad_cubic_root(r);
}

Polynomial sextic_trinomial(const FieldElement &a, const FieldElement &b) {
  if (a.field() != b.field())
    throw FieldMismatchError("coefficients from different fields");
  const FieldDescriptor &K = a.field();
  return Polynomial(K, {b, K.zero(), K.zero(), a, K.zero(), K.zero(), K.one()});
}

Polynomial resolvent_cubic(const FieldElement &a, const FieldElement &b) {
  if (a.field() != b.field())
    throw FieldMismatchError("coefficients from different fields");
  const FieldDescriptor &K = a.field();
  FieldElement three = K.from_integer(3);
  return Polynomial(K, {a * b, -(three * b), K.zero(), K.one()});
}

namespace {

Rat round_to_grid(const Real &x, const Int &grid) {
  Int m = Int(boost::multiprecision::floor(x * Real(grid) + Real(1) / 2).convert_to<Int>());
  return Rat(m) / Rat(grid);
}

std::vector<Complex> monic_from_roots(const std::vector<Complex> &roots, unsigned mask) {
  // Coefficients lowest-first of prod (y - rho).
  std::vector<Complex> c = {Complex{Real(1), Real(0)}};
  for (unsigned i = 0; i < roots.size(); ++i) {
    if (!(mask >> i & 1u))
      continue;
    c.insert(c.begin(), Complex{Real(0), Real(0)});
    for (std::size_t j = 0; j + 1 < c.size(); ++j)
      c[j] = c[j] - roots[i] * c[j + 1];
  }
  return c;
}

std::vector<Complex> sextic_roots_numeric(const Complex &A, const Complex &B) {
  std::vector<Complex> y3 = solve_quadratic(Complex{Real(1), Real(0)}, A, B);
  Complex u = complex_cbrt(y3[0]);
  Complex v = complex_cbrt(y3[1]);
  Complex w = zeta3();
  return {u, u * w, u * w * w, v, v * w, v * w * w};
}

} // namespace

std::optional<Polynomial> sextic_trinomial_irreducible_char0(const FieldElement &a,
                                                             const FieldElement &b) {
  if (a.field() != b.field())
    throw FieldMismatchError("coefficients from different fields");
  const FieldDescriptor &K = a.field();
  if (K.kind() == FieldKind::Finite)
    throw PreconditionError("characteristic-0 irreducibility called on a finite field");
  if (b.is_zero())
    return x_poly(K);
  FieldElement delta = a * a - K.from_integer(4) * b;
  if (delta.is_zero()) {
    // f = (x^3 + a/2)^2.
    FieldElement half_a = a / K.from_integer(2);
    return Polynomial(K, {half_a, K.zero(), K.zero(), K.one()});
  }
  // Clear denominators: g(y) = y^6 + (lam^3 a) y^3 + (lam^6 b) has algebraic
  // integer coefficients, y = lam x.
  Int lam(1);
  if (K.kind() == FieldKind::Rationals) {
    lam = lcm_int(den(a.rational()), den(b.rational()));
  } else {
    lam = lcm_int(lcm_int(den(a.quad_u()), den(a.quad_v())),
                  lcm_int(den(b.quad_u()), den(b.quad_v())));
  }
  FieldElement lam_el = K.from_integer(lam);
  FieldElement A = a * lam_el.pow(3);
  FieldElement B = b * lam_el.pow(6);
  Polynomial g = sextic_trinomial(A, B);
  bool quad_field = K.kind() == FieldKind::QuadExt;
  Int grid = quad_field ? Int(2) : Int(1);

  for (unsigned bits = 256; bits <= 4096; bits *= 2) {
    PrecisionScope scope(bits);
    std::vector<Complex> gcs, gct;
    for (int i = 0; i <= 6; ++i) {
      gcs.push_back(embed(g.coeff(i), false));
      if (quad_field)
        gct.push_back(embed(g.coeff(i), true));
    }
    std::vector<Complex> rs = sextic_roots_numeric(gcs[3], gcs[0]);
    std::vector<Complex> rt;
    if (quad_field)
      rt = sextic_roots_numeric(gct[3], gct[0]);
    Real max_err(0), max_abs(0);
    for (auto &rho : rs) {
      rho = newton_polish(gcs, rho);
      max_err = (std::max)(max_err, root_error_bound(gcs, rho));
      max_abs = (std::max)(max_abs, complex_abs(rho));
    }
    for (auto &rho : rt) {
      rho = newton_polish(gct, rho);
      max_err = (std::max)(max_err, root_error_bound(gct, rho));
      max_abs = (std::max)(max_abs, complex_abs(rho));
    }
    // First-order propagation into elementary symmetric functions of at most
    // three roots, with margin; sound because every candidate is verified by
    // exact division and a missed true factor would need a rounding error
    // \geq 1/(4 grid).
    Real coeff_err = Real(10) * (max_abs + 1) * (max_abs + 1) * max_err;
    if (!(coeff_err < Real(1) / (Real(8) * Real(grid))))
      continue;

    std::vector<unsigned> masks;
    for (unsigned mask = 1; mask < 64; ++mask)
      if (__builtin_popcount(mask) <= 3)
        masks.push_back(mask);

    auto finish = [&](const Polynomial &witness_g, int m) {
      // Map the factor of g back to a factor of f: h(x) = witness_g(lam x)/lam^m.
      std::vector<FieldElement> hc;
      FieldElement lam_pow = K.one();
      for (int i = m; i >= 0; --i) {
        // coefficient of x^i is witness_g[i] * lam^i / lam^m; iterate from the
        // top so lam_pow tracks lam^{m-i}.
        hc.push_back(witness_g.coeff(i) / lam_pow);
        lam_pow = lam_pow * lam_el;
      }
      std::reverse(hc.begin(), hc.end());
      return Polynomial(K, std::move(hc));
    };

    if (!quad_field) {
      for (unsigned mask : masks) {
        int m = __builtin_popcount(mask);
        std::vector<Complex> pc = monic_from_roots(rs, mask);
        std::vector<FieldElement> hc;
        bool plausible = true;
        for (int i = 0; i <= m; ++i) {
          if (boost::multiprecision::abs(pc[static_cast<std::size_t>(i)].im) > Real(1) / 4) {
            plausible = false;
            break;
          }
          hc.push_back(K.from_rational(round_to_grid(pc[static_cast<std::size_t>(i)].re, grid)));
        }
        if (!plausible)
          continue;
        Polynomial h(K, std::move(hc));
        if (h.degree() == m && h.is_monic() && g.divisible_by(h))
          return finish(h, m);
      }
      return std::nullopt;
    }

    Complex s = complex_sqrt(Complex{Real(K.d()), Real(0)});
    for (unsigned mask_s : masks) {
      int m = __builtin_popcount(mask_s);
      std::vector<Complex> ps = monic_from_roots(rs, mask_s);
      for (unsigned mask_t : masks) {
        if (__builtin_popcount(mask_t) != m)
          continue;
        std::vector<Complex> pt = monic_from_roots(rt, mask_t);
        std::vector<FieldElement> hc;
        bool plausible = true;
        for (int i = 0; i <= m; ++i) {
          Complex usum = (ps[static_cast<std::size_t>(i)] + pt[static_cast<std::size_t>(i)]) *
                         Complex{Real(1) / 2, Real(0)};
          Complex vdiff = (ps[static_cast<std::size_t>(i)] - pt[static_cast<std::size_t>(i)]) / (s + s);
          if (boost::multiprecision::abs(usum.im) > Real(1) / 4 ||
              boost::multiprecision::abs(vdiff.im) > Real(1) / 4) {
            plausible = false;
            break;
          }
          hc.push_back(K.quad(round_to_grid(usum.re, grid), round_to_grid(vdiff.re, grid)));
        }
        if (!plausible)
          continue;
        Polynomial h(K, std::move(hc));
        if (h.degree() == m && h.is_monic() && g.divisible_by(h))
          return finish(h, m);
      }
    }
    return std::nullopt;
  }
  throw PrecisionError("irreducibility search exceeded the precision cap");
}

} // namespace sextic
