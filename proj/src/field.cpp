#include "sextic/field.hpp"

#include "sextic/errors.hpp"
#include "sextic/poly.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <sstream>

namespace sextic {

namespace {

constexpr std::uint64_t kWitnessSearchBound = 1000000;

std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  if (s >= p || s < a)
    s -= p;
  return s;
}

std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + (p - b);
}

using FF = std::vector<std::uint64_t>;

// Reduces in place by a monic modulus, coefficients lowest-first.
void ff_reduce(FF &c, const FF &modulus, std::uint64_t p) {
  std::size_t k = modulus.size() - 1;
  for (std::size_t i = c.size(); i-- > k;) {
    std::uint64_t lead = c[i];
    if (lead == 0)
      continue;
    c[i] = 0;
    for (std::size_t j = 0; j < k; ++j) {
      std::uint64_t t = mulmod_u64(lead, modulus[j], p);
      c[i - k + j] = submod(c[i - k + j], t, p);
    }
  }
  c.resize(k);
}

FF ff_mul(const FF &a, const FF &b, const FF &modulus, std::uint64_t p) {
  FF prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0)
      continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      prod[i + j] = addmod(prod[i + j], mulmod_u64(a[i], b[j], p), p);
  }
  ff_reduce(prod, modulus, p);
  return prod;
}

} // namespace

struct FieldDescriptor::Impl {
  FieldKind kind = FieldKind::Rationals;
  long long d = 0;
  std::uint64_t p = 0;
  unsigned k = 1;
  std::vector<std::uint64_t> modulus;
  Int q = 0;
};

FieldDescriptor FieldDescriptor::rationals() {
  static const auto impl = std::make_shared<const Impl>(Impl{FieldKind::Rationals, 0, 0, 1, {}, 0});
  return FieldDescriptor(impl);
}

FieldDescriptor FieldDescriptor::quadratic(long long d) {
  if (d == 0 || d == 1)
    throw InvalidFieldError("quadratic field radicand must not be 0 or 1");
  if (d > 1000000000000LL || d < -1000000000000LL)
    throw InvalidFieldError("quadratic field radicand exceeds the supported range |d| <= 1e12");
  if (!is_squarefree(d))
    throw InvalidFieldError("quadratic field radicand must be squarefree");
  auto impl = std::make_shared<Impl>();
  impl->kind = FieldKind::QuadExt;
  impl->d = d;
  return FieldDescriptor(std::move(impl));
}

FieldDescriptor FieldDescriptor::finite(std::uint64_t p, unsigned k) {
  if (p == 2)
    throw UnsupportedCharacteristicError("characteristic 2 fields are not supported");
  if (!is_prime_u64(p))
    throw InvalidFieldError("finite field characteristic must be prime");
  if (k < 1 || k > 64)
    throw InvalidFieldError("finite field extension degree must be in [1, 64]");
  auto impl = std::make_shared<Impl>();
  impl->kind = FieldKind::Finite;
  impl->p = p;
  impl->k = k;
  impl->q = boost::multiprecision::pow(Int(p), k);
  if (k == 1) {
    impl->modulus = {0, 1}; // x
  } else {
    // Lexicographically smallest monic irreducible of degree k over F_p,
    // comparing (c_{k-1}, ..., c_1, c_0) with the constant term last.
    FieldDescriptor prime_field = finite(p, 1);
    std::vector<std::uint64_t> tuple(k, 0);
    for (;;) {
      std::vector<FieldElement> coeffs;
      coeffs.reserve(k + 1);
      for (unsigned i = 0; i < k; ++i)
        coeffs.push_back(prime_field.from_coeffs({tuple[k - 1 - i]}));
      coeffs.push_back(prime_field.one());
      Polynomial candidate(prime_field, std::move(coeffs));
      std::vector<int> degs = factor_degrees(candidate);
      if (degs.size() == 1 && degs[0] == static_cast<int>(k)) {
        impl->modulus.assign(k + 1, 0);
        impl->modulus[k] = 1;
        for (unsigned i = 0; i < k; ++i)
          impl->modulus[i] = tuple[k - 1 - i];
        break;
      }
      // Next tuple in lex order; an irreducible of every degree exists, so
      // the search always terminates before wrapping.
      std::size_t pos = k;
      while (pos-- > 0) {
        if (++tuple[pos] < p)
          break;
        tuple[pos] = 0;
      }
    }
  }
  return FieldDescriptor(std::move(impl));
}

FieldKind FieldDescriptor::kind() const { return impl_->kind; }

long long FieldDescriptor::d() const {
  assert(impl_->kind == FieldKind::QuadExt);
  return impl_->d;
}

std::uint64_t FieldDescriptor::characteristic() const {
  return impl_->kind == FieldKind::Finite ? impl_->p : 0;
}

unsigned FieldDescriptor::extension_degree() const {
  return impl_->kind == FieldKind::Finite ? impl_->k : (impl_->kind == FieldKind::QuadExt ? 2 : 1);
}

const std::vector<std::uint64_t> &FieldDescriptor::modulus() const {
  assert(impl_->kind == FieldKind::Finite);
  return impl_->modulus;
}

Int FieldDescriptor::order() const {
  assert(impl_->kind == FieldKind::Finite);
  return impl_->q;
}

bool FieldDescriptor::order_fits_u64() const {
  return impl_->kind == FieldKind::Finite && mpz_fits_ulong_p(impl_->q.backend().data()) != 0;
}

std::uint64_t FieldDescriptor::order_u64() const {
  assert(order_fits_u64());
  return impl_->q.convert_to<std::uint64_t>();
}

bool FieldDescriptor::operator==(const FieldDescriptor &other) const {
  if (impl_ == other.impl_)
    return true;
  if (impl_->kind != other.impl_->kind)
    return false;
  switch (impl_->kind) {
  case FieldKind::Rationals:
    return true;
  case FieldKind::QuadExt:
    return impl_->d == other.impl_->d;
  case FieldKind::Finite:
    return impl_->p == other.impl_->p && impl_->k == other.impl_->k;
  }
  return false;
}

std::string FieldDescriptor::to_string() const {
  switch (impl_->kind) {
  case FieldKind::Rationals:
    return "Q";
  case FieldKind::QuadExt:
    return "Q(sqrt " + std::to_string(impl_->d) + ")";
  case FieldKind::Finite:
    if (impl_->k == 1)
      return "F{" + std::to_string(impl_->p) + "}";
    return "F{" + std::to_string(impl_->p) + "^" + std::to_string(impl_->k) + "}";
  }
  return {};
}

FieldElement FieldDescriptor::zero() const { return from_integer(0); }
FieldElement FieldDescriptor::one() const { return from_integer(1); }

FieldElement FieldDescriptor::from_integer(const Int &n) const {
  switch (impl_->kind) {
  case FieldKind::Rationals:
    return FieldElement(*this, Rat(n));
  case FieldKind::QuadExt:
    return FieldElement(*this, FieldElement::Quad{Rat(n), Rat(0)});
  case FieldKind::Finite: {
    Int r = n % Int(impl_->p);
    if (r < 0)
      r += Int(impl_->p);
    FF c(impl_->k, 0);
    c[0] = r.convert_to<std::uint64_t>();
    return FieldElement(*this, std::move(c));
  }
  }
  throw Error("unreachable");
}

FieldElement FieldDescriptor::from_rational(const Rat &q) const {
  switch (impl_->kind) {
  case FieldKind::Rationals:
    return FieldElement(*this, q);
  case FieldKind::QuadExt:
    return FieldElement(*this, FieldElement::Quad{q, Rat(0)});
  case FieldKind::Finite:
    throw PreconditionError("rational coefficients require a characteristic-0 field");
  }
  throw Error("unreachable");
}

FieldElement FieldDescriptor::quad(const Rat &u, const Rat &v) const {
  if (impl_->kind != FieldKind::QuadExt)
    throw PreconditionError("quad() requires a quadratic extension field");
  return FieldElement(*this, FieldElement::Quad{u, v});
}

FieldElement FieldDescriptor::from_coeffs(std::vector<std::uint64_t> c) const {
  if (impl_->kind != FieldKind::Finite)
    throw PreconditionError("from_coeffs() requires a finite field");
  if (c.size() > impl_->k)
    throw PreconditionError("coefficient vector longer than the extension degree");
  for (auto &x : c)
    x %= impl_->p;
  c.resize(impl_->k, 0);
  return FieldElement(*this, std::move(c));
}

FieldElement FieldDescriptor::element_at(std::uint64_t index) const {
  if (impl_->kind != FieldKind::Finite)
    throw PreconditionError("element_at() requires a finite field");
  FF c(impl_->k, 0);
  for (unsigned i = 0; i < impl_->k && index; ++i) {
    c[i] = index % impl_->p;
    index /= impl_->p;
  }
  return FieldElement(*this, std::move(c));
}

namespace {

void expect_same_field(const FieldElement &a, const FieldElement &b) {
  if (a.field() != b.field())
    throw FieldMismatchError("operands belong to different fields");
}

} // namespace

bool FieldElement::is_zero() const {
  switch (rep_.index()) {
  case 0:
    return std::get<Rat>(rep_) == 0;
  case 1: {
    const Quad &q = std::get<Quad>(rep_);
    return q.u == 0 && q.v == 0;
  }
  default: {
    const FF &c = std::get<FF>(rep_);
    return std::all_of(c.begin(), c.end(), [](std::uint64_t x) { return x == 0; });
  }
  }
}

bool FieldElement::is_one() const { return *this == field_.one(); }

FieldElement FieldElement::operator-() const {
  switch (rep_.index()) {
  case 0:
    return FieldElement(field_, Rat(-std::get<Rat>(rep_)));
  case 1: {
    const Quad &q = std::get<Quad>(rep_);
    return FieldElement(field_, Quad{-q.u, -q.v});
  }
  default: {
    FF c = std::get<FF>(rep_);
    std::uint64_t p = field_.characteristic();
    for (auto &x : c)
      x = x == 0 ? 0 : p - x;
    return FieldElement(field_, std::move(c));
  }
  }
}

FieldElement FieldElement::operator+(const FieldElement &rhs) const {
  expect_same_field(*this, rhs);
  switch (rep_.index()) {
  case 0:
    return FieldElement(field_, Rat(std::get<Rat>(rep_) + std::get<Rat>(rhs.rep_)));
  case 1: {
    const Quad &a = std::get<Quad>(rep_);
    const Quad &b = std::get<Quad>(rhs.rep_);
    return FieldElement(field_, Quad{a.u + b.u, a.v + b.v});
  }
  default: {
    FF c = std::get<FF>(rep_);
    const FF &b = std::get<FF>(rhs.rep_);
    std::uint64_t p = field_.characteristic();
    for (std::size_t i = 0; i < c.size(); ++i)
      c[i] = addmod(c[i], b[i], p);
    return FieldElement(field_, std::move(c));
  }
  }
}

FieldElement FieldElement::operator-(const FieldElement &rhs) const {
  expect_same_field(*this, rhs);
  switch (rep_.index()) {
  case 0:
    return FieldElement(field_, Rat(std::get<Rat>(rep_) - std::get<Rat>(rhs.rep_)));
  case 1: {
    const Quad &a = std::get<Quad>(rep_);
    const Quad &b = std::get<Quad>(rhs.rep_);
    return FieldElement(field_, Quad{a.u - b.u, a.v - b.v});
  }
  default: {
    FF c = std::get<FF>(rep_);
    const FF &b = std::get<FF>(rhs.rep_);
    std::uint64_t p = field_.characteristic();
    for (std::size_t i = 0; i < c.size(); ++i)
      c[i] = submod(c[i], b[i], p);
    return FieldElement(field_, std::move(c));
  }
  }
}

FieldElement FieldElement::operator*(const FieldElement &rhs) const {
  expect_same_field(*this, rhs);
  switch (rep_.index()) {
  case 0:
    return FieldElement(field_, Rat(std::get<Rat>(rep_) * std::get<Rat>(rhs.rep_)));
  case 1: {
    const Quad &a = std::get<Quad>(rep_);
    const Quad &b = std::get<Quad>(rhs.rep_);
    Rat d(field_.d());
    return FieldElement(field_, Quad{a.u * b.u + d * a.v * b.v, a.u * b.v + a.v * b.u});
  }
  default:
    return FieldElement(field_, ff_mul(std::get<FF>(rep_), std::get<FF>(rhs.rep_),
                                       field_.modulus(), field_.characteristic()));
  }
}

FieldElement FieldElement::inverse() const {
  if (is_zero())
    throw PreconditionError("division by zero");
  switch (rep_.index()) {
  case 0:
    return FieldElement(field_, Rat(1 / std::get<Rat>(rep_)));
  case 1: {
    const Quad &a = std::get<Quad>(rep_);
    // 1/(u + v s) = (u - v s)/(u^2 - d v^2); the norm vanishes only at 0
    // because d is squarefree and != 1.
    Rat n = a.u * a.u - Rat(field_.d()) * a.v * a.v;
    return FieldElement(field_, Quad{a.u / n, -a.v / n});
  }
  default:
    return pow(field_.order() - 2);
  }
}

FieldElement FieldElement::operator/(const FieldElement &rhs) const {
  return *this * rhs.inverse();
}

FieldElement FieldElement::pow(Int e) const {
  if (e < 0)
    return inverse().pow(-e);
  FieldElement result = field_.one();
  FieldElement base = *this;
  while (e > 0) {
    if (boost::multiprecision::bit_test(e, 0))
      result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

bool FieldElement::operator==(const FieldElement &rhs) const {
  if (field_ != rhs.field_)
    return false;
  return rep_ == rhs.rep_;
}

const Rat &FieldElement::rational() const { return std::get<Rat>(rep_); }
const Rat &FieldElement::quad_u() const { return std::get<Quad>(rep_).u; }
const Rat &FieldElement::quad_v() const { return std::get<Quad>(rep_).v; }
const std::vector<std::uint64_t> &FieldElement::coeffs() const { return std::get<FF>(rep_); }

namespace {

std::string rat_str(const Rat &q) {
  std::ostringstream os;
  os << num(q) << "/" << den(q);
  return os.str();
}

} // namespace

std::string FieldElement::to_string() const {
  switch (rep_.index()) {
  case 0:
    return rat_str(std::get<Rat>(rep_));
  case 1: {
    const Quad &q = std::get<Quad>(rep_);
    std::string s = rat_str(q.u);
    s += q.v < 0 ? "-" : "+";
    s += rat_str(boost::multiprecision::abs(q.v));
    s += "*s";
    return s;
  }
  default: {
    const FF &c = std::get<FF>(rep_);
    if (c.size() == 1)
      return std::to_string(c[0]);
    std::string s = "[";
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i)
        s += ",";
      s += std::to_string(c[i]);
    }
    s += "]";
    return s;
  }
  }
}

namespace {

// Sequential search for an element failing the given power criterion; used to
// find quadratic and cubic nonresidues deterministically.
FieldElement find_nonresidue(const FieldDescriptor &K, const Int &exponent) {
  for (std::uint64_t idx = 2;; ++idx) {
    FieldElement g = K.element_at(idx);
    if (g.is_zero())
      continue;
    if (!g.pow(exponent).is_one())
      return g;
  }
}

std::optional<FieldElement> finite_sqrt(const FieldElement &x) {
  const FieldDescriptor &K = x.field();
  Int q = K.order();
  if (x.is_zero())
    return K.zero();
  if (!x.pow((q - 1) / 2).is_one())
    return std::nullopt;
  if (K.order_fits_u64() && K.order_u64() <= kWitnessSearchBound) {
    std::uint64_t qq = K.order_u64();
    for (std::uint64_t idx = 0; idx < qq; ++idx) {
      FieldElement s = K.element_at(idx);
      if (s * s == x)
        return s;
    }
    return std::nullopt; // unreachable: Euler's criterion held
  }
  // Tonelli-Shanks, generic over the field arithmetic.
  Int t = q - 1;
  int s = 0;
  while (bit_test(t, 0) == 0) {
    t >>= 1;
    ++s;
  }
  FieldElement z = find_nonresidue(K, (q - 1) / 2);
  FieldElement c = z.pow(t);
  FieldElement u = x.pow(t);
  FieldElement r = x.pow((t + 1) / 2);
  int m = s;
  while (!u.is_one()) {
    FieldElement probe = u;
    int i = 0;
    while (!probe.is_one()) {
      probe = probe * probe;
      ++i;
    }
    FieldElement b = c;
    for (int j = 0; j < m - i - 1; ++j)
      b = b * b;
    m = i;
    c = b * b;
    u = u * c;
    r = r * b;
  }
  return r;
}

// Discrete log base g within the cyclic 3-subgroup of order 3^s, digit by
// digit (Pohlig-Hellman). Precondition: h lies in <g>.
Int pow3_discrete_log(const FieldElement &h, const FieldElement &g, int s) {
  const FieldDescriptor &K = h.field();
  FieldElement omega = g;
  for (int i = 0; i < s - 1; ++i)
    omega = omega * omega * omega;
  FieldElement omega2 = omega * omega;
  Int j = 0;
  Int pow3_i = 1;
  FieldElement g_inv = g.inverse();
  for (int i = 0; i < s; ++i) {
    FieldElement probe = h * g_inv.pow(j);
    for (int step = 0; step < s - 1 - i; ++step)
      probe = probe * probe * probe;
    int digit;
    if (probe.is_one())
      digit = 0;
    else if (probe == omega)
      digit = 1;
    else if (probe == omega2)
      digit = 2;
    else
      throw Error("element outside the expected 3-subgroup");
    j += digit * pow3_i;
    pow3_i *= 3;
  }
  (void)K;
  return j;
}

std::optional<FieldElement> finite_cbrt(const FieldElement &x) {
  const FieldDescriptor &K = x.field();
  Int q = K.order();
  if (x.is_zero())
    return K.zero();
  if ((q - 1) % 3 != 0) {
    // Cubing is a bijection; invert the exponent.
    Int qm1 = q - 1;
    Int inv3;
    mpz_invert(inv3.backend().data(), Int(3).backend().data(), qm1.backend().data());
    FieldElement w = x.pow(inv3);
    return w;
  }
  if (!x.pow((q - 1) / 3).is_one())
    return std::nullopt;
  if (K.order_fits_u64() && K.order_u64() <= kWitnessSearchBound) {
    std::uint64_t qq = K.order_u64();
    for (std::uint64_t idx = 0; idx < qq; ++idx) {
      FieldElement c = K.element_at(idx);
      if (c * c * c == x)
        return c;
    }
    return std::nullopt; // unreachable: the cube criterion held
  }
  // Cube-root extraction in the style of Tonelli-Shanks: split q-1 = 3^s t,
  // take x^(3^-1 mod t) and correct by an element of the 3-subgroup.
  Int t = q - 1;
  int s = 0;
  while (t % 3 == 0) {
    t /= 3;
    ++s;
  }
  Int inv3_mod_t;
  mpz_invert(inv3_mod_t.backend().data(), Int(3).backend().data(), t.backend().data());
  Int m = (Int(3) * inv3_mod_t - 1) / t;
  FieldElement g = find_nonresidue(K, (q - 1) / 3);
  FieldElement G = g.pow(t);
  FieldElement v = x.pow(inv3_mod_t);
  // v^3 = x * (x^t)^m, and (x^t)^(-m) = G^j with 3 | j.
  FieldElement h = x.pow(t).pow(m).inverse();
  Int j = pow3_discrete_log(h, G, s);
  if (j % 3 != 0)
    throw Error("cube criterion inconsistent with 3-subgroup log");
  return v * G.pow(j / 3);
}

std::optional<FieldElement> quad_sqrt(const FieldElement &x) {
  const FieldDescriptor &K = x.field();
  Rat u = x.quad_u(), v = x.quad_v();
  Rat d(K.d());
  if (v == 0) {
    if (auto s = rat_sqrt(u))
      return K.quad(*s, 0);
    if (auto t = rat_sqrt(u / d))
      return K.quad(0, *t);
    return std::nullopt;
  }
  // (s + t sqrt d)^2 = x forces s^2 = (u +- sqrt(u^2 - d v^2))/2, t = v/(2s).
  auto m = rat_sqrt(u * u - d * v * v);
  if (!m)
    return std::nullopt;
  for (const Rat &mm : {*m, Rat(-*m)}) {
    Rat half = (u + mm) / 2;
    if (auto s = rat_sqrt(half)) {
      if (*s != 0) {
        Rat t = v / (2 * *s);
        FieldElement w = K.quad(*s, t);
        if (w * w == x)
          return w;
      }
    }
  }
  return std::nullopt;
}

} // namespace

std::optional<FieldElement> is_square(const FieldElement &x) {
  switch (x.field().kind()) {
  case FieldKind::Rationals: {
    auto r = rat_sqrt(x.rational());
    if (!r)
      return std::nullopt;
    return x.field().from_rational(*r);
  }
  case FieldKind::QuadExt:
    return quad_sqrt(x);
  case FieldKind::Finite:
    return finite_sqrt(x);
  }
  throw Error("unreachable");
}

std::optional<FieldElement> is_cube(const FieldElement &x) {
  switch (x.field().kind()) {
  case FieldKind::Rationals: {
    auto r = rat_cbrt(x.rational());
    if (!r)
      return std::nullopt;
    return x.field().from_rational(*r);
  }
  case FieldKind::QuadExt: {
    // Solve t^3 - x over Q(sqrt d).
    const FieldDescriptor &K = x.field();
    Polynomial cubic(K, {-x, K.zero(), K.zero(), K.one()});
    return cubic_rational_root(cubic);
  }
  case FieldKind::Finite:
    return finite_cbrt(x);
  }
  throw Error("unreachable");
}

bool contains_primitive_cube_root(const FieldDescriptor &K) {
  switch (K.kind()) {
  case FieldKind::Rationals:
    return false;
  case FieldKind::QuadExt:
    return K.d() == -3;
  case FieldKind::Finite:
    return (K.order() - 1) % 3 == 0;
  }
  throw Error("unreachable");
}

FieldDescriptor make_field(std::string_view spec) {
  if (spec == "Q")
    return FieldDescriptor::rationals();
  if (spec.starts_with("Q(sqrt ") && spec.ends_with(")")) {
    std::string_view body = spec.substr(7, spec.size() - 8);
    long long d = 0;
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), d);
    if (ec != std::errc() || ptr != body.data() + body.size())
      throw ParseError("malformed quadratic field spec: " + std::string(spec));
    return FieldDescriptor::quadratic(d);
  }
  if (spec.starts_with("F{") && spec.ends_with("}")) {
    std::string_view body = spec.substr(2, spec.size() - 3);
    std::uint64_t p = 0;
    unsigned k = 1;
    auto caret = body.find('^');
    std::string_view p_part = caret == std::string_view::npos ? body : body.substr(0, caret);
    auto [pp, pe] = std::from_chars(p_part.data(), p_part.data() + p_part.size(), p);
    if (pe != std::errc() || pp != p_part.data() + p_part.size() || p_part.empty())
      throw ParseError("malformed finite field spec: " + std::string(spec));
    if (caret != std::string_view::npos) {
      std::string_view k_part = body.substr(caret + 1);
      auto [kp, ke] = std::from_chars(k_part.data(), k_part.data() + k_part.size(), k);
      if (ke != std::errc() || kp != k_part.data() + k_part.size() || k_part.empty())
        throw ParseError("malformed finite field spec: " + std::string(spec));
    }
    return FieldDescriptor::finite(p, k);
  }
  throw ParseError("unrecognized field spec: " + std::string(spec));
}

} // namespace sextic
