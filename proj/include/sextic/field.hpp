#ifndef SEXTIC_FIELD_H
#define SEXTIC_FIELD_H

#include "sextic/rational.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace sextic {

enum class FieldKind { Rationals, QuadExt, Finite };

class FieldElement;

/// Shared, immutable description of one of the supported coefficient fields:
/// Q, a quadratic extension Q(sqrt d) with d squarefree, or F_{p^k} with p an
/// odd prime and a fixed monic irreducible modulus of degree k over F_p.
class FieldDescriptor {
public:
  static FieldDescriptor rationals();
  static FieldDescriptor quadratic(long long d);
  static FieldDescriptor finite(std::uint64_t p, unsigned k = 1);

  FieldKind kind() const;
  /// Radicand of a QuadExt field.
  long long d() const;
  /// Characteristic: 0 for Q and Q(sqrt d), p for F_{p^k}.
  std::uint64_t characteristic() const;
  unsigned extension_degree() const;
  /// Modulus of F_{p^k}, lowest-degree coefficient first, length k+1, monic.
  /// Chosen as the lexicographically smallest monic irreducible of degree k
  /// (coefficient tuple compared from the x^{k-1} coefficient down to the
  /// constant term), so descriptors are deterministic.
  const std::vector<std::uint64_t> &modulus() const;
  /// Field order p^k; Finite only.
  Int order() const;
  bool order_fits_u64() const;
  std::uint64_t order_u64() const;

  bool operator==(const FieldDescriptor &other) const;
  bool operator!=(const FieldDescriptor &other) const { return !(*this == other); }

  /// Renders the spec string that make_field would parse back to this field.
  std::string to_string() const;

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_integer(const Int &n) const;
  FieldElement from_rational(const Rat &q) const; // char-0 fields only
  /// QuadExt element u + v*sqrt(d).
  FieldElement quad(const Rat &u, const Rat &v) const;
  /// Finite-field element from coefficient vector over F_p (length <= k).
  FieldElement from_coeffs(std::vector<std::uint64_t> c) const;
  /// index in [0, q): base-p digits become the coefficient vector.
  FieldElement element_at(std::uint64_t index) const;

private:
  struct Impl;
  explicit FieldDescriptor(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
  friend class FieldElement;
};

/// Parses the field grammar: `Q` | `Q(sqrt <int>)` | `F{<prime>}` | `F{<prime>^<k>}`.
FieldDescriptor make_field(std::string_view spec);

/// One element of a FieldDescriptor's field. Rationals are kept in lowest
/// terms with positive denominator; QuadExt elements are coordinate pairs
/// (u, v) meaning u + v*sqrt(d); finite elements are coefficient vectors of
/// length k over F_p, reduced by the field's modulus.
class FieldElement {
public:
  FieldElement() = default;

  const FieldDescriptor &field() const { return field_; }

  bool is_zero() const;
  bool is_one() const;

  FieldElement operator-() const;
  FieldElement operator+(const FieldElement &rhs) const;
  FieldElement operator-(const FieldElement &rhs) const;
  FieldElement operator*(const FieldElement &rhs) const;
  FieldElement operator/(const FieldElement &rhs) const;
  FieldElement inverse() const;
  FieldElement pow(Int e) const;
  bool operator==(const FieldElement &rhs) const;
  bool operator!=(const FieldElement &rhs) const { return !(*this == rhs); }

  const Rat &rational() const;          // Rationals
  const Rat &quad_u() const;            // QuadExt
  const Rat &quad_v() const;            // QuadExt
  const std::vector<std::uint64_t> &coeffs() const; // Finite

  /// Canonical text: "num/den", "u+v*s" (QuadExt), residue or "[c0,c1,...]".
  std::string to_string() const;

private:
  struct Quad {
    Rat u, v;
    bool operator==(const Quad &) const = default;
  };
  using Rep = std::variant<Rat, Quad, std::vector<std::uint64_t>>;
  FieldElement(FieldDescriptor f, Rep rep) : field_(std::move(f)), rep_(std::move(rep)) {}

  FieldDescriptor field_;
  Rep rep_;
  friend class FieldDescriptor;
  friend struct FieldOps;
};

/// Square witness: s with s*s == x, if any. x == 0 yields witness 0.
/// Finite fields use Euler's criterion; the witness comes from exhaustive
/// search for q <= 1e6 and Tonelli-Shanks beyond.
std::optional<FieldElement> is_square(const FieldElement &x);

/// Cube witness: c with c^3 == x, if any. When gcd(3, q-1) = 1 cubing is a
/// bijection and the witness is x^(3^-1 mod q-1); when q = 1 mod 3 the
/// criterion is x^((q-1)/3) == 1 with the witness found by exhaustive search
/// for q <= 1e6 and by cube-root extraction beyond. Over Q(sqrt d) this
/// solves t^3 - x exactly via cubic root finding.
std::optional<FieldElement> is_cube(const FieldElement &x);

/// Whether K contains a primitive cube root of unity: false for Q, d == -3
/// for Q(sqrt d), q = 1 mod 3 for F_q (so always false in characteristic 3).
bool contains_primitive_cube_root(const FieldDescriptor &K);

} // namespace sextic

#endif
