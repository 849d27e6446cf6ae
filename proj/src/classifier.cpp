#include "sextic/classifier.hpp"

#include "sextic/errors.hpp"

namespace sextic {

int group_order(GroupTag tag) {
  switch (tag) {
  case GroupTag::D6:
    return 12;
  case GroupTag::S3xS3:
    return 36;
  case GroupTag::C6:
    return 6;
  case GroupTag::S3:
    return 6;
  case GroupTag::C3xS3:
    return 18;
  }
  throw Error("unreachable");
}

GroupTag branch_tag(Branch branch) {
  switch (branch) {
  case Branch::Case1D6CubeInK:
  case Branch::Case1D6RReducible:
    return GroupTag::D6;
  case Branch::Case1S3xS3:
    return GroupTag::S3xS3;
  case Branch::Case2C6:
  case Branch::Case3C6:
    return GroupTag::C6;
  case Branch::Case2S3:
  case Branch::Case3S3:
    return GroupTag::S3;
  case Branch::Case2C3xS3:
  case Branch::Case3C3xS3:
    return GroupTag::C3xS3;
  }
  throw Error("unreachable");
}

int branch_case(Branch branch) {
  switch (branch) {
  case Branch::Case1D6CubeInK:
  case Branch::Case1D6RReducible:
  case Branch::Case1S3xS3:
    return 1;
  case Branch::Case2C6:
  case Branch::Case2S3:
  case Branch::Case2C3xS3:
    return 2;
  case Branch::Case3S3:
  case Branch::Case3C6:
  case Branch::Case3C3xS3:
    return 3;
  }
  throw Error("unreachable");
}

std::string group_tag_name(GroupTag tag) {
  switch (tag) {
  case GroupTag::D6:
    return "D6";
  case GroupTag::S3xS3:
    return "S3xS3";
  case GroupTag::C6:
    return "C6";
  case GroupTag::S3:
    return "S3";
  case GroupTag::C3xS3:
    return "C3xS3";
  }
  throw Error("unreachable");
}

std::string branch_name(Branch branch) {
  switch (branch) {
  case Branch::Case1D6CubeInK:
    return "case1_D6_cube";
  case Branch::Case1D6RReducible:
    return "case1_D6_resolvent";
  case Branch::Case1S3xS3:
    return "case1_S3xS3";
  case Branch::Case2C6:
    return "case2_C6";
  case Branch::Case2S3:
    return "case2_S3";
  case Branch::Case2C3xS3:
    return "case2_C3xS3";
  case Branch::Case3S3:
    return "case3_S3";
  case Branch::Case3C6:
    return "case3_C6";
  case Branch::Case3C3xS3:
    return "case3_C3xS3";
  }
  throw Error("unreachable");
}

Predicates compute_predicates(const FieldElement &a, const FieldElement &b) {
  if (a.field() != b.field())
    throw FieldMismatchError("coefficients from different fields");
  const FieldDescriptor &K = a.field();
  Predicates p{a * a - K.from_integer(4) * b, resolvent_cubic(a, b)};
  p.zeta3_in_K = contains_primitive_cube_root(K);
  if (K.characteristic() == 3) {
    // -3 delta vanishes identically; delta = -3n^2 degenerates to delta = 0.
    p.neg3delta_square = p.delta.is_zero();
    if (p.neg3delta_square)
      p.n_witness = K.zero();
  } else {
    auto s = is_square(K.from_integer(-3) * p.delta);
    p.neg3delta_square = s.has_value();
    if (s)
      p.n_witness = *s / K.from_integer(3); // (3n)^2 = -3 delta = 9 n^2
  }
  auto cube = is_cube(b);
  p.b_is_cube = cube.has_value();
  p.cube_witness = cube;
  auto root = cubic_rational_root(p.resolvent);
  p.r_irreducible = !root.has_value();
  p.r_root = root;
  FieldElement disc_f = K.from_integer(729) * b * b * p.delta * p.delta * p.delta;
  p.separable = !disc_f.is_zero();
  return p;
}

bool finite_irreducibility(const FieldElement &a, const FieldElement &b) {
  if (a.field() != b.field())
    throw FieldMismatchError("coefficients from different fields");
  const FieldDescriptor &K = a.field();
  if (K.kind() != FieldKind::Finite)
    throw PreconditionError("finite_irreducibility requires a finite field");
  if (K.characteristic() == 3)
    return false;
  if ((K.order() - 1) % 3 == 0) {
    FieldElement delta = a * a - K.from_integer(4) * b;
    return !is_cube(b).has_value() && !is_square(delta).has_value();
  }
  return !cubic_rational_root(resolvent_cubic(a, b)).has_value();
}

namespace {

GaloisClass make_class(Branch branch) {
  GroupTag tag = branch_tag(branch);
  return {tag, group_order(tag), branch_case(branch), branch};
}

GaloisClass decide(const Predicates &p) {
  if (p.zeta3_in_K) {
    if (p.b_is_cube && p.r_irreducible)
      return make_class(Branch::Case3S3);
    if (!p.b_is_cube && !p.r_irreducible)
      return make_class(Branch::Case3C6);
    if (!p.b_is_cube && p.r_irreducible)
      return make_class(Branch::Case3C3xS3);
    throw InternalInconsistencyError(
        "irreducible input with a cube root of b in K and a reducible resolvent");
  }
  if (p.neg3delta_square) {
    if (p.b_is_cube && p.r_irreducible)
      return make_class(Branch::Case2C6);
    if (!p.b_is_cube && !p.r_irreducible)
      return make_class(Branch::Case2S3);
    if (!p.b_is_cube && p.r_irreducible)
      return make_class(Branch::Case2C3xS3);
    throw InternalInconsistencyError(
        "irreducible input with a cube root of b in K and a reducible resolvent");
  }
  if (p.b_is_cube && !p.r_irreducible)
    throw InternalInconsistencyError(
        "irreducible input with a cube root of b in K and a reducible resolvent");
  if (p.b_is_cube)
    return make_class(Branch::Case1D6CubeInK);
  if (!p.r_irreducible)
    return make_class(Branch::Case1D6RReducible);
  return make_class(Branch::Case1S3xS3);
}

} // namespace

ClassificationReport classify(const FieldElement &a, const FieldElement &b) {
  if (a.field() != b.field())
    throw FieldMismatchError("coefficients from different fields");
  const FieldDescriptor &K = a.field();
  Polynomial f = sextic_trinomial(a, b);
  if (K.kind() == FieldKind::Finite) {
    Predicates p = compute_predicates(a, b);
    if (!finite_irreducibility(a, b))
      return {a, b, f, std::move(p), ReducibleWitness{std::nullopt, factor_degrees(f)}};
    GaloisClass cls = decide(p);
    return {a, b, f, std::move(p), cls};
  }
  auto witness = sextic_trinomial_irreducible_char0(a, b);
  Predicates p = compute_predicates(a, b);
  if (witness)
    return {a, b, f, std::move(p), ReducibleWitness{std::move(witness), {}}};
  GaloisClass cls = decide(p);
  return {a, b, f, std::move(p), cls};
}

} // namespace sextic
