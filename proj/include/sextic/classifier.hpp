#ifndef SEXTIC_CLASSIFIER_H
#define SEXTIC_CLASSIFIER_H

#include "sextic/field.hpp"
#include "sextic/poly.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace sextic {

enum class GroupTag { D6, S3xS3, C6, S3, C3xS3 };

/// The nine leaves of the decision tree for irreducible x^6 + a x^3 + b.
enum class Branch {
  Case1D6CubeInK,
  Case1D6RReducible,
  Case1S3xS3,
  Case2C6,
  Case2S3,
  Case2C3xS3,
  Case3S3,
  Case3C6,
  Case3C3xS3,
};

int group_order(GroupTag tag);
GroupTag branch_tag(Branch branch);
int branch_case(Branch branch);
std::string group_tag_name(GroupTag tag);
std::string branch_name(Branch branch);

/// The exact quantities the decision tree consults, with witnesses.
struct Predicates {
  FieldElement delta;       // a^2 - 4b
  Polynomial resolvent;     // x^3 - 3bx + ab
  bool zeta3_in_K = false;
  bool neg3delta_square = false; // delta = -3n^2 for some n in K
  std::optional<FieldElement> n_witness;
  bool b_is_cube = false;
  std::optional<FieldElement> cube_witness;
  bool r_irreducible = false;
  std::optional<FieldElement> r_root;
  bool separable = false; // 729 b^2 delta^3 != 0
};

struct GaloisClass {
  GroupTag tag;
  int order;
  int theorem_case;
  Branch branch;
};

/// Witness for a reducible input: an exact proper factor over
/// characteristic 0, the irreducible-factor degree multiset over F_q.
struct ReducibleWitness {
  std::optional<Polynomial> factor;
  std::vector<int> degrees;
};

/// Kept for the result taxonomy; no currently constructible field reaches it
/// (finite characteristic-3 inputs report Reducible instead).
struct InseparableChar3 {};

struct Unsupported {
  std::string reason;
};

struct ClassificationReport {
  FieldElement a, b;
  Polynomial f;
  Predicates predicates;
  std::variant<GaloisClass, ReducibleWitness, InseparableChar3, Unsupported> result;

  const FieldDescriptor &field() const { return a.field(); }
  bool is_galois_class() const { return std::holds_alternative<GaloisClass>(result); }
  const GaloisClass &galois_class() const { return std::get<GaloisClass>(result); }
};

/// Populates every predicate with exact witnesses.
Predicates compute_predicates(const FieldElement &a, const FieldElement &b);

/// Full classification: irreducibility first, then the nine-branch tree.
/// The excluded cell (cube root of b in K together with a reducible
/// resolvent, for irreducible f) throws InternalInconsistencyError.
ClassificationReport classify(const FieldElement &a, const FieldElement &b);

/// Irreducibility of x^6 + a x^3 + b over F_{p^k} by the closed-form
/// criterion alone: p = 3 never; q = 1 mod 3 iff b is a non-cube and delta a
/// non-square; otherwise iff the resolvent cubic has no root. Deliberately
/// independent of factor_degrees, which serves as the cross-check oracle.
bool finite_irreducibility(const FieldElement &a, const FieldElement &b);

} // namespace sextic

#endif
