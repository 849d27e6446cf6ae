#ifndef SEXTIC_SUBFIELDS_H
#define SEXTIC_SUBFIELDS_H

#include "sextic/numeric.hpp"
#include "sextic/oracle.hpp"

#include <memory>
#include <string>
#include <vector>

namespace sextic {

/// The seven radicals a generator expression may mention. beta is pinned by
/// the pairing convention alpha*beta = cbrt b (with the resolvent root or the
/// cube witness selecting the branch when one exists).
enum class AtomName { Alpha, Beta, Zeta3, CbrtB, SqrtD, SqrtM3D, ISqrt3 };

/// Numeric values of the atoms for one embedded instance, at the current
/// working precision. The last four are derived: cbrtb = alpha*beta,
/// sqrtD = 2 alpha^3 + a, isqrt3 = 2 zeta3 + 1, sqrtm3D = isqrt3 * sqrtD.
struct AtomValues {
  Complex alpha, beta, zeta3, cbrtb, sqrtD, sqrtm3D, isqrt3;
};

/// Symbolic generator of a subfield: an expression tree over the atoms with
/// sums, differences, products, small integer powers, and zeta3 twists.
class GeneratorExpr {
public:
  static GeneratorExpr atom(AtomName name);
  static GeneratorExpr one();
  GeneratorExpr operator+(const GeneratorExpr &rhs) const;
  GeneratorExpr operator-(const GeneratorExpr &rhs) const;
  GeneratorExpr operator*(const GeneratorExpr &rhs) const;
  GeneratorExpr pow(int n) const;
  /// this * zeta3^i (i mod 3; i = 0 returns the expression unchanged).
  GeneratorExpr twist(int i) const;

  Complex eval(const AtomValues &atoms) const;
  std::string to_string() const;

private:
  enum class Kind { Atom, One, Sum, Diff, Prod, Pow };
  GeneratorExpr(Kind kind, AtomName atom, int exponent, std::shared_ptr<const GeneratorExpr> l,
                std::shared_ptr<const GeneratorExpr> r);
  bool composite() const { return kind_ == Kind::Sum || kind_ == Kind::Diff; }

  Kind kind_;
  AtomName atom_ = AtomName::Alpha;
  int exponent_ = 1;
  std::shared_ptr<const GeneratorExpr> l_, r_;
};

struct SubfieldEntry {
  std::vector<GeneratorExpr> generators;
  int degree;
  bool normal;
  std::string note;
};

/// The complete list of proper intermediate fields for the classified
/// branch, with degrees and normality flags. Requires a GaloisClass result.
std::vector<SubfieldEntry> catalog(const ClassificationReport &report);

/// Atom values for a characteristic-0 instance at the current precision,
/// applying the beta-pairing convention: when the resolvent has the root c
/// in K, beta is chosen with alpha beta (alpha + beta) = c; when b has cube
/// root w in K, with alpha beta = w; otherwise the principal cube root.
AtomValues instance_atoms(const ClassificationReport &report);

struct EntryVerification {
  std::size_t orbit_size = 0;
  bool orbit_ok = false;
  bool normality_ok = false;
  bool passed = false;
};

struct CatalogVerification {
  std::vector<EntryVerification> entries;
  bool distinct_stabilizers = false; // pairwise, among entries of equal degree
  bool all_passed = false;
  unsigned precision_bits = 0; // precision at which comparisons settled
};

/// Checks every entry against the permutation model on a concrete
/// characteristic-0 instance: the orbit of the generator tuple must have
/// size = degree, the stabilizer must be normal exactly when the entry says
/// so, and equal-degree entries must have distinct stabilizers. Numeric
/// equality uses the 2^(-P/2) threshold with escalation on ambiguity.
CatalogVerification verify_catalog(const std::vector<SubfieldEntry> &entries,
                                   const PermutationModel &model,
                                   const ClassificationReport &report);

} // namespace sextic

#endif
