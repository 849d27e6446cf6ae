#ifndef SEXTIC_ORACLE_H
#define SEXTIC_ORACLE_H

#include "sextic/classifier.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace sextic {

/// Permutation of the six root slots, indexed
/// [alpha, alpha*zeta3, alpha*zeta3^2, beta, beta*zeta3, beta*zeta3^2];
/// perm[i] is the image slot of slot i.
using Perm6 = std::array<int, 6>;

/// Partition of 6 in descending order, e.g. {3,3} or {2,2,1,1}.
using CycleType = std::vector<int>;

CycleType cycle_type(const Perm6 &p);
std::string cycle_type_name(const CycleType &t); // "[2,2,1,1]"

/// Images of the three generating radicals: F(alpha) = value of slot
/// alpha_slot, F(zeta3) = zeta3^zeta_pow, F(cbrt b) = cbrt b * zeta3^cbrt_pow.
/// F(beta) follows as F(cbrt b)/F(alpha).
struct AtomAction {
  int alpha_slot;
  int zeta_pow;
  int cbrt_pow;
};

struct ModelElement {
  AtomAction atoms;
  Perm6 perm;
};

/// Explicit group of automorphisms acting on the six slots, built from the
/// branch's constraints on (alpha_slot, zeta_pow, cbrt_pow) and validated.
struct PermutationModel {
  GroupTag tag;
  Branch branch;
  std::vector<ModelElement> elements; // identity first, lexicographic (s,j,k)
};

/// The permutation induced by an atom action on the six slots.
Perm6 induced_permutation(const AtomAction &atoms);

/// Constructs and validates the model for a decision-tree branch: exact
/// order, distinct permutations, identity, closure, inverses, transitivity.
/// Any failure throws ModelConstructionError.
PermutationModel build_model(Branch branch);

/// The five models used for identification, one per group tag, in the order
/// D6, S3xS3, C6, S3, C3xS3.
std::vector<PermutationModel> canonical_models();

/// Exact frequency of each cycle type among the model's elements; sums to 1.
std::map<CycleType, Rat> cycle_type_profile(const PermutationModel &model);

/// Dedekind-Frobenius sampling: tallies factor_degrees(f mod p) over primes
/// p <= prime_bound not dividing 3 b delta. Requires integer coefficients
/// and irreducible f over Q; throws EmptySampleError when no prime survives.
std::map<CycleType, long long> frobenius_sample(const Int &a, const Int &b,
                                                std::uint64_t prime_bound);

struct RankedCandidate {
  GroupTag tag;
  Rat distance; // total-variation distance to the observed frequencies
};

struct IdentifyResult {
  std::vector<RankedCandidate> ranked; // survivors, ascending distance
  std::vector<GroupTag> excluded;      // support violations, input order
  bool insufficient_data = false;      // all survive on a sample too small
  long long total = 0;                 // observations consumed
  /// True when the two best survivors sit at exactly equal distance.
  bool top_tie() const {
    return ranked.size() >= 2 && ranked[0].distance == ranked[1].distance;
  }
};

/// Sound exclusion (candidate must support every observed type) followed by
/// exact total-variation ranking. Equal distances are reported as ties.
/// All candidates excluded -> NoCandidateError.
IdentifyResult identify(const std::map<CycleType, long long> &observed,
                        const std::vector<PermutationModel> &candidates);

/// Degree of the splitting field over F_q: lcm of the irreducible-factor
/// degrees.
int ff_splitting_degree(const Polynomial &f);

struct ScanRow {
  FieldDescriptor field;
  Int q;
  long long total_pairs = 0;
  long long irreducible_count = 0;
  long long disagreements = 0;
  std::vector<std::string> failures; // offending (q, a, b) with reason
};

/// For every (a,b) in F_q^2, checks finite_irreducibility against
/// factor_degrees == {6}; for each irreducible pair additionally checks
/// splitting degree 6 and (char != 3) classification C6. Any failure is
/// recorded as a disagreement with its witness triple.
std::vector<ScanRow> exhaustive_scan(const std::vector<FieldDescriptor> &fields);

} // namespace sextic

#endif
