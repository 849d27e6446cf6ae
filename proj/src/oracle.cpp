#include "sextic/oracle.hpp"

#include "sextic/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace sextic {

CycleType cycle_type(const Perm6 &p) {
  std::array<bool, 6> seen{};
  CycleType t;
  for (int i = 0; i < 6; ++i) {
    if (seen[static_cast<std::size_t>(i)])
      continue;
    int len = 0, j = i;
    while (!seen[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
      j = p[static_cast<std::size_t>(j)];
      ++len;
    }
    t.push_back(len);
  }
  std::sort(t.rbegin(), t.rend());
  return t;
}

std::string cycle_type_name(const CycleType &t) {
  std::string s = "[";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i)
      s += ",";
    s += std::to_string(t[i]);
  }
  return s + "]";
}

Perm6 induced_permutation(const AtomAction &atoms) {
  int s = atoms.alpha_slot, j = atoms.zeta_pow, k = atoms.cbrt_pow;
  auto norm = [](int x) { return ((x % 3) + 3) % 3; };
  Perm6 p{};
  for (int m = 0; m < 3; ++m) {
    // F(alpha zeta^m) = F(alpha) zeta^{jm}
    if (s < 3)
      p[static_cast<std::size_t>(m)] = norm(s + j * m);
    else
      p[static_cast<std::size_t>(m)] = 3 + norm(s - 3 + j * m);
  }
  for (int m = 0; m < 3; ++m) {
    // F(beta zeta^m) = (F(cbrt b)/F(alpha)) zeta^{jm}
    if (s < 3)
      p[static_cast<std::size_t>(3 + m)] = 3 + norm(k - s + j * m);
    else
      p[static_cast<std::size_t>(3 + m)] = norm(k - (s - 3) + j * m);
  }
  return p;
}

namespace {

Perm6 compose(const Perm6 &f, const Perm6 &g) {
  Perm6 r{};
  for (int i = 0; i < 6; ++i)
    r[static_cast<std::size_t>(i)] = f[static_cast<std::size_t>(g[static_cast<std::size_t>(i)])];
  return r;
}

Perm6 identity_perm() { return {0, 1, 2, 3, 4, 5}; }

bool cube_in_k_branch(Branch b) {
  return b == Branch::Case1D6CubeInK || b == Branch::Case2C6 || b == Branch::Case3S3;
}

bool resolvent_reducible_branch(Branch b) {
  return b == Branch::Case1D6RReducible || b == Branch::Case2S3 || b == Branch::Case3C6;
}

void validate_model(const PermutationModel &model) {
  int expected = group_order(model.tag);
  if (static_cast<int>(model.elements.size()) != expected)
    throw ModelConstructionError("wrong element count for " + group_tag_name(model.tag));
  std::set<Perm6> perms;
  for (const auto &el : model.elements)
    perms.insert(el.perm);
  if (static_cast<int>(perms.size()) != expected)
    throw ModelConstructionError("duplicate permutations in " + group_tag_name(model.tag));
  if (!perms.count(identity_perm()))
    throw ModelConstructionError("missing identity in " + group_tag_name(model.tag));
  for (const auto &x : perms) {
    Perm6 inv{};
    for (int i = 0; i < 6; ++i)
      inv[static_cast<std::size_t>(x[static_cast<std::size_t>(i)])] = i;
    if (!perms.count(inv))
      throw ModelConstructionError("missing inverse in " + group_tag_name(model.tag));
    for (const auto &y : perms)
      if (!perms.count(compose(x, y)))
        throw ModelConstructionError("closure failure in " + group_tag_name(model.tag));
  }
  std::set<int> orbit = {0};
  bool grew = true;
  while (grew) {
    grew = false;
    for (int v : std::vector<int>(orbit.begin(), orbit.end()))
      for (const auto &x : perms)
        if (orbit.insert(x[static_cast<std::size_t>(v)]).second)
          grew = true;
  }
  if (orbit.size() != 6)
    throw ModelConstructionError("action not transitive in " + group_tag_name(model.tag));
}

} // namespace

PermutationModel build_model(Branch branch) {
  PermutationModel model{branch_tag(branch), branch, {}};
  int theorem_case = branch_case(branch);
  bool cube = cube_in_k_branch(branch);
  bool r_red = resolvent_reducible_branch(branch);
  for (int s = 0; s < 6; ++s) {
    std::vector<int> js;
    if (theorem_case == 1)
      js = {1, 2};
    else if (theorem_case == 2)
      js = {s < 3 ? 1 : 2}; // F(zeta3) follows from F(alpha) via sqrt(Delta) = 2 alpha^3 + a
    else
      js = {1}; // zeta3 in K is fixed
    std::vector<int> ks;
    if (cube)
      ks = {0}; // cbrt b in K is fixed
    else if (r_red)
      ks = {((6 - s) % 3)}; // k = -s keeps the resolvent root alpha beta (alpha + beta) fixed
    else
      ks = {0, 1, 2};
    for (int j : js)
      for (int k : ks) {
        AtomAction atoms{s, j, k};
        model.elements.push_back({atoms, induced_permutation(atoms)});
      }
  }
  validate_model(model);
  return model;
}

std::vector<PermutationModel> canonical_models() {
  return {build_model(Branch::Case1D6RReducible), build_model(Branch::Case1S3xS3),
          build_model(Branch::Case2C6), build_model(Branch::Case2S3),
          build_model(Branch::Case2C3xS3)};
}

std::map<CycleType, Rat> cycle_type_profile(const PermutationModel &model) {
  std::map<CycleType, Rat> profile;
  Rat share = Rat(1) / Rat(static_cast<long>(model.elements.size()));
  for (const auto &el : model.elements)
    profile[cycle_type(el.perm)] += share;
  return profile;
}

std::map<CycleType, long long> frobenius_sample(const Int &a, const Int &b,
                                                std::uint64_t prime_bound) {
  FieldDescriptor Q = FieldDescriptor::rationals();
  FieldElement aq = Q.from_integer(a), bq = Q.from_integer(b);
  if (sextic_trinomial_irreducible_char0(aq, bq))
    throw PreconditionError("frobenius_sample requires an irreducible trinomial");
  Int delta = a * a - 4 * b;
  Int skip = 3 * b * delta;
  std::map<CycleType, long long> tally;
  for (std::uint64_t p : primes_up_to(prime_bound)) {
    if (skip % Int(p) == 0)
      continue;
    if (p == 2) {
      // 2 not dividing b and delta = a^2 - 4b forces a, b odd, so
      // f = x^6 + x^3 + 1 mod 2: the ninth cyclotomic polynomial, irreducible
      // over F_2 because 2 has multiplicative order 6 modulo 9.
      ++tally[CycleType{6}];
      continue;
    }
    FieldDescriptor F = FieldDescriptor::finite(p);
    Polynomial fp = sextic_trinomial(F.from_integer(a), F.from_integer(b));
    std::vector<int> degs = factor_degrees(fp);
    std::sort(degs.rbegin(), degs.rend());
    ++tally[degs];
  }
  if (tally.empty())
    throw EmptySampleError("no usable prime below the bound");
  return tally;
}

IdentifyResult identify(const std::map<CycleType, long long> &observed,
                        const std::vector<PermutationModel> &candidates) {
  if (observed.empty())
    throw PreconditionError("identify requires a nonempty observation");
  long long total = 0;
  for (const auto &[type, count] : observed)
    total += count;
  IdentifyResult result;
  result.total = total;
  for (const auto &model : candidates) {
    std::map<CycleType, Rat> profile = cycle_type_profile(model);
    bool supported = true;
    for (const auto &[type, count] : observed)
      if (count > 0 && !profile.count(type)) {
        supported = false;
        break;
      }
    if (!supported) {
      result.excluded.push_back(model.tag);
      continue;
    }
    Rat tv(0);
    std::set<CycleType> types;
    for (const auto &[type, freq] : profile)
      types.insert(type);
    for (const auto &[type, count] : observed)
      types.insert(type);
    for (const auto &type : types) {
      auto obs_it = observed.find(type);
      Rat obs_freq = obs_it == observed.end() ? Rat(0) : Rat(obs_it->second) / Rat(total);
      auto prof_it = profile.find(type);
      Rat prof_freq = prof_it == profile.end() ? Rat(0) : prof_it->second;
      tv += boost::multiprecision::abs(obs_freq - prof_freq);
    }
    tv /= 2;
    result.ranked.push_back({model.tag, tv});
  }
  if (result.ranked.empty())
    throw NoCandidateError("every candidate group was excluded by the observed cycle types");
  std::stable_sort(result.ranked.begin(), result.ranked.end(),
                   [](const RankedCandidate &x, const RankedCandidate &y) {
                     return x.distance < y.distance;
                   });
  result.insufficient_data = result.excluded.empty() && total < 30;
  return result;
}

int ff_splitting_degree(const Polynomial &f) {
  if (f.degree() < 1)
    throw PreconditionError("splitting degree requires a nonconstant polynomial");
  std::vector<int> degs = factor_degrees(f);
  int l = 1;
  for (int d : degs)
    l = std::lcm(l, d);
  return l;
}

std::vector<ScanRow> exhaustive_scan(const std::vector<FieldDescriptor> &fields) {
  std::vector<ScanRow> rows;
  for (const FieldDescriptor &K : fields) {
    if (K.kind() != FieldKind::Finite)
      throw PreconditionError("exhaustive_scan requires finite fields");
    if (!K.order_fits_u64() || K.order_u64() > 4096)
      throw PreconditionError("exhaustive_scan field too large: " + K.to_string());
    std::uint64_t q = K.order_u64();
    ScanRow row{K, K.order()};
    bool char3 = K.characteristic() == 3;
    const std::vector<int> full_degree = {6};
    for (std::uint64_t ai = 0; ai < q; ++ai) {
      FieldElement a = K.element_at(ai);
      for (std::uint64_t bi = 0; bi < q; ++bi) {
        FieldElement b = K.element_at(bi);
        ++row.total_pairs;
        bool predicted = finite_irreducibility(a, b);
        Polynomial f = sextic_trinomial(a, b);
        bool actual = factor_degrees(f) == full_degree;
        std::string reason;
        if (predicted != actual) {
          reason = "criterion mismatch";
        } else if (actual) {
          ++row.irreducible_count;
          if (ff_splitting_degree(f) != 6)
            reason = "splitting degree != 6";
          else if (!char3) {
            ClassificationReport report = classify(a, b);
            if (!report.is_galois_class() || report.galois_class().tag != GroupTag::C6)
              reason = "classification != C6";
          }
        }
        if (!reason.empty()) {
          ++row.disagreements;
          std::ostringstream os;
          os << K.to_string() << " a=" << a.to_string() << " b=" << b.to_string() << ": "
             << reason;
          row.failures.push_back(os.str());
        }
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

} // namespace sextic
