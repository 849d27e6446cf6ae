#include "sextic/rational.hpp"

#include <cstdlib>

namespace sextic {

namespace {

constexpr std::uint64_t kTrialBound = 1000000;

} // namespace

Int iroot(const Int &x, unsigned n, bool &exact) {
  Int r;
  int e = mpz_root(r.backend().data(), x.backend().data(), n);
  exact = (e != 0);
  return r;
}

std::optional<Int> exact_sqrt(const Int &x) {
  if (x < 0)
    return std::nullopt;
  bool exact = false;
  Int r = iroot(x, 2, exact);
  if (!exact)
    return std::nullopt;
  return r;
}

std::optional<Int> exact_cbrt(const Int &x) {
  bool exact = false;
  if (x < 0) {
    Int r = iroot(Int(-x), 3, exact);
    if (!exact)
      return std::nullopt;
    return Int(-r);
  }
  Int r = iroot(x, 3, exact);
  if (!exact)
    return std::nullopt;
  return r;
}

std::optional<Rat> rat_sqrt(const Rat &x) {
  if (x < 0)
    return std::nullopt;
  auto n = exact_sqrt(num(x));
  if (!n)
    return std::nullopt;
  auto d = exact_sqrt(den(x));
  if (!d)
    return std::nullopt;
  return Rat(*n, *d);
}

std::optional<Rat> rat_cbrt(const Rat &x) {
  auto n = exact_cbrt(num(x));
  if (!n)
    return std::nullopt;
  auto d = exact_cbrt(den(x));
  if (!d)
    return std::nullopt;
  return Rat(*n, *d);
}

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1)
      r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0)
      return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic Miller-Rabin base set for n < 3.3e24, covers all of uint64.
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1)
      continue;
    bool composite = true;
    for (int i = 0; i < s - 1; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite)
      return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  if (bound < 2)
    return out;
  std::vector<bool> sieve(bound + 1, true);
  sieve[0] = sieve[1] = false;
  for (std::uint64_t i = 2; i * i <= bound; ++i) {
    if (!sieve[i])
      continue;
    for (std::uint64_t j = i * i; j <= bound; j += i)
      sieve[j] = false;
  }
  for (std::uint64_t i = 2; i <= bound; ++i)
    if (sieve[i])
      out.push_back(i);
  return out;
}

std::vector<std::pair<Int, unsigned>> trial_factor(Int n, bool &complete) {
  std::vector<std::pair<Int, unsigned>> out;
  complete = true;
  if (n < 0)
    n = -n;
  if (n <= 1)
    return out;
  for (std::uint64_t p = 2; p <= kTrialBound && Int(p) * p <= n; p = (p == 2 ? 3 : p + 2)) {
    if (n % p == 0) {
      unsigned e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.emplace_back(Int(p), e);
    }
  }
  if (n > 1) {
    bool fits_u64 = mpz_fits_ulong_p(n.backend().data()) != 0;
    bool known_prime = n <= Int(kTrialBound) * kTrialBound ||
                       (fits_u64 && is_prime_u64(n.convert_to<std::uint64_t>()));
    out.emplace_back(n, 1);
    if (!known_prime)
      complete = false;
  }
  return out;
}

bool is_squarefree(long long d) {
  unsigned long long n = d < 0 ? static_cast<unsigned long long>(-(d + 1)) + 1 : static_cast<unsigned long long>(d);
  if (n == 0)
    return false;
  for (unsigned long long p = 2; p <= kTrialBound && p * p <= n; p = (p == 2 ? 3 : p + 2)) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0)
        return false;
    }
  }
  // Any remaining cofactor has no prime factor <= 1e6; for |d| <= 1e12 a square
  // factor would have been found, so the cofactor is squarefree.
  return true;
}

} // namespace sextic
