#ifndef SEXTIC_RATIONAL_H
#define SEXTIC_RATIONAL_H

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace sextic {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

inline Int num(const Rat &q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat &q) { return boost::multiprecision::denominator(q); }

/// Floor of the exact nth root; exact is set when r^n == x. Requires x >= 0.
Int iroot(const Int &x, unsigned n, bool &exact);

/// sqrt(x) if x is a perfect square.
std::optional<Int> exact_sqrt(const Int &x);

/// cbrt(x) if x is a perfect cube (sign-aware).
std::optional<Int> exact_cbrt(const Int &x);

/// Exact square root of a rational, if one exists.
std::optional<Rat> rat_sqrt(const Rat &x);

/// Exact cube root of a rational, if one exists.
std::optional<Rat> rat_cbrt(const Rat &x);

bool is_prime_u64(std::uint64_t n);

/// Primes p <= bound in increasing order.
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

/// Trial division by primes <= 1e6. Returns (prime, exponent) pairs in increasing
/// prime order; if a cofactor > 1 survives, it is appended with exponent 1 and
/// `complete` is set to false unless the cofactor is certified prime.
std::vector<std::pair<Int, unsigned>> trial_factor(Int n, bool &complete);

/// Squarefree test for |d| <= 1e12 (trial division is then conclusive).
bool is_squarefree(long long d);

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m);

} // namespace sextic

#endif
