#ifndef RINGCERT_BIGINT_HPP
#define RINGCERT_BIGINT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace ringcert {

/// Arbitrary-precision signed integer. GMP keeps the representation canonical.
using BigInt = mpz_class;

/// Exact rational. Always kept in lowest terms with a positive denominator.
using Rat = mpq_class;

/// Parses a strict decimal integer: optional '-', no leading zeros, no
/// exponent or fraction. Throws std::invalid_argument otherwise.
BigInt parse_bigint(std::string_view text);

/// Parses "n" or "n/d"; the result is canonicalized.
Rat parse_rat(std::string_view text);

std::string to_string(const BigInt& x);
std::string to_string(const Rat& x);

Rat make_rat(const BigInt& num, const BigInt& den);

BigInt abs_value(const BigInt& x);
BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);
BigInt pow(const BigInt& base, unsigned long exponent);
BigInt powm(const BigInt& base, const BigInt& exponent, const BigInt& modulus);
Rat pow(const Rat& base, long exponent);

/// Floor division and the matching non-negative remainder for positive divisors.
BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt mod_nonneg(const BigInt& a, const BigInt& m);

/// Extended gcd: g = x*a + y*b with g >= 0.
struct ExtendedGcd {
    BigInt g;
    BigInt x;
    BigInt y;
};
ExtendedGcd xgcd(const BigInt& a, const BigInt& b);

/// Deterministic primality by trial division up to sqrt(n). Only meant for
/// the small numbers the verifier is allowed to check this way.
bool is_prime_trial_division(const BigInt& n);

/// Generator-side probable-prime test (GMP Miller-Rabin, 40 rounds).
bool is_probable_prime(const BigInt& n);

/// Complete factorization of |n| (n != 0) into probable primes. Generator
/// side only: trial division, then Pollard-Brent rho.
std::map<BigInt, unsigned> factor_integer(const BigInt& n, std::uint64_t seed = 1);

/// Primes below `bound` (simple sieve).
std::vector<unsigned long> primes_below(unsigned long bound);

}  // namespace ringcert

#endif
