#include "ringcert/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace ringcert {

BigInt parse_bigint(std::string_view text)
{
    std::size_t pos = 0;
    if (!text.empty() && text[0] == '-')
        pos = 1;
    if (pos == text.size())
        throw std::invalid_argument("empty integer literal");
    if (text[pos] == '0' && text.size() > pos + 1)
        throw std::invalid_argument("integer literal with leading zero: " + std::string(text));
    for (std::size_t i = pos; i < text.size(); ++i) {
        if (text[i] < '0' || text[i] > '9')
            throw std::invalid_argument("not a decimal integer: " + std::string(text));
    }
    if (text == "-0")
        throw std::invalid_argument("negative zero is not canonical");
    return BigInt(std::string(text), 10);
}

Rat parse_rat(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rat(parse_bigint(text));
    BigInt num = parse_bigint(text.substr(0, slash));
    BigInt den = parse_bigint(text.substr(slash + 1));
    if (den <= 0)
        throw std::invalid_argument("rational with non-positive denominator: " + std::string(text));
    return make_rat(num, den);
}

std::string to_string(const BigInt& x) { return x.get_str(10); }

std::string to_string(const Rat& x) { return x.get_str(10); }

Rat make_rat(const BigInt& num, const BigInt& den)
{
    if (den == 0)
        throw std::domain_error("zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

BigInt abs_value(const BigInt& x) { return BigInt(abs(x)); }

BigInt gcd(const BigInt& a, const BigInt& b)
{
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

BigInt lcm(const BigInt& a, const BigInt& b)
{
    BigInt l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

BigInt pow(const BigInt& base, unsigned long exponent)
{
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

BigInt powm(const BigInt& base, const BigInt& exponent, const BigInt& modulus)
{
    BigInt r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(), modulus.get_mpz_t());
    return r;
}

Rat pow(const Rat& base, long exponent)
{
    if (exponent < 0) {
        if (base == 0)
            throw std::domain_error("zero to a negative power");
        return pow(Rat(1) / base, -exponent);
    }
    Rat r(pow(BigInt(base.get_num()), static_cast<unsigned long>(exponent)),
          pow(BigInt(base.get_den()), static_cast<unsigned long>(exponent)));
    r.canonicalize();
    return r;
}

BigInt floor_div(const BigInt& a, const BigInt& b)
{
    BigInt q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

BigInt mod_nonneg(const BigInt& a, const BigInt& m)
{
    BigInt r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

ExtendedGcd xgcd(const BigInt& a, const BigInt& b)
{
    ExtendedGcd r;
    mpz_gcdext(r.g.get_mpz_t(), r.x.get_mpz_t(), r.y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

bool is_prime_trial_division(const BigInt& n)
{
    if (n < 2)
        return false;
    if (n < 4)
        return true;
    if (mpz_even_p(n.get_mpz_t()))
        return false;
    BigInt d = 3;
    while (d * d <= n) {
        if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()))
            return false;
        d += 2;
    }
    return true;
}

bool is_probable_prime(const BigInt& n)
{
    if (n < 2)
        return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

std::vector<unsigned long> primes_below(unsigned long bound)
{
    std::vector<unsigned long> out;
    if (bound < 3)
        return out;
    std::vector<bool> composite(bound, false);
    for (unsigned long i = 2; i < bound; ++i) {
        if (composite[i])
            continue;
        out.push_back(i);
        for (unsigned long j = i * i; j < bound; j += i)
            composite[j] = true;
    }
    return out;
}

namespace {

// Pollard-Brent; returns a nontrivial factor of the odd composite n.
BigInt pollard_brent(const BigInt& n, gmp_randclass& rng)
{
    for (;;) {
        BigInt y = rng.get_z_range(n - 1) + 1;
        BigInt c = rng.get_z_range(n - 1) + 1;
        BigInt g = 1, q = 1, x, ys;
        unsigned long r = 1;
        const unsigned long m = 128;
        auto f = [&](const BigInt& v) { return mod_nonneg(v * v + c, n); };
        do {
            x = y;
            for (unsigned long i = 0; i < r; ++i)
                y = f(y);
            unsigned long k = 0;
            do {
                ys = y;
                for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mod_nonneg(q * abs_value(x - y), n);
                }
                g = gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = gcd(abs_value(x - ys), n);
            } while (g == 1);
        }
        if (g != n)
            return g;
    }
}

void factor_into(const BigInt& n, std::map<BigInt, unsigned>& out, gmp_randclass& rng)
{
    if (n == 1)
        return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    BigInt d = pollard_brent(n, rng);
    factor_into(d, out, rng);
    factor_into(BigInt(n / d), out, rng);
}

}  // namespace

std::map<BigInt, unsigned> factor_integer(const BigInt& n, std::uint64_t seed)
{
    if (n == 0)
        throw std::domain_error("cannot factor zero");
    std::map<BigInt, unsigned> out;
    BigInt m = abs_value(n);
    static const std::vector<unsigned long> small = primes_below(100000);
    for (unsigned long p : small) {
        if (m == 1)
            break;
        if (BigInt(p) * p > m)
            break;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            ++out[BigInt(p)];
            m /= p;
        }
    }
    if (m == 1)
        return out;
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(static_cast<unsigned long>(seed));
    factor_into(m, out, rng);
    return out;
}

}  // namespace ringcert
