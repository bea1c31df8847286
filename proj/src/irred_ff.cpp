#include "ringcert/irred_ff.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ringcert {

namespace {

std::string idx(const char* name, std::size_t i) { return std::string(name) + "=" + std::to_string(i); }

bool in_field(const FpPoly& f, Modulus p)
{
    for (const Fp& c : f.coeffs())
        if (c.modulus() != p)
            return false;
    return true;
}

FpPoly fp_x(Modulus p) { return make_fppoly({0, 1}, p); }
FpPoly fp_one(Modulus p) { return make_fppoly({1}, p); }

}  // namespace

std::vector<unsigned long> base_digits(const BigInt& e, const BigInt& t)
{
    if (t < 2)
        throw std::invalid_argument("base must be at least 2");
    std::vector<unsigned long> out;
    BigInt r = e;
    while (r > 0) {
        BigInt d = mod_nonneg(r, t);
        out.push_back(d.get_ui());
        r = floor_div(r, t);
    }
    return out;
}

ResidueChain residue_chain(const FpPoly& g, const BigInt& e, const FpPoly& f, const BigInt& t)
{
    if (f.is_zero())
        throw std::domain_error("residue_chain modulo zero");
    const Modulus p = f.leading().modulus();
    ResidueChain out;
    auto digits = base_digits(e, t);
    FpPoly base = poly_mod(g, f);
    FpPoly y = poly_mod(fp_one(p), f);
    for (std::size_t j = digits.size(); j-- > 0;) {
        y = poly_powmod(y, t, f);
        if (digits[j])
            y = poly_mulmod(y, poly_powmod(base, BigInt(digits[j]), f), f);
        out.steps.push_back(y);
    }
    out.y = y;
    return out;
}

BigInt default_rabin_base(const BigInt& p, unsigned n)
{
    if (p <= 5 && n >= 8)
        return p;
    return 2;
}

Verdict verify_rabin(const RabinCertificate& c, unsigned threads)
{
    Verdict pv = verify_primality(c.p);
    if (!pv)
        return pv.under("rabin/p");
    const Modulus p = Modulus::of(c.p.p);
    const unsigned n = c.n;
    if (n == 0)
        return Verdict::reject("rabin/degree-zero");
    if (c.f.degree() != static_cast<int>(n))
        return Verdict::reject("rabin/degree-mismatch");
    if (c.t != 2 && (c.t != c.p.p || c.t > 65536))
        return Verdict::reject("rabin/base");
    const auto digits = base_digits(c.p.p, c.t);
    if (c.s + 1 != digits.size())
        return Verdict::reject("rabin/digit-count");
    const unsigned s = c.s;
    if (c.h.size() != n + 1 || c.g.size() != n || c.hprime.size() != n || c.a.size() != n || c.b.size() != n)
        return Verdict::reject("rabin/dims");
    for (unsigned i = 0; i < n; ++i)
        if (c.g[i].size() != s || c.hprime[i].size() != s + 1)
            return Verdict::reject("rabin/dims/" + idx("i", i));
    if (!in_field(c.f, p))
        return Verdict::reject("rabin/field/f");
    for (const auto& hi : c.h)
        if (!in_field(hi, p))
            return Verdict::reject("rabin/field/h");
    for (unsigned i = 0; i < n; ++i) {
        for (const auto& x : c.g[i])
            if (!in_field(x, p))
                return Verdict::reject("rabin/field/g");
        for (const auto& x : c.hprime[i])
            if (!in_field(x, p))
                return Verdict::reject("rabin/field/hprime");
        if (!in_field(c.a[i], p) || !in_field(c.b[i], p))
            return Verdict::reject("rabin/field/ab");
    }

    // Factorization of n.
    BigInt prod = 1;
    std::vector<unsigned> prime_divisors;
    for (std::size_t k = 0; k < c.n_factors.size(); ++k) {
        const auto& nf = c.n_factors[k];
        Verdict v = verify_primality(nf.prime);
        if (!v)
            return v.under("rabin/factorization/" + idx("k", k));
        if (nf.exponent == 0)
            return Verdict::reject("rabin/factorization/" + idx("k", k) + "/zero-exponent");
        if (k > 0 && !(c.n_factors[k - 1].prime.p < nf.prime.p))
            return Verdict::reject("rabin/factorization/" + idx("k", k) + "/order");
        prod *= pow(nf.prime.p, nf.exponent);
        if (prod > n)
            return Verdict::reject("rabin/factorization/product");
        prime_divisors.push_back(static_cast<unsigned>(nf.prime.p.get_ui()));
    }
    if (prod != n)
        return Verdict::reject("rabin/factorization/product");

    const FpPoly X = fp_x(p);

    // (iii)
    if (c.h[0] != X)
        return Verdict::reject("rabin/check-iii/h0");
    if (c.h[n] != X)
        return Verdict::reject("rabin/check-iii/hn");

    // (i)
    const FpPoly one = fp_one(p);
    Verdict v1 = first_failure(n, threads, [&](std::size_t i) {
        if (c.hprime[i][s] != poly_pow(c.h[i], digits[s], Fp(1L, p)))
            return Verdict::reject("rabin/check-i/" + idx("i", i) + "/top");
        if (c.hprime[i][0] != c.h[i + 1])
            return Verdict::reject("rabin/check-i/" + idx("i", i) + "/bottom");
        return Verdict::accept();
    });
    if (!v1)
        return v1;

    // (ii)
    const unsigned long tt = c.t.get_ui();
    Verdict v2 = first_failure(static_cast<std::size_t>(n) * s, threads, [&](std::size_t k) {
        const std::size_t i = k / s, j = k % s;
        FpPoly lhs = c.f * c.g[i][j];
        FpPoly rhs = poly_pow(c.hprime[i][j + 1], tt, Fp(1L, p)) * poly_pow(c.h[i], digits[j], Fp(1L, p)) - c.hprime[i][j];
        if (lhs != rhs)
            return Verdict::reject("rabin/check-ii/" + idx("i", i) + "/" + idx("j", j));
        return Verdict::accept();
    });
    if (!v2)
        return v2;

    // (iv)
    std::vector<bool> used(n, false);
    for (unsigned q : prime_divisors) {
        const unsigned k = n / q;
        used[k] = true;
        if (c.a[k] * c.f + c.b[k] * (c.h[k] - X) != one)
            return Verdict::reject("rabin/check-iv/" + idx("q", q));
    }
    for (unsigned k = 0; k < n; ++k)
        if (!used[k] && (!c.a[k].is_zero() || !c.b[k].is_zero()))
            return Verdict::reject("rabin/unused-ab/" + idx("k", k));
    return Verdict::accept();
}

std::variant<RabinCertificate, ReducibleFp> generate_rabin(const FpPoly& f, std::optional<BigInt> t_opt)
{
    if (f.degree() < 1)
        throw std::invalid_argument("generate_rabin needs a nonconstant polynomial");
    const Modulus p = f.leading().modulus();
    const unsigned n = static_cast<unsigned>(f.degree());
    const BigInt t = t_opt ? *t_opt : default_rabin_base(p.value(), n);
    if (t != 2 && t != p.value())
        throw std::invalid_argument("base must be 2 or p");
    const FpPoly X = fp_x(p);

    auto reducible = [&]() -> std::variant<RabinCertificate, ReducibleFp> {
        auto fac = factor_fp(f);
        return ReducibleFp{fac.factors.front().poly};
    };

    // h_i = X^{p^i} mod f
    std::vector<FpPoly> h(n + 1);
    h[0] = X;
    for (unsigned i = 1; i <= n; ++i)
        h[i] = poly_powmod(h[i - 1], p.value(), f);
    if (h[n] != poly_mod(X, f))
        return reducible();
    h[n] = X;

    RabinCertificate c;
    c.p = make_primality_proof(p.value());
    c.n = n;
    c.t = t;
    c.f = f;
    const auto digits = base_digits(p.value(), t);
    c.s = static_cast<unsigned>(digits.size() - 1);
    const unsigned s = c.s;

    for (const auto& [q, e] : factor_integer(BigInt(n)))
        c.n_factors.push_back({make_primality_proof(q), e});
    c.a.assign(n, FpPoly());
    c.b.assign(n, FpPoly());
    for (const auto& nf : c.n_factors) {
        const unsigned k = n / static_cast<unsigned>(nf.prime.p.get_ui());
        auto xg = poly_xgcd(f, h[k] - X);
        if (xg.d.degree() != 0)
            return reducible();
        c.a[k] = xg.a;
        c.b[k] = xg.b;
    }

    c.h = h;
    c.g.assign(n, std::vector<FpPoly>(s));
    c.hprime.assign(n, std::vector<FpPoly>(s + 1));
    for (unsigned i = 0; i < n; ++i) {
        auto chain = residue_chain(h[i], p.value(), f, t);
        // steps[k] corresponds to digit index s - k.
        auto& hp = c.hprime[i];
        for (unsigned j = 0; j <= s; ++j)
            hp[j] = chain.steps[s - j];
        hp[s] = poly_pow(h[i], digits[s], Fp(1L, p));
        hp[0] = h[i + 1];
        for (unsigned j = 0; j < s; ++j) {
            FpPoly num = poly_pow(hp[j + 1], t.get_ui(), Fp(1L, p)) * poly_pow(h[i], digits[j], Fp(1L, p)) - hp[j];
            auto [q, r] = poly_divmod(num, f);
            if (!r.is_zero())
                throw std::logic_error("rabin generator: step not divisible");
            c.g[i][j] = q;
        }
    }
    return c;
}

// ---------------------------------------------------------------------------
// Factorization over F_p.

bool fppoly_less(const FpPoly& a, const FpPoly& b)
{
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i].value() != b[i].value())
            return a[i].value() < b[i].value();
    }
    return false;
}

namespace {

FpPoly exact_quotient(const FpPoly& f, const FpPoly& g)
{
    auto [q, r] = poly_divmod(f, g);
    if (!r.is_zero())
        throw std::logic_error("expected exact division");
    return q;
}

// f(X) = sum c_{kp} X^{kp}  ->  sum c_{kp} X^k  (coefficients are fixed by Frobenius in F_p)
FpPoly pth_root(const FpPoly& f, unsigned long p)
{
    std::vector<Fp> out;
    for (std::size_t i = 0; i < f.size(); i += p)
        out.push_back(f[i]);
    return FpPoly(std::move(out));
}

void sqf_rec(const FpPoly& f, unsigned mult, std::vector<FpFactor>& out)
{
    const Modulus p = f.leading().modulus();
    const unsigned long pv = p.value().get_ui();
    FpPoly c = poly_gcd(f, formal_derivative(f));
    FpPoly w = exact_quotient(f, c);
    unsigned i = 1;
    while (w.degree() > 0) {
        FpPoly y = poly_gcd(w, c);
        FpPoly fac = exact_quotient(w, y);
        if (fac.degree() > 0)
            out.push_back({make_monic(fac), i * mult});
        w = y;
        c = exact_quotient(c, y);
        ++i;
    }
    if (c.degree() > 0)
        sqf_rec(make_monic(pth_root(c, pv)), mult * static_cast<unsigned>(pv), out);
}

void equal_degree_split(const FpPoly& f, unsigned d, gmp_randclass& rng, std::vector<FpPoly>& out)
{
    const int n = f.degree();
    if (n == static_cast<int>(d)) {
        out.push_back(make_monic(f));
        return;
    }
    const Modulus p = f.leading().modulus();
    const BigInt& pv = p.value();
    for (;;) {
        std::vector<Fp> coeffs;
        for (int i = 0; i < n; ++i)
            coeffs.emplace_back(BigInt(rng.get_z_range(pv)), p);
        FpPoly a(std::move(coeffs));
        if (a.degree() < 1)
            continue;
        FpPoly b;
        if (pv == 2) {
            FpPoly term = a;
            b = a;
            for (unsigned k = 1; k < d; ++k) {
                term = poly_mulmod(term, term, f);
                b += term;
            }
        } else {
            BigInt e = (pow(pv, d) - 1) / 2;
            b = poly_powmod(a, e, f) - make_fppoly({1}, p);
        }
        FpPoly g = poly_gcd(f, b);
        if (g.degree() > 0 && g.degree() < n) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split(exact_quotient(f, g), d, rng, out);
            return;
        }
    }
}

}  // namespace

std::vector<FpFactor> squarefree_factorization(const FpPoly& f)
{
    std::vector<FpFactor> out;
    if (f.degree() < 1)
        return out;
    sqf_rec(make_monic(f), 1, out);
    return out;
}

std::vector<FpFactor> distinct_degree_factorization(const FpPoly& f)
{
    std::vector<FpFactor> out;
    if (f.degree() < 1)
        return out;
    const Modulus p = f.leading().modulus();
    const FpPoly X = fp_x(p);
    FpPoly rest = make_monic(f);
    FpPoly h = poly_mod(X, rest);
    unsigned i = 1;
    while (rest.degree() >= 2 * static_cast<int>(i)) {
        h = poly_powmod(h, p.value(), rest);
        FpPoly g = poly_gcd(rest, h - X);
        if (g.degree() > 0) {
            out.push_back({g, i});
            rest = exact_quotient(rest, g);
            h = poly_mod(h, rest);
        }
        ++i;
    }
    if (rest.degree() > 0)
        out.push_back({rest, static_cast<unsigned>(rest.degree())});
    return out;
}

FpFactorization factor_fp(const FpPoly& f, std::uint64_t seed)
{
    if (f.is_zero())
        throw std::domain_error("factor_fp of zero");
    FpFactorization out;
    out.leading = f.leading();
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(static_cast<unsigned long>(seed));
    for (const auto& sq : squarefree_factorization(f)) {
        for (const auto& dd : distinct_degree_factorization(sq.poly)) {
            std::vector<FpPoly> parts;
            equal_degree_split(dd.poly, dd.multiplicity, rng, parts);
            for (auto& q : parts)
                out.factors.push_back({std::move(q), sq.multiplicity});
        }
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const FpFactor& x, const FpFactor& y) {
        if (x.poly != y.poly)
            return fppoly_less(x.poly, y.poly);
        return x.multiplicity < y.multiplicity;
    });
    return out;
}

}  // namespace ringcert
