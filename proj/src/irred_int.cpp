#include "ringcert/irred_int.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ringcert {

std::set<int> subset_sums(const std::vector<int>& degrees)
{
    std::set<int> sums{0};
    for (int d : degrees) {
        std::set<int> next = sums;
        for (int s : sums)
            next.insert(s + d);
        sums = std::move(next);
    }
    return sums;
}

int degree_lower_bound(const std::vector<std::vector<int>>& degree_multisets)
{
    if (degree_multisets.empty())
        return -1;
    std::set<int> acc = subset_sums(degree_multisets[0]);
    for (std::size_t i = 1; i < degree_multisets.size(); ++i) {
        std::set<int> s = subset_sums(degree_multisets[i]);
        std::set<int> both;
        std::set_intersection(acc.begin(), acc.end(), s.begin(), s.end(), std::inserter(both, both.begin()));
        acc = std::move(both);
    }
    acc.erase(0);
    return acc.empty() ? -1 : *acc.begin();
}

Rat cauchy_bound_scaled(const ZPoly& f, const Rat& r)
{
    if (f.degree() < 1)
        throw std::domain_error("cauchy bound of a constant");
    if (r <= 0)
        throw std::domain_error("scaling factor must be positive");
    const int n = f.degree();
    const Rat an = Rat(abs_value(f.leading()));
    Rat best = 0;
    for (int i = 0; i < n; ++i) {
        Rat term = Rat(abs_value(f[static_cast<std::size_t>(i)])) / (an * pow(r, n - i));
        if (term > best)
            best = term;
    }
    Rat out = r * (1 + best);
    out.canonicalize();
    return out;
}

Verdict verify_degree_analysis(const DegreeAnalysisCertificate& cert, int& d, unsigned threads)
{
    const ZPoly& f = cert.f;
    if (f.degree() < 1)
        return Verdict::reject("degree-analysis/constant");
    if (cert.primes.empty())
        return Verdict::reject("degree-analysis/no-primes");
    std::vector<std::vector<int>> multisets;
    for (std::size_t k = 0; k < cert.primes.size(); ++k) {
        const auto& entry = cert.primes[k];
        const std::string here = "degree-analysis/prime/k=" + std::to_string(k);
        Verdict pv = verify_primality(entry.p);
        if (!pv)
            return pv.under(here);
        const Modulus p = Modulus::of(entry.p.p);
        if (mpz_divisible_p(f.leading().get_mpz_t(), entry.p.p.get_mpz_t()))
            return Verdict::reject(here + "/divides-leading");
        FpPoly prod = make_fppoly({1}, p);
        std::vector<int> degs;
        for (std::size_t j = 0; j < entry.factors.size(); ++j) {
            const auto& fac = entry.factors[j];
            const std::string fhere = here + "/factor/j=" + std::to_string(j);
            if (fac.multiplicity == 0)
                return Verdict::reject(fhere + "/zero-multiplicity");
            if (fac.cert.p.p != entry.p.p)
                return Verdict::reject(fhere + "/prime-mismatch");
            if (fac.cert.f.is_zero() || fac.cert.f.leading() != Fp(1L, p))
                return Verdict::reject(fhere + "/not-monic");
            Verdict rv = verify_rabin(fac.cert, threads);
            if (!rv)
                return rv.under(fhere);
            prod *= poly_pow(fac.cert.f, fac.multiplicity, Fp(1L, p));
            for (unsigned e = 0; e < fac.multiplicity; ++e)
                degs.push_back(fac.cert.f.degree());
        }
        FpPoly fbar = reduce_mod_p(f, p);
        if (fbar.leading() * prod != fbar)
            return Verdict::reject(here + "/product");
        multisets.push_back(std::move(degs));
    }
    d = degree_lower_bound(multisets);
    if (d < 1)
        return Verdict::reject("degree-analysis/empty-intersection");
    return Verdict::accept();
}

Verdict verify_degree_analysis_irreducible(const DegreeAnalysisCertificate& cert, unsigned threads)
{
    if (cert.f.degree() >= 1 && content(cert.f) != 1)
        return Verdict::reject("degree-analysis/not-primitive");
    int d = 0;
    Verdict v = verify_degree_analysis(cert, d, threads);
    if (!v)
        return v;
    if (d != cert.f.degree())
        return Verdict::reject("degree-analysis/bound-below-degree");
    return Verdict::accept();
}

Verdict verify_lpfw(const LPFWCertificate& c, unsigned threads)
{
    const ZPoly& f = c.f;
    if (f.degree() < 1)
        return Verdict::reject("lpfw/constant");
    if (content(f) != 1)
        return Verdict::reject("lpfw/not-primitive");
    int d = 1;
    if (c.degree_analysis) {
        if (c.degree_analysis->f != f)
            return Verdict::reject("lpfw/degree-analysis/polynomial-mismatch");
        Verdict v = verify_degree_analysis(*c.degree_analysis, d, threads);
        if (!v)
            return v.under("lpfw");
    }
    if (c.r <= 0)
        return Verdict::reject("lpfw/r-nonpositive");
    if (c.rho != cauchy_bound_scaled(f, c.r))
        return Verdict::reject("lpfw/rho");
    const BigInt am = abs_value(c.m);
    if (Rat(am) < c.rho + 1)
        return Verdict::reject("lpfw/m-too-small");
    if (c.s < 1)
        return Verdict::reject("lpfw/s-nonpositive");
    if (abs_value(poly_eval(f, c.m)) != c.s * c.P.p)
        return Verdict::reject("lpfw/evaluation");
    if (!(Rat(c.s) < pow(Rat(am) - c.rho, d)))
        return Verdict::reject("lpfw/cofactor-bound");
    Verdict pv = verify_primality(c.P);
    if (!pv)
        return pv.under("lpfw/P");
    return Verdict::accept();
}

Verdict verify_int_irred(const IntIrredCertificate& cert, unsigned threads)
{
    if (const auto* da = std::get_if<DegreeAnalysisCertificate>(&cert))
        return verify_degree_analysis_irreducible(*da, threads);
    return verify_lpfw(std::get<LPFWCertificate>(cert), threads);
}

// ---------------------------------------------------------------------------
// Generator.

namespace {

BigInt ceil_rat(const Rat& x)
{
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

BigInt next_prime(const BigInt& n)
{
    BigInt r;
    mpz_nextprime(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

ZPoly symmetric_lift(const FpPoly& f)
{
    const BigInt& p = f.is_zero() ? BigInt(2) : f.leading().modulus().value();
    std::vector<BigInt> v;
    for (const Fp& c : f.coeffs()) {
        BigInt x = c.value();
        if (2 * x > p)
            x -= p;
        v.push_back(x);
    }
    return ZPoly(std::move(v));
}

std::optional<DegreeAnalysisPrime> degree_analysis_entry(const ZPoly& f, unsigned long p, std::uint64_t seed)
{
    const Modulus mod = Modulus::of(BigInt(p));
    FpPoly fbar = reduce_mod_p(f, mod);
    auto fac = factor_fp(fbar, seed);
    DegreeAnalysisPrime entry;
    entry.p = make_primality_proof(BigInt(p));
    for (const auto& q : fac.factors) {
        auto r = generate_rabin(q.poly);
        if (!std::holds_alternative<RabinCertificate>(r))
            return std::nullopt;
        entry.factors.push_back({std::get<RabinCertificate>(std::move(r)), q.multiplicity});
    }
    return entry;
}

std::vector<int> degrees_of(const DegreeAnalysisPrime& e)
{
    std::vector<int> out;
    for (const auto& f : e.factors)
        for (unsigned k = 0; k < f.multiplicity; ++k)
            out.push_back(f.cert.f.degree());
    return out;
}

}  // namespace

std::optional<ZPoly> find_integer_factor(const ZPoly& f, std::uint64_t seed)
{
    if (f.degree() < 1)
        return std::nullopt;
    BigInt c = content(f);
    if (c != 1)
        return ZPoly(std::vector<BigInt>{c});
    if (f.degree() == 1)
        return std::nullopt;

    // Repeated factors.
    QPoly g = poly_gcd(to_qpoly(f), to_qpoly(formal_derivative(f)));
    if (g.degree() > 0) {
        BigInt den = 1;
        for (const Rat& x : g.coeffs())
            den = lcm(den, BigInt(x.get_den()));
        std::vector<BigInt> v;
        for (const Rat& x : g.coeffs())
            v.push_back(BigInt(x * den));
        return primitive_part(ZPoly(std::move(v)));
    }

    // Big-prime Zassenhaus: pick p beyond twice a coefficient bound for
    // lc(f) * (any factor), factor mod p and try every subset.
    const int n = f.degree();
    BigInt norm2 = 0;
    for (const BigInt& a : f.coeffs())
        norm2 += a * a;
    BigInt norm = sqrt(norm2) + 1;
    BigInt bound = abs_value(f.leading()) * pow(BigInt(2), static_cast<unsigned long>(n)) * norm;
    BigInt p = next_prime(2 * bound + 1);
    FpFactorization fac;
    for (;;) {
        if (!mpz_divisible_p(f.leading().get_mpz_t(), p.get_mpz_t())) {
            const Modulus mod = Modulus::of(p);
            FpPoly fbar = reduce_mod_p(f, mod);
            if (poly_gcd(fbar, formal_derivative(fbar)).degree() == 0) {
                fac = factor_fp(fbar, seed);
                break;
            }
        }
        p = next_prime(p);
    }
    const std::size_t r = fac.factors.size();
    if (r <= 1)
        return std::nullopt;
    const Modulus mod = Modulus::of(p);
    const Fp lc(f.leading(), mod);
    std::vector<std::size_t> pick;
    for (std::size_t k = 1; k <= r / 2; ++k) {
        pick.assign(k, 0);
        for (std::size_t i = 0; i < k; ++i)
            pick[i] = i;
        for (;;) {
            FpPoly prod = poly_const(lc);
            for (std::size_t i : pick)
                prod *= fac.factors[i].poly;
            ZPoly cand = primitive_part(symmetric_lift(prod));
            ZPoly q;
            if (cand.degree() > 0 && cand.degree() < n && divides_exactly(f, cand, q))
                return cand;
            // next combination
            std::size_t i = k;
            while (i > 0 && pick[i - 1] == r - k + i - 1)
                --i;
            if (i == 0)
                break;
            ++pick[i - 1];
            for (std::size_t j = i; j < k; ++j)
                pick[j] = pick[j - 1] + 1;
        }
    }
    return std::nullopt;
}

IntIrredResult generate_int_irred(const ZPoly& f, const IntIrredOptions& opts)
{
    if (f.degree() < 1)
        throw std::invalid_argument("generate_int_irred needs a nonconstant polynomial");
    if (auto factor = find_integer_factor(f, opts.seed))
        return ReducibleZ{*factor};
    const int n = f.degree();

    // Degree analysis: keep a prime only when it shrinks the intersection.
    DegreeAnalysisCertificate da;
    da.f = f;
    std::set<int> current;
    for (int k = 0; k <= n; ++k)
        current.insert(k);
    unsigned tried = 0;
    for (unsigned long p : primes_below(100000)) {
        if (tried >= opts.prime_budget)
            break;
        if (mpz_divisible_ui_p(f.leading().get_mpz_t(), p))
            continue;
        ++tried;
        auto entry = degree_analysis_entry(f, p, opts.seed);
        if (!entry)
            continue;
        std::set<int> s = subset_sums(degrees_of(*entry));
        std::set<int> both;
        std::set_intersection(current.begin(), current.end(), s.begin(), s.end(), std::inserter(both, both.begin()));
        if (both.size() < current.size()) {
            current = std::move(both);
            da.primes.push_back(std::move(*entry));
            if (*std::next(current.begin()) == n)
                return IntIrredCertificate{std::move(da)};
        }
    }

    // LPFW.
    const int d = *std::next(current.begin());
    LPFWCertificate c;
    c.f = f;
    if (d > 1)
        c.degree_analysis = da;
    bool have_r = false;
    for (int k = -8; k <= 8; ++k) {
        Rat r = k >= 0 ? Rat(pow(BigInt(2), static_cast<unsigned long>(k))) : make_rat(1, pow(BigInt(2), static_cast<unsigned long>(-k)));
        Rat rho = cauchy_bound_scaled(f, r);
        if (!have_r || rho < c.rho) {
            c.r = r;
            c.rho = rho;
            have_r = true;
        }
    }
    static const std::vector<unsigned long> small = primes_below(100000);
    const BigInt start = ceil_rat(c.rho + 1);
    unsigned budget = opts.evaluation_budget;
    for (BigInt am = start; budget > 0; ++am) {
        for (int sign : {1, -1}) {
            if (budget == 0)
                break;
            --budget;
            BigInt m = sign * am;
            BigInt v = abs_value(poly_eval(f, m));
            if (v == 0)
                continue;
            BigInt rest = v;
            unsigned long largest = 0;
            for (unsigned long q : small) {
                if (rest == 1)
                    break;
                while (mpz_divisible_ui_p(rest.get_mpz_t(), q)) {
                    rest /= q;
                    largest = q;
                }
            }
            BigInt P;
            if (rest > 1) {
                if (!is_probable_prime(rest))
                    continue;
                P = rest;
            } else if (largest > 0) {
                P = largest;
            } else {
                continue;
            }
            BigInt s = v / P;
            if (!(Rat(s) < pow(Rat(am) - c.rho, d)))
                continue;
            c.m = m;
            c.s = s;
            c.P = make_primality_proof(P);
            return IntIrredCertificate{std::move(c)};
        }
    }
    return SearchExhausted{"no LPFW evaluation point within budget"};
}

}  // namespace ringcert
