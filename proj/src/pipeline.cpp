#include "ringcert/pipeline.hpp"

#include <stdexcept>

#include "ringcert/resultants.hpp"

namespace ringcert {

const BigInt& entry_prime(const MaximalityEntry& e)
{
    return std::visit([](const auto& c) -> const BigInt& { return c.p.p; }, e);
}

namespace {

const ZPoly& irreducibility_target(const IntIrredCertificate& c)
{
    return std::visit([](const auto& x) -> const ZPoly& { return x.f; }, c);
}

}  // namespace

Verdict verify_separability(const ZPoly& T, const SeparabilityWitness& w)
{
    if (w.n == 0)
        return Verdict::reject("separability/n-zero");
    if (w.a * T + w.b * formal_derivative(T) != ZPoly(std::vector<BigInt>{w.n}))
        return Verdict::reject("separability/bezout");
    if (w.sign != 1 && w.sign != -1)
        return Verdict::reject("separability/sign");
    BigInt prod = w.sign;
    for (std::size_t k = 0; k < w.factors.size(); ++k) {
        const NumberFactor& f = w.factors[k];
        const std::string here = "separability/factor/k=" + std::to_string(k);
        if (f.exponent == 0)
            return Verdict::reject(here + "/exponent");
        if (k > 0 && f.prime.p <= w.factors[k - 1].prime.p)
            return Verdict::reject(here + "/order");
        Verdict v = verify_primality(f.prime);
        if (!v)
            return v.under(here);
        prod *= pow(f.prime.p, f.exponent);
    }
    if (prod != w.n)
        return Verdict::reject("separability/factorization-product");
    return Verdict::accept();
}

Verdict verify_bundle(const CertificateBundle& b, unsigned threads)
{
    if (b.T.degree() < 1 || b.T.leading() != 1)
        return Verdict::reject("bundle/T-not-monic");
    if (irreducibility_target(b.irreducibility) != b.T)
        return Verdict::reject("bundle/irreducibility/wrong-polynomial");
    if (Verdict v = verify_int_irred(b.irreducibility, threads); !v)
        return v.under("bundle/irreducibility");
    if (b.order.T != b.T)
        return Verdict::reject("bundle/order/wrong-polynomial");
    if (Verdict v = verify_order_builder(b.order, threads); !v)
        return v.under("bundle");
    if (Verdict v = verify_separability(b.T, b.separability); !v)
        return v.under("bundle");

    const auto& primes = b.separability.factors;
    for (std::size_t k = 0; k < primes.size(); ++k) {
        if (k >= b.entries.size() || entry_prime(b.entries[k]) != primes[k].prime.p)
            return Verdict::reject("bundle/coverage/uncovered/p=" + to_string(primes[k].prime.p));
    }
    if (b.entries.size() != primes.size())
        return Verdict::reject("bundle/coverage/extra-entry");

    const TimesTable tt = times_table_of(b.order);
    Verdict v = first_failure(b.entries.size(), threads, [&](std::size_t k) {
        const std::string here = "bundle/maximality/p=" + to_string(primes[k].prime.p);
        const MaximalityEntry& e = b.entries[k];
        if (auto* d = std::get_if<DedekindCertificate>(&e)) {
            if (d->T != b.T)
                return Verdict::reject(here + "/dedekind/wrong-polynomial");
            return verify_dedekind(*d).under(here);
        }
        if (auto* s = std::get_if<PMaxShortCertificate>(&e))
            return verify_pmax_short(b.order, tt, *s).under(here);
        return verify_pmax_long(b.order, tt, std::get<PMaxLongCertificate>(e)).under(here);
    });
    if (!v)
        return v;

    if (b.claimed_discriminant) {
        OrderDiscriminant od = disc_order(b.order);
        if (od.value != *b.claimed_discriminant)
            return Verdict::reject("bundle/discriminant-claim/computed=" + to_string(od.value) +
                                   "/claimed=" + to_string(*b.claimed_discriminant));
    }
    return Verdict::accept();
}

Verdict claim_discriminant(const CertificateBundle& bundle, const BigInt& claimed, unsigned threads)
{
    if (Verdict v = verify_bundle(bundle, threads); !v)
        return v;
    OrderDiscriminant od = disc_order(bundle.order);
    if (od.value != claimed)
        return Verdict::reject("discriminant/mismatch/computed=" + to_string(od.value) + "/poly-disc=" +
                               to_string(od.poly_disc) + "/index=" + to_string(od.index) +
                               "/claimed=" + to_string(claimed));
    return Verdict::accept();
}

SeparabilityWitness generate_separability(const ZPoly& T, std::uint64_t seed)
{
    const ZPoly dT = formal_derivative(T);
    SeparabilityWitness w;
    w.n = resultant(T, dT);
    if (w.n == 0)
        throw std::domain_error("T is not separable");
    auto g = poly_xgcd(to_qpoly(T), to_qpoly(dT));
    if (g.d.degree() != 0)
        throw std::domain_error("T is not separable");
    const Rat scale = Rat(w.n) / g.d.leading();
    if (!to_zpoly(scale * g.a, w.a) || !to_zpoly(scale * g.b, w.b))
        throw std::logic_error("resultant cofactors are not integral");
    w.sign = w.n < 0 ? -1 : 1;
    for (const auto& [q, e] : factor_integer(abs_value(w.n), seed))
        w.factors.push_back({make_primality_proof(q), e});
    return w;
}

BundleResult generate_bundle(const ZPoly& T, const BigInt& d, const ZMatrix& basis, const BundleOptions& opts)
{
    using Kind = BundleFailure::Kind;
    if (T.degree() < 1 || T.leading() != 1)
        return BundleFailure{Kind::InvalidInput, "defining polynomial must be monic of positive degree", {}, {}, {}};

    CertificateBundle b;
    b.T = T;

    IntIrredResult ir = generate_int_irred(T, opts.irred);
    if (auto* red = std::get_if<ReducibleZ>(&ir))
        return BundleFailure{Kind::Reducible, "T is reducible over Z", red->factor, {}, {}};
    if (auto* ex = std::get_if<SearchExhausted>(&ir))
        return BundleFailure{Kind::IrreducibilityExhausted, ex->message, {}, {}, {}};
    b.irreducibility = std::get<IntIrredCertificate>(std::move(ir));

    auto built = build_order(T, d, basis);
    if (auto* err = std::get_if<OrderBuildError>(&built))
        return BundleFailure{Kind::NotAnOrder, err->message, {}, {}, {}};
    b.order = std::get<OrderDescription>(std::move(built));

    b.separability = generate_separability(T, opts.seed);
    const TimesTable tt = times_table_of(b.order);
    for (const NumberFactor& nf : b.separability.factors) {
        const BigInt& p = nf.prime.p;
        if (opts.prefer_dedekind) {
            if (auto ded = generate_dedekind(T, p)) {
                b.entries.emplace_back(std::move(*ded));
                continue;
            }
        }
        PMaxResult r = generate_pmax(b.order, tt, p, opts.pmax);
        if (auto* nm = std::get_if<NotMaximal>(&r))
            return BundleFailure{Kind::NotMaximal, "not maximal at " + to_string(p), {}, p, nm->kernel_element};
        if (auto* s = std::get_if<PMaxShortCertificate>(&r))
            b.entries.emplace_back(std::move(*s));
        else
            b.entries.emplace_back(std::get<PMaxLongCertificate>(std::move(r)));
    }
    return b;
}

std::vector<std::string> entry_forms(const CertificateBundle& bundle)
{
    std::vector<std::string> out;
    for (const MaximalityEntry& e : bundle.entries) {
        const char* form = std::holds_alternative<DedekindCertificate>(e)     ? "dedekind"
                           : std::holds_alternative<PMaxShortCertificate>(e) ? "short"
                                                                              : "long";
        out.push_back(to_string(entry_prime(e)) + ":" + form);
    }
    return out;
}

}  // namespace ringcert
