#include "ringcert/poly.hpp"

namespace ringcert {

ZPoly make_zpoly(std::initializer_list<long> coeffs)
{
    std::vector<BigInt> v;
    v.reserve(coeffs.size());
    for (long c : coeffs)
        v.emplace_back(c);
    return ZPoly(std::move(v));
}

FpPoly make_fppoly(std::initializer_list<long> coeffs, Modulus p)
{
    std::vector<Fp> v;
    v.reserve(coeffs.size());
    for (long c : coeffs)
        v.emplace_back(c, p);
    return FpPoly(std::move(v));
}

FpPoly make_fppoly(const std::vector<BigInt>& coeffs, Modulus p)
{
    std::vector<Fp> v;
    v.reserve(coeffs.size());
    for (const BigInt& c : coeffs)
        v.emplace_back(c, p);
    return FpPoly(std::move(v));
}

FpPoly reduce_mod_p(const ZPoly& f, Modulus p)
{
    return make_fppoly(f.coeffs(), p);
}

ZPoly lift(const FpPoly& f)
{
    std::vector<BigInt> v;
    v.reserve(f.size());
    for (const Fp& c : f.coeffs())
        v.push_back(c.value());
    return ZPoly(std::move(v));
}

QPoly to_qpoly(const ZPoly& f)
{
    std::vector<Rat> v;
    v.reserve(f.size());
    for (const BigInt& c : f.coeffs())
        v.emplace_back(c);
    return QPoly(std::move(v));
}

bool to_zpoly(const QPoly& f, ZPoly& out)
{
    std::vector<BigInt> v;
    v.reserve(f.size());
    for (const Rat& c : f.coeffs()) {
        if (c.get_den() != 1)
            return false;
        v.emplace_back(c.get_num());
    }
    out = ZPoly(std::move(v));
    return true;
}

BigInt content(const ZPoly& f)
{
    BigInt g = 0;
    for (const BigInt& c : f.coeffs())
        g = gcd(g, c);
    return g;
}

ZPoly primitive_part(const ZPoly& f)
{
    if (f.is_zero())
        return f;
    BigInt c = content(f);
    if (f.leading() < 0)
        c = -c;
    std::vector<BigInt> v;
    for (const BigInt& x : f.coeffs())
        v.emplace_back(x / c);
    return ZPoly(std::move(v));
}

DivMod<BigInt> divmod_monic(const ZPoly& f, const ZPoly& g)
{
    if (g.is_zero() || g.leading() != 1)
        throw std::domain_error("divmod_monic needs a monic divisor");
    if (f.degree() < g.degree())
        return {ZPoly(), f};
    std::vector<BigInt> r = f.coeffs();
    const auto& gc = g.coeffs();
    const std::size_t dg = gc.size() - 1;
    std::vector<BigInt> q(r.size() - dg, BigInt(0));
    for (std::size_t k = r.size(); k-- > dg;) {
        if (r[k] == 0)
            continue;
        BigInt factor = r[k];
        q[k - dg] = factor;
        for (std::size_t j = 0; j <= dg; ++j)
            r[k - dg + j] -= factor * gc[j];
    }
    r.resize(dg);
    return {ZPoly(std::move(q)), ZPoly(std::move(r))};
}

bool divides_exactly(const ZPoly& f, const ZPoly& g, ZPoly& quotient)
{
    if (g.is_zero())
        return false;
    auto [q, r] = poly_divmod(to_qpoly(f), to_qpoly(g));
    if (!r.is_zero())
        return false;
    return to_zpoly(q, quotient);
}

}  // namespace ringcert
