#ifndef RINGCERT_POLY_HPP
#define RINGCERT_POLY_HPP

#include <algorithm>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ringcert/bigint.hpp"
#include "ringcert/fp.hpp"

namespace ringcert {

// Coefficient rings: BigInt, Rat and Fp. Fp carries its modulus, so
// constants are always built "like" an existing element.
template <class C>
struct CoeffTraits;

template <>
struct CoeffTraits<BigInt> {
    static bool is_zero(const BigInt& c) { return c == 0; }
    static BigInt from_int(long v, const BigInt&) { return BigInt(v); }
};

template <>
struct CoeffTraits<Rat> {
    static bool is_zero(const Rat& c) { return c == 0; }
    static Rat from_int(long v, const Rat&) { return Rat(v); }
    static Rat inverse(const Rat& c) { return Rat(1) / c; }
};

template <>
struct CoeffTraits<Fp> {
    static bool is_zero(const Fp& c) { return c.is_zero(); }
    static Fp from_int(long v, const Fp& like) { return Fp(v, like.modulus()); }
    static Fp inverse(const Fp& c) { return c.inverse(); }
};

template <class C>
bool coeff_is_zero(const C& c) { return CoeffTraits<C>::is_zero(c); }

// ---------------------------------------------------------------------------
// List arithmetic. Index i holds the coefficient of X^i. Every operation
// returns a list without trailing zeros.

template <class C>
std::vector<C> drop_trailing_zeros(std::vector<C> l)
{
    while (!l.empty() && coeff_is_zero(l.back()))
        l.pop_back();
    return l;
}

template <class C>
std::vector<C> list_add(const std::vector<C>& a, const std::vector<C>& b)
{
    const std::vector<C>& longer = a.size() >= b.size() ? a : b;
    const std::vector<C>& shorter = a.size() >= b.size() ? b : a;
    std::vector<C> out = longer;
    for (std::size_t i = 0; i < shorter.size(); ++i)
        out[i] += shorter[i];
    return drop_trailing_zeros(std::move(out));
}

template <class C>
std::vector<C> list_neg(const std::vector<C>& a)
{
    std::vector<C> out;
    out.reserve(a.size());
    for (const C& c : a)
        out.push_back(-c);
    return out;
}

template <class C>
std::vector<C> list_sub(const std::vector<C>& a, const std::vector<C>& b)
{
    std::vector<C> out = a;
    if (out.size() < b.size()) {
        for (std::size_t i = out.size(); i < b.size(); ++i)
            out.push_back(b[i] - b[i]);
    }
    for (std::size_t i = 0; i < b.size(); ++i)
        out[i] -= b[i];
    return drop_trailing_zeros(std::move(out));
}

template <class C>
std::vector<C> list_mul(const std::vector<C>& a, const std::vector<C>& b)
{
    if (a.empty() || b.empty())
        return {};
    C zero = a[0] - a[0];
    std::vector<C> out(a.size() + b.size() - 1, zero);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (coeff_is_zero(a[i]))
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    }
    return drop_trailing_zeros(std::move(out));
}

template <class C>
std::vector<C> mul_pointwise(const C& c, const std::vector<C>& l)
{
    if (coeff_is_zero(c))
        return {};
    std::vector<C> out;
    out.reserve(l.size());
    for (const C& x : l)
        out.push_back(c * x);
    return drop_trailing_zeros(std::move(out));
}

template <class C>
C get_d(const std::vector<C>& l, std::size_t i, const C& fallback)
{
    return i < l.size() ? l[i] : fallback;
}

// ---------------------------------------------------------------------------

/// Degree reported for the zero polynomial (stands in for minus infinity).
inline constexpr int kZeroPolyDegree = -1;

/// Dense univariate polynomial over C in canonical form: no trailing zero
/// coefficients; the zero polynomial is the empty list.
template <class C>
class DensePoly {
public:
    DensePoly() = default;
    explicit DensePoly(std::vector<C> coeffs) : c_(drop_trailing_zeros(std::move(coeffs))) {}

    static DensePoly monomial(const C& c, std::size_t k)
    {
        std::vector<C> v(k + 1, c - c);
        v[k] = c;
        return DensePoly(std::move(v));
    }

    const std::vector<C>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    std::size_t size() const { return c_.size(); }
    const C& leading() const
    {
        if (c_.empty())
            throw std::domain_error("leading coefficient of the zero polynomial");
        return c_.back();
    }
    C coeff(std::size_t i, const C& fallback) const { return get_d(c_, i, fallback); }
    const C& operator[](std::size_t i) const { return c_.at(i); }

    DensePoly& operator+=(const DensePoly& o) { c_ = list_add(c_, o.c_); return *this; }
    DensePoly& operator-=(const DensePoly& o) { c_ = list_sub(c_, o.c_); return *this; }
    DensePoly& operator*=(const DensePoly& o) { c_ = list_mul(c_, o.c_); return *this; }

    friend DensePoly operator+(DensePoly a, const DensePoly& b) { return a += b; }
    friend DensePoly operator-(DensePoly a, const DensePoly& b) { return a -= b; }
    friend DensePoly operator*(const DensePoly& a, const DensePoly& b) { return DensePoly(list_mul(a.c_, b.c_)); }
    friend DensePoly operator*(const C& s, const DensePoly& a) { return DensePoly(mul_pointwise(s, a.c_)); }
    friend DensePoly operator-(const DensePoly& a) { return DensePoly(list_neg(a.c_)); }

    friend bool operator==(const DensePoly& a, const DensePoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const DensePoly& a, const DensePoly& b) { return !(a == b); }

    friend std::ostream& operator<<(std::ostream& os, const DensePoly& p)
    {
        os << '[';
        for (std::size_t i = 0; i < p.c_.size(); ++i)
            os << (i ? "," : "") << p.c_[i];
        return os << ']';
    }

private:
    std::vector<C> c_;
};

using ZPoly = DensePoly<BigInt>;
using QPoly = DensePoly<Rat>;
using FpPoly = DensePoly<Fp>;

ZPoly make_zpoly(std::initializer_list<long> coeffs);
FpPoly make_fppoly(std::initializer_list<long> coeffs, Modulus p);
FpPoly make_fppoly(const std::vector<BigInt>& coeffs, Modulus p);

/// The polynomial X over the same coefficient ring as `like`.
template <class C>
DensePoly<C> poly_x(const C& like)
{
    return DensePoly<C>({CoeffTraits<C>::from_int(0, like), CoeffTraits<C>::from_int(1, like)});
}

template <class C>
DensePoly<C> poly_const(const C& c)
{
    return DensePoly<C>(std::vector<C>{c});
}

template <class C>
C poly_eval(const DensePoly<C>& f, const C& x)
{
    C acc = CoeffTraits<C>::from_int(0, x);
    const auto& c = f.coeffs();
    for (std::size_t i = c.size(); i-- > 0;)
        acc = acc * x + c[i];
    return acc;
}

template <class C>
DensePoly<C> formal_derivative(const DensePoly<C>& f)
{
    const auto& c = f.coeffs();
    if (c.size() <= 1)
        return {};
    std::vector<C> out;
    out.reserve(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i)
        out.push_back(CoeffTraits<C>::from_int(static_cast<long>(i), c[i]) * c[i]);
    return DensePoly<C>(std::move(out));
}

template <class C>
DensePoly<C> poly_pow(const DensePoly<C>& f, unsigned long e, const C& one)
{
    DensePoly<C> result = poly_const(one);
    DensePoly<C> base = f;
    while (e) {
        if (e & 1)
            result *= base;
        e >>= 1;
        if (e)
            base = base * base;
    }
    return result;
}

// ---------------------------------------------------------------------------
// Field-only operations (C = Rat or Fp). Generator side: the verifier never
// divides polynomials.

template <class F>
struct DivMod {
    DensePoly<F> quotient;
    DensePoly<F> remainder;
};

template <class F>
DivMod<F> poly_divmod(const DensePoly<F>& f, const DensePoly<F>& g)
{
    if (g.is_zero())
        throw std::domain_error("polynomial division by zero");
    if (f.degree() < g.degree())
        return {DensePoly<F>(), f};
    std::vector<F> r = f.coeffs();
    const auto& gc = g.coeffs();
    const std::size_t dg = gc.size() - 1;
    F inv_lc = CoeffTraits<F>::inverse(gc.back());
    std::vector<F> q(r.size() - dg, r[0] - r[0]);
    for (std::size_t k = r.size(); k-- > dg;) {
        if (coeff_is_zero(r[k]))
            continue;
        F factor = r[k] * inv_lc;
        q[k - dg] = factor;
        for (std::size_t j = 0; j <= dg; ++j)
            r[k - dg + j] -= factor * gc[j];
    }
    r.resize(dg);
    return {DensePoly<F>(std::move(q)), DensePoly<F>(std::move(r))};
}

template <class F>
DensePoly<F> poly_mod(const DensePoly<F>& f, const DensePoly<F>& g)
{
    return poly_divmod(f, g).remainder;
}

template <class F>
DensePoly<F> make_monic(const DensePoly<F>& f)
{
    if (f.is_zero())
        return f;
    return CoeffTraits<F>::inverse(f.leading()) * f;
}

template <class F>
struct XGcd {
    DensePoly<F> d;  // monic gcd
    DensePoly<F> a;
    DensePoly<F> b;  // a*f + b*g = d
};

template <class F>
XGcd<F> poly_xgcd(const DensePoly<F>& f, const DensePoly<F>& g)
{
    if (f.is_zero() && g.is_zero())
        throw std::domain_error("xgcd of two zero polynomials");
    const F& like = f.is_zero() ? g.leading() : f.leading();
    const F one = CoeffTraits<F>::from_int(1, like);
    DensePoly<F> r0 = f, r1 = g;
    DensePoly<F> s0 = poly_const(one), s1;
    DensePoly<F> t0, t1 = poly_const(one);
    while (!r1.is_zero()) {
        auto [q, r] = poly_divmod(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        DensePoly<F> s2 = s0 - q * s1;
        DensePoly<F> t2 = t0 - q * t1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    F inv = CoeffTraits<F>::inverse(r0.leading());
    return {inv * r0, inv * s0, inv * t0};
}

template <class F>
DensePoly<F> poly_gcd(const DensePoly<F>& f, const DensePoly<F>& g)
{
    if (f.is_zero() && g.is_zero())
        return {};
    DensePoly<F> a = f, b = g;
    while (!b.is_zero()) {
        DensePoly<F> r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

template <class F>
DensePoly<F> poly_mulmod(const DensePoly<F>& a, const DensePoly<F>& b, const DensePoly<F>& m)
{
    return poly_mod(a * b, m);
}

/// g^e mod m by left-to-right binary exponentiation.
template <class F>
DensePoly<F> poly_powmod(const DensePoly<F>& g, const BigInt& e, const DensePoly<F>& m)
{
    if (e < 0)
        throw std::domain_error("negative exponent");
    const F one = CoeffTraits<F>::from_int(1, m.leading());
    DensePoly<F> result = poly_mod(poly_const(one), m);
    DensePoly<F> base = poly_mod(g, m);
    const std::size_t bits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = poly_mulmod(result, result, m);
        if (mpz_tstbit(e.get_mpz_t(), i))
            result = poly_mulmod(result, base, m);
    }
    return result;
}

// ---------------------------------------------------------------------------
// Conversions and integer-specific helpers.

/// Coefficientwise reduction Z[X] -> F_p[X]; leading terms divisible by p drop.
FpPoly reduce_mod_p(const ZPoly& f, Modulus p);
/// Lift with residues in [0, p).
ZPoly lift(const FpPoly& f);
QPoly to_qpoly(const ZPoly& f);
/// Returns the integer polynomial if every coefficient is integral.
bool to_zpoly(const QPoly& f, ZPoly& out);

BigInt content(const ZPoly& f);
ZPoly primitive_part(const ZPoly& f);

/// Division with remainder by a monic integer polynomial (stays in Z[X]).
DivMod<BigInt> divmod_monic(const ZPoly& f, const ZPoly& g);

/// Exact division in Z[X]; returns false if g does not divide f.
bool divides_exactly(const ZPoly& f, const ZPoly& g, ZPoly& quotient);

}  // namespace ringcert

#endif
