#include "ringcert/maximality.hpp"

#include <stdexcept>
#include <string>

#include "ringcert/irred_ff.hpp"

namespace ringcert {

namespace {

std::string at(const char* name, std::size_t i) { return std::string(name) + "=" + std::to_string(i); }

bool in_field(const FpPoly& f, Modulus p)
{
    for (const Fp& c : f.coeffs())
        if (c.modulus() != p)
            return false;
    return true;
}

std::vector<Fp> to_fp(const std::vector<BigInt>& v, Modulus p, std::size_t len)
{
    std::vector<Fp> out;
    out.reserve(len);
    for (std::size_t i = 0; i < len; ++i)
        out.emplace_back(i < v.size() ? v[i] : BigInt(0), p);
    return out;
}

std::vector<BigInt> axpy(std::vector<BigInt> acc, const BigInt& c, const std::vector<BigInt>& x)
{
    if (c == 0)
        return acc;
    if (acc.size() < x.size())
        acc.resize(x.size(), BigInt(0));
    for (std::size_t i = 0; i < x.size(); ++i)
        acc[i] += c * x[i];
    return acc;
}

// Checks that rows[i][piv[i]] != 0 and rows[j][piv[i]] == 0 for j != i.
// Returns the first failing i, or -1.
long pivot_pattern_failure(const std::vector<std::vector<Fp>>& rows, const std::vector<unsigned>& piv)
{
    for (std::size_t i = 0; i < piv.size(); ++i) {
        const unsigned col = piv[i];
        if (rows[i][col].is_zero())
            return static_cast<long>(i);
        for (std::size_t j = 0; j < rows.size(); ++j)
            if (j != i && !rows[j][col].is_zero())
                return static_cast<long>(i);
    }
    return -1;
}

bool fits(const ZMatrix& m, std::size_t rows, std::size_t cols)
{
    return m.rows() == rows && (rows == 0 || m.cols() == cols);
}

Verdict verify_kernel_basis(const FpTimesTable& ttp, const KernelBasis& kb, std::size_t r, const BigInt& pv,
                            const std::string& tag)
{
    const Modulus p = ttp.zero.modulus();
    if (kb.m + kb.n != r)
        return Verdict::reject(tag + "/dims/rank");
    if (!fits(kb.V, kb.m, r) || !fits(kb.W, kb.n, r) || kb.U.rows() != kb.n || (kb.n > 0 && kb.U.cols() != r))
        return Verdict::reject(tag + "/dims/matrices");
    if (kb.nu.size() != kb.m || kb.omega.size() != kb.n)
        return Verdict::reject(tag + "/dims/pivots");
    for (unsigned x : kb.nu)
        if (x >= r)
            return Verdict::reject(tag + "/dims/nu-range");
    for (unsigned x : kb.omega)
        if (x >= r)
            return Verdict::reject(tag + "/dims/omega-range");
    for (std::size_t i = 0; i < kb.U.rows(); ++i)
        for (std::size_t j = 0; j < kb.U.cols(); ++j)
            if (kb.U(i, j).modulus() != p)
                return Verdict::reject(tag + "/field/U");
    if (kb.t > 64)
        return Verdict::reject(tag + "/t-too-large");
    const BigInt pt = pow(pv, kb.t);
    if (BigInt(r) > pt)
        return Verdict::reject(tag + "/t-too-small");

    std::vector<std::vector<Fp>> vbar, ubar;
    for (unsigned i = 0; i < kb.m; ++i)
        vbar.push_back(to_fp(kb.V.row(i), p, r));
    for (unsigned i = 0; i < kb.n; ++i)
        ubar.push_back(kb.U.row(i));

    // (i), (ii)
    if (long i = pivot_pattern_failure(vbar, kb.nu); i >= 0)
        return Verdict::reject(tag + "/check-i/" + at("i", static_cast<std::size_t>(i)));
    if (long i = pivot_pattern_failure(ubar, kb.omega); i >= 0)
        return Verdict::reject(tag + "/check-ii/" + at("i", static_cast<std::size_t>(i)));
    return Verdict::accept();
}

Verdict verify_frobenius(const FpTimesTable& ttp, const KernelBasis& kb, std::size_t r, const BigInt& pv,
                         const std::string& tag, unsigned threads)
{
    const Modulus p = ttp.zero.modulus();
    const BigInt pt = pow(pv, kb.t);
    // (iv)
    Verdict v4 = first_failure(kb.m, threads, [&](std::size_t i) {
        if (!tt_pow(ttp, to_fp(kb.V.row(i), p, r), pt).empty())
            return Verdict::reject(tag + "/check-iv/" + at("i", i));
        return Verdict::accept();
    });
    if (!v4)
        return v4;
    // (v)
    return first_failure(kb.n, threads, [&](std::size_t i) {
        if (tt_pow(ttp, to_fp(kb.W.row(i), p, r), pt) != drop_trailing_zeros(kb.U.row(i)))
            return Verdict::reject(tag + "/check-v/" + at("i", i));
        return Verdict::accept();
    });
}

// sum_k coef_v[k] V_k + p * sum_k coef_w[k] W_k
std::vector<BigInt> stacked_combination(const KernelBasis& kb, const BigInt& p, const std::vector<BigInt>& coef_v,
                                        const std::vector<BigInt>& coef_w)
{
    std::vector<BigInt> acc;
    for (unsigned k = 0; k < kb.m; ++k)
        acc = axpy(std::move(acc), coef_v[k], kb.V.row(k));
    for (unsigned k = 0; k < kb.n; ++k)
        acc = axpy(std::move(acc), p * coef_w[k], kb.W.row(k));
    return drop_trailing_zeros(std::move(acc));
}

bool nonzero_mod(const BigInt& x, const BigInt& p) { return !mpz_divisible_p(x.get_mpz_t(), p.get_mpz_t()); }

std::string block_name(const BlockIndex& b) { return b.in_b ? "B" : "A"; }

}  // namespace

// ---------------------------------------------------------------------------

Verdict verify_dedekind(const DedekindCertificate& c)
{
    Verdict pv = verify_primality(c.p);
    if (!pv)
        return pv.under("dedekind/p");
    const Modulus p = Modulus::of(c.p.p);
    const ZPoly& T = c.T;
    if (T.degree() < 1 || T.leading() != 1)
        return Verdict::reject("dedekind/T-not-monic");
    for (const FpPoly* x : {&c.a, &c.b, &c.c, &c.quotient, &c.cofactor, &c.u, &c.v})
        if (!in_field(*x, p))
            return Verdict::reject("dedekind/field");
    const FpPoly Tbar = reduce_mod_p(T, p);
    const FpPoly gbar = reduce_mod_p(c.g, p);
    const FpPoly hbar = reduce_mod_p(c.h, p);
    const FpPoly fbar = reduce_mod_p(c.f, p);
    const FpPoly one = make_fppoly({1}, p);

    if (gbar * c.quotient != Tbar)
        return Verdict::reject("dedekind/radical/g-divides-T");
    if (c.n_r < 1 || c.n_r > static_cast<unsigned>(T.degree()))
        return Verdict::reject("dedekind/radical/exponent-range");
    if (Tbar * c.cofactor != poly_pow(gbar, c.n_r, Fp(1L, p)))
        return Verdict::reject("dedekind/radical/T-divides-g-power");
    if (c.u * gbar + c.v * formal_derivative(gbar) != one)
        return Verdict::reject("dedekind/radical/squarefree");
    if (BigInt(c.p.p) * c.f != c.g * c.h - T)
        return Verdict::reject("dedekind/lift-identity");
    if (c.a * fbar + c.b * gbar + c.c * hbar != one)
        return Verdict::reject("dedekind/gcd");
    return Verdict::accept();
}

std::optional<DedekindCertificate> generate_dedekind(const ZPoly& T, const BigInt& pval)
{
    const Modulus p = Modulus::of(pval);
    DedekindCertificate c;
    c.T = T;
    c.p = make_primality_proof(pval);
    const FpPoly Tbar = reduce_mod_p(T, p);
    FpPoly gbar = make_fppoly({1}, p);
    for (const auto& sq : squarefree_factorization(Tbar))
        gbar *= sq.poly;
    auto [hbar, rem] = poly_divmod(Tbar, gbar);
    if (!rem.is_zero())
        throw std::logic_error("radical does not divide T mod p");
    c.g = lift(gbar);
    c.h = lift(hbar);
    ZPoly diff = c.g * c.h - T;
    std::vector<BigInt> fc;
    for (const BigInt& x : diff.coeffs()) {
        if (!mpz_divisible_p(x.get_mpz_t(), pval.get_mpz_t()))
            throw std::logic_error("g*h - T not divisible by p");
        fc.push_back(x / pval);
    }
    c.f = ZPoly(std::move(fc));
    const FpPoly fbar = reduce_mod_p(c.f, p);

    auto x1 = poly_xgcd(gbar, hbar);
    auto x2 = poly_xgcd(fbar, x1.d);
    if (x2.d != make_fppoly({1}, p))
        return std::nullopt;
    c.a = x2.a;
    c.b = x2.b * x1.a;
    c.c = x2.b * x1.b;

    c.quotient = hbar;
    c.n_r = static_cast<unsigned>(T.degree());
    auto [k, rem2] = poly_divmod(poly_pow(gbar, c.n_r, Fp(1L, p)), Tbar);
    if (!rem2.is_zero())
        throw std::logic_error("T mod p does not divide a power of its radical");
    c.cofactor = k;
    auto x3 = poly_xgcd(gbar, formal_derivative(gbar));
    if (x3.d != make_fppoly({1}, p))
        throw std::logic_error("radical is not squarefree");
    c.u = x3.a;
    c.v = x3.b;
    return c;
}

// ---------------------------------------------------------------------------

Verdict verify_pmax_short(const OrderDescription& order, const TimesTable& tt, const PMaxShortCertificate& c,
                          unsigned threads)
{
    const std::string tag = "pmax-short";
    Verdict pv = verify_primality(c.p);
    if (!pv)
        return pv.under(tag + "/p");
    const BigInt& pval = c.p.p;
    const Modulus p = Modulus::of(pval);
    const std::size_t r = order.rank();
    const KernelBasis& kb = c.kb;
    const FpTimesTable ttp = reduce_mod_p(tt, p);
    Verdict kv = verify_kernel_basis(ttp, kb, r, pval, tag);
    if (!kv)
        return kv;
    if (!fits(c.X, r, r) || c.beta.size() != kb.m || c.gamma.size() != kb.n || !fits(c.a, r, kb.m) ||
        !fits(c.c, r, kb.n) || c.eta.size() != r)
        return Verdict::reject(tag + "/dims/witness");

    // (iii)
    for (std::size_t i = 0; i < r; ++i) {
        const BlockIndex& e = c.eta[i];
        const ZMatrix& arr = e.in_b ? c.c : c.a;
        const unsigned width = e.in_b ? kb.n : kb.m;
        if (e.index >= width)
            return Verdict::reject(tag + "/check-iii/" + at("i", i) + "/range");
        if (!nonzero_mod(arr(i, e.index), pval))
            return Verdict::reject(tag + "/check-iii/" + at("i", i) + "/pivot-zero");
        for (std::size_t j = 0; j < r; ++j)
            if (j != i && nonzero_mod(arr(j, e.index), pval))
                return Verdict::reject(tag + "/check-iii/" + at("i", i) + "/" + block_name(e) + "/" + at("j", j));
    }

    Verdict fv = verify_frobenius(ttp, kb, r, pval, tag, threads);
    if (!fv)
        return fv;

    // (vi)
    const std::vector<BigInt> witness = stacked_combination(kb, pval, c.beta, c.gamma);
    return first_failure(r, threads, [&](std::size_t i) {
        std::vector<BigInt> lhs = tt_mul(tt, c.X.row(i), witness);
        std::vector<BigInt> av = kb.m ? c.a.row(i) : std::vector<BigInt>{};
        std::vector<BigInt> cv = kb.n ? c.c.row(i) : std::vector<BigInt>{};
        if (lhs != stacked_combination(kb, pval, av, cv))
            return Verdict::reject(tag + "/check-vi/" + at("i", i));
        return Verdict::accept();
    });
}

Verdict verify_pmax_long(const OrderDescription& order, const TimesTable& tt, const PMaxLongCertificate& c,
                         unsigned threads)
{
    const std::string tag = "pmax-long";
    Verdict pv = verify_primality(c.p);
    if (!pv)
        return pv.under(tag + "/p");
    const BigInt& pval = c.p.p;
    const Modulus p = Modulus::of(pval);
    const std::size_t r = order.rank();
    const KernelBasis& kb = c.kb;
    const FpTimesTable ttp = reduce_mod_p(tt, p);
    Verdict kv = verify_kernel_basis(ttp, kb, r, pval, tag);
    if (!kv)
        return kv;

    auto shape_ok = [&](const Array3& arr, std::size_t d1, std::size_t d2) {
        if (arr.size() != r)
            return false;
        for (const auto& plane : arr) {
            if (plane.size() != d1)
                return false;
            for (const auto& row : plane)
                if (row.size() != d2)
                    return false;
        }
        return true;
    };
    if (!fits(c.X, r, r) || !shape_ok(c.a, kb.m, kb.m) || !shape_ok(c.c, kb.m, kb.n) || !shape_ok(c.d, kb.n, kb.m) ||
        !shape_ok(c.e, kb.n, kb.n) || c.eta.size() != r || c.eta2.size() != r)
        return Verdict::reject(tag + "/dims/arrays");

    // (iii)
    for (std::size_t i = 0; i < r; ++i) {
        const BlockIndex& in = c.eta[i];
        const BlockIndex& out = c.eta2[i];
        const Array3& arr = in.in_b ? (out.in_b ? c.e : c.d) : (out.in_b ? c.c : c.a);
        const unsigned in_w = in.in_b ? kb.n : kb.m;
        const unsigned out_w = out.in_b ? kb.n : kb.m;
        if (in.index >= in_w || out.index >= out_w)
            return Verdict::reject(tag + "/check-iii/" + at("i", i) + "/range");
        if (!nonzero_mod(arr[i][in.index][out.index], pval))
            return Verdict::reject(tag + "/check-iii/" + at("i", i) + "/pivot-zero");
        for (std::size_t j = 0; j < r; ++j)
            if (j != i && nonzero_mod(arr[j][in.index][out.index], pval))
                return Verdict::reject(tag + "/check-iii/" + at("i", i) + "/" + block_name(in) + block_name(out) +
                                       "/" + at("j", j));
    }

    Verdict fv = verify_frobenius(ttp, kb, r, pval, tag, threads);
    if (!fv)
        return fv;

    // (vi)
    Verdict v6 = first_failure(r * kb.m, threads, [&](std::size_t k) {
        const std::size_t i = k / kb.m, j = k % kb.m;
        std::vector<BigInt> lhs = tt_mul(tt, c.X.row(i), kb.V.row(j));
        if (lhs != stacked_combination(kb, pval, c.a[i][j], c.c[i][j]))
            return Verdict::reject(tag + "/check-vi/" + at("i", i) + "/" + at("j", j));
        return Verdict::accept();
    });
    if (!v6)
        return v6;
    // (vii)
    return first_failure(r * kb.n, threads, [&](std::size_t k) {
        const std::size_t i = k / kb.n, j = k % kb.n;
        std::vector<BigInt> pw;
        pw = axpy(std::move(pw), pval, kb.W.row(j));
        std::vector<BigInt> lhs = tt_mul(tt, c.X.row(i), pw);
        if (lhs != stacked_combination(kb, pval, c.d[i][j], c.e[i][j]))
            return Verdict::reject(tag + "/check-vii/" + at("i", i) + "/" + at("j", j));
        return Verdict::accept();
    });
}

// ---------------------------------------------------------------------------
// Generator.

unsigned minimal_frobenius_exponent(std::size_t r, const BigInt& p)
{
    unsigned t = 0;
    BigInt pt = 1;
    while (pt < BigInt(r)) {
        pt *= p;
        ++t;
    }
    return t;
}

KernelBasis frobenius_kernel_basis(const FpTimesTable& ttp, unsigned t)
{
    const std::size_t r = ttp.n;
    const Modulus p = ttp.zero.modulus();
    const BigInt pt = pow(p.value(), t);
    FpMatrix F(r, r, ttp.zero);
    for (std::size_t i = 0; i < r; ++i) {
        std::vector<Fp> e(r, ttp.zero);
        e[i] = Fp(1L, p);
        auto img = padded(tt_pow(ttp, e, pt), r, ttp.zero);
        for (std::size_t j = 0; j < r; ++j)
            F(i, j) = img[j];
    }
    FpMatrix G(r, r, ttp.zero);
    for (std::size_t i = 0; i < r; ++i)
        G(i, i) = Fp(1L, p);
    auto piv = rref_in_place(F, &G);
    const std::size_t k = piv.size();

    KernelBasis kb;
    kb.t = t;
    kb.n = static_cast<unsigned>(k);
    kb.m = static_cast<unsigned>(r - k);
    // Empty blocks are stored as 0 x 0 so that they survive serialization.
    kb.U = k ? FpMatrix(k, r, ttp.zero) : FpMatrix();
    kb.W = k ? ZMatrix(k, r, BigInt(0)) : ZMatrix();
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            kb.U(i, j) = F(i, j);
            kb.W(i, j) = G(i, j).value();
        }
        kb.omega.push_back(static_cast<unsigned>(piv[i]));
    }
    FpMatrix K(r - k, r, ttp.zero);
    for (std::size_t i = k; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            K(i - k, j) = G(i, j);
    auto vpiv = rref_in_place(K);
    if (vpiv.size() != r - k)
        throw std::logic_error("frobenius kernel: dimension accounting failed");
    kb.V = k < r ? ZMatrix(r - k, r, BigInt(0)) : ZMatrix();
    for (std::size_t i = 0; i < r - k; ++i) {
        for (std::size_t j = 0; j < r; ++j)
            kb.V(i, j) = K(i, j).value();
        kb.nu.push_back(static_cast<unsigned>(vpiv[i]));
    }
    return kb;
}

namespace {

// The lattice spanned by v_0..v_{m-1}, p w_0..p w_{n-1} and exact
// coordinates with respect to it.
struct StackedBasis {
    std::size_t r = 0;
    QMatrix inv;  // inverse of the transpose of the stacked row matrix

    StackedBasis(const KernelBasis& kb, const BigInt& p, std::size_t rank) : r(rank)
    {
        QMatrix lt(r, r, Rat(0));
        for (std::size_t k = 0; k < kb.m; ++k)
            for (std::size_t j = 0; j < r; ++j)
                lt(j, k) = Rat(kb.V(k, j));
        for (std::size_t k = 0; k < kb.n; ++k)
            for (std::size_t j = 0; j < r; ++j)
                lt(j, kb.m + k) = Rat(p * kb.W(k, j));
        QMatrix aug(r, 2 * r, Rat(0));
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < r; ++j)
                aug(i, j) = lt(i, j);
            aug(i, r + i) = 1;
        }
        auto piv = rref_in_place(aug);
        if (piv.size() < r || piv[r - 1] != r - 1)
            throw std::logic_error("stacked basis is singular");
        inv = QMatrix(r, r, Rat(0));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j)
                inv(i, j) = aug(i, r + j);
    }

    std::vector<Rat> coords(const std::vector<BigInt>& y) const
    {
        std::vector<Rat> out(r, Rat(0));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r && j < y.size(); ++j)
                if (y[j] != 0)
                    out[i] += inv(i, j) * Rat(y[j]);
        return out;
    }

    std::vector<BigInt> integral_coords(const std::vector<BigInt>& y) const
    {
        std::vector<BigInt> out;
        for (const Rat& x : coords(y)) {
            if (x.get_den() != 1)
                throw std::logic_error("element is not in the stacked lattice");
            out.emplace_back(x.get_num());
        }
        return out;
    }
};

std::vector<BigInt> scaled(const std::vector<BigInt>& v, const BigInt& s)
{
    std::vector<BigInt> out;
    for (const BigInt& x : v)
        out.push_back(s * x);
    return out;
}

std::vector<BigInt> unit_vector(std::size_t r, std::size_t i)
{
    std::vector<BigInt> e(r, BigInt(0));
    e[i] = 1;
    return e;
}

BlockIndex block_of(std::size_t pos, unsigned m)
{
    if (pos < m)
        return {false, static_cast<unsigned>(pos)};
    return {true, static_cast<unsigned>(pos - m)};
}

std::optional<PMaxShortCertificate> try_short(const TimesTable& tt, const KernelBasis& kb, const StackedBasis& sb,
                                              const BigInt& pval, const BigInt& D, const PMaxOptions& opts)
{
    const std::size_t r = tt.n;
    const Modulus p = Modulus::of(pval);
    const Fp zero(0L, p), one(1L, p);

    auto attempt = [&](const std::vector<BigInt>& beta,
                       const std::vector<BigInt>& gamma) -> std::optional<PMaxShortCertificate> {
        const std::vector<BigInt> w = stacked_combination(kb, pval, beta, gamma);
        if (w.empty())
            return std::nullopt;
        FpMatrix C0(r, r, zero);
        for (std::size_t j = 0; j < r; ++j) {
            auto co = sb.integral_coords(scaled(tt_mul(tt, unit_vector(r, j), w), D));
            for (std::size_t k = 0; k < r; ++k)
                C0(j, k) = Fp(co[k], p);
        }
        FpMatrix inv(r, r, zero);
        for (std::size_t i = 0; i < r; ++i)
            inv(i, i) = one;
        FpMatrix work = C0;
        auto piv = rref_in_place(work, &inv);
        if (piv.size() < r)
            return std::nullopt;
        PMaxShortCertificate c;
        c.p = make_primality_proof(pval);
        c.kb = kb;
        c.beta = beta;
        c.gamma = gamma;
        c.X = ZMatrix(r, r, BigInt(0));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j)
                c.X(i, j) = D * inv(i, j).value();
        c.a = ZMatrix(r, kb.m, BigInt(0));
        c.c = ZMatrix(r, kb.n, BigInt(0));
        for (std::size_t i = 0; i < r; ++i) {
            auto co = sb.integral_coords(tt_mul(tt, c.X.row(i), w));
            for (unsigned k = 0; k < kb.m; ++k)
                c.a(i, k) = co[k];
            for (unsigned k = 0; k < kb.n; ++k)
                c.c(i, k) = co[kb.m + k];
            c.eta.push_back(block_of(i, kb.m));
        }
        return c;
    };

    // All 0/1 coordinate vectors (capped), then random residues.
    const std::size_t sweep_bits = std::min<std::size_t>(r, 12);
    for (unsigned long mask = 1; mask < (1UL << sweep_bits); ++mask) {
        std::vector<BigInt> beta(kb.m), gamma(kb.n);
        for (std::size_t k = 0; k < r; ++k) {
            BigInt bit = (k < sweep_bits && (mask >> k) & 1UL) ? 1 : 0;
            if (k < kb.m)
                beta[k] = bit;
            else
                gamma[k - kb.m] = bit;
        }
        if (auto c = attempt(beta, gamma))
            return c;
    }
    gmp_randclass rng(gmp_randinit_default);
    rng.seed(static_cast<unsigned long>(opts.seed));
    for (unsigned s = 0; s < opts.witness_budget; ++s) {
        std::vector<BigInt> beta(kb.m), gamma(kb.n);
        for (auto& x : beta)
            x = rng.get_z_range(pval);
        for (auto& x : gamma)
            x = rng.get_z_range(pval);
        if (auto c = attempt(beta, gamma))
            return c;
    }
    return std::nullopt;
}

std::vector<BigInt> stacked_element(const KernelBasis& kb, const BigInt& p, std::size_t pos)
{
    if (pos < kb.m)
        return kb.V.row(pos);
    return scaled(kb.W.row(pos - kb.m), p);
}

PMaxResult long_form(const TimesTable& tt, const KernelBasis& kb, const StackedBasis& sb, const BigInt& pval,
                     const BigInt& D)
{
    const std::size_t r = tt.n;
    const Modulus p = Modulus::of(pval);
    const Fp zero(0L, p), one(1L, p);
    FpMatrix phi(r, r * r, zero);
    for (std::size_t j = 0; j < r; ++j) {
        for (std::size_t l = 0; l < r; ++l) {
            auto co = sb.integral_coords(scaled(tt_mul(tt, unit_vector(r, j), stacked_element(kb, pval, l)), D));
            for (std::size_t o = 0; o < r; ++o)
                phi(j, l * r + o) = Fp(co[o], p);
        }
    }
    FpMatrix G(r, r, zero);
    for (std::size_t i = 0; i < r; ++i)
        G(i, i) = one;
    auto piv = rref_in_place(phi, &G);
    if (piv.size() < r) {
        NotMaximal nm;
        nm.p = pval;
        for (std::size_t j = 0; j < r; ++j)
            nm.kernel_element.push_back(G(piv.size(), j).value());
        return nm;
    }

    PMaxLongCertificate c;
    c.p = make_primality_proof(pval);
    c.kb = kb;
    c.X = ZMatrix(r, r, BigInt(0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            c.X(i, j) = D * G(i, j).value();
    auto plane = [](std::size_t a, std::size_t b) {
        return std::vector<std::vector<BigInt>>(a, std::vector<BigInt>(b, BigInt(0)));
    };
    c.a.assign(r, plane(kb.m, kb.m));
    c.c.assign(r, plane(kb.m, kb.n));
    c.d.assign(r, plane(kb.n, kb.m));
    c.e.assign(r, plane(kb.n, kb.n));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t l = 0; l < r; ++l) {
            auto co = sb.integral_coords(tt_mul(tt, c.X.row(i), stacked_element(kb, pval, l)));
            for (std::size_t o = 0; o < r; ++o) {
                if (l < kb.m && o < kb.m)
                    c.a[i][l][o] = co[o];
                else if (l < kb.m)
                    c.c[i][l][o - kb.m] = co[o];
                else if (o < kb.m)
                    c.d[i][l - kb.m][o] = co[o];
                else
                    c.e[i][l - kb.m][o - kb.m] = co[o];
            }
        }
        c.eta.push_back(block_of(piv[i] / r, kb.m));
        c.eta2.push_back(block_of(piv[i] % r, kb.m));
    }
    return c;
}

}  // namespace

PMaxResult generate_pmax(const OrderDescription& order, const TimesTable& tt, const BigInt& pval,
                         const PMaxOptions& opts)
{
    const std::size_t r = order.rank();
    const Modulus p = Modulus::of(pval);
    const FpTimesTable ttp = reduce_mod_p(tt, p);
    KernelBasis kb = frobenius_kernel_basis(ttp, minimal_frobenius_exponent(r, pval));

    ZMatrix vw(r, r, BigInt(0));
    for (std::size_t k = 0; k < kb.m; ++k)
        for (std::size_t j = 0; j < r; ++j)
            vw(k, j) = kb.V(k, j);
    for (std::size_t k = 0; k < kb.n; ++k)
        for (std::size_t j = 0; j < r; ++j)
            vw(kb.m + k, j) = kb.W(k, j);
    // D * I_p lies in the stacked lattice, and D is a unit mod p.
    const BigInt D = abs_value(det_bareiss(vw));
    if (D == 0 || !nonzero_mod(D, pval))
        throw std::logic_error("kernel basis does not reduce to a basis of O/pO");
    StackedBasis sb(kb, pval, r);

    if (opts.allow_short) {
        if (auto c = try_short(tt, kb, sb, pval, D, opts))
            return *c;
    }
    return long_form(tt, kb, sb, pval, D);
}

}  // namespace ringcert
