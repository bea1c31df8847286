#ifndef RINGCERT_MAXIMALITY_HPP
#define RINGCERT_MAXIMALITY_HPP

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "ringcert/matrix.hpp"
#include "ringcert/orders.hpp"
#include "ringcert/poly.hpp"
#include "ringcert/primality.hpp"
#include "ringcert/verdict.hpp"

namespace ringcert {

/// Dedekind criterion data for T at p: g lifts the radical of T mod p,
/// h lifts (T mod p)/(g mod p), p*f = g*h - T, and a*f + b*g + c*h = 1 mod p.
/// The radical property of g mod p is shown by g*quotient = T,
/// T*cofactor = g^n_r and u*g + v*g' = 1 (all mod p).
struct DedekindCertificate {
    ZPoly T;
    PrimalityProof p;
    ZPoly g, h, f;
    FpPoly a, b, c;
    FpPoly quotient;
    unsigned n_r = 0;
    FpPoly cofactor;
    FpPoly u, v;
    friend bool operator==(const DedekindCertificate&, const DedekindCertificate&) = default;
};

/// Reference into the stacked basis of I_p/pI_p: block A holds the kernel
/// rows v_0..v_{m-1}, block B the scaled rows p*w_0..p*w_{n-1}.
struct BlockIndex {
    bool in_b = false;
    unsigned index = 0;
    friend bool operator==(const BlockIndex&, const BlockIndex&) = default;
};

/// Data shared by both p-maximality certificates. Row vectors are
/// coordinates in the basis of the order; r = m + n is the rank.
///  (i)  V mod p has a pivot pattern at columns nu,
///  (ii) U has a pivot pattern at columns omega,
///  (iv) (V_i)^{p^t} = 0 in O/pO,
///  (v)  (W_i)^{p^t} = U_i in O/pO.
struct KernelBasis {
    unsigned t = 0;
    unsigned m = 0;
    unsigned n = 0;
    ZMatrix V;  // m x r
    ZMatrix W;  // n x r
    FpMatrix U; // n x r
    std::vector<unsigned> nu;
    std::vector<unsigned> omega;
    friend bool operator==(const KernelBasis&, const KernelBasis&) = default;
};

/// Short form: one witness beta_W = sum beta_k v_k + sum p gamma_k w_k and
///  (vi)  x_i * beta_W = sum_k a[i][k] v_k + sum_k p c[i][k] w_k   (exact in O),
///  (iii) eta_i picks a column of a (block A) or c (block B) where row i is
///        nonzero mod p and every other row vanishes mod p.
struct PMaxShortCertificate {
    PrimalityProof p;
    KernelBasis kb;
    ZMatrix X;  // r x r
    std::vector<BigInt> beta;
    std::vector<BigInt> gamma;
    ZMatrix a;  // r x m
    ZMatrix c;  // r x n
    std::vector<BlockIndex> eta;
    friend bool operator==(const PMaxShortCertificate&, const PMaxShortCertificate&) = default;
};

using Array3 = std::vector<std::vector<std::vector<BigInt>>>;

/// Long form: the full matrices of multiplication by x_i on I_p/pI_p,
///  (vi)  x_i * v_j     = sum_k a[i][j][k] v_k + sum_k p c[i][j][k] w_k,
///  (vii) x_i * (p w_j) = sum_k d[i][j][k] v_k + sum_k p e[i][j][k] w_k,
///  (iii) the pair (eta_i, eta2_i) = (input basis element, output coordinate)
///        selects the array (a: A->A, c: A->B, d: B->A, e: B->B) and the
///        entry [i][eta][eta2] is nonzero mod p while [j][eta][eta2] vanishes
///        for every j != i.
struct PMaxLongCertificate {
    PrimalityProof p;
    KernelBasis kb;
    ZMatrix X;
    Array3 a;  // r x m x m
    Array3 c;  // r x m x n
    Array3 d;  // r x n x m
    Array3 e;  // r x n x n
    std::vector<BlockIndex> eta;
    std::vector<BlockIndex> eta2;
    friend bool operator==(const PMaxLongCertificate&, const PMaxLongCertificate&) = default;
};

/// The order is not p-maximal: x is nonzero in O/pO, yet x * I_p lies in
/// p * I_p, so x/p is integral and lies outside O.
struct NotMaximal {
    BigInt p;
    Coords kernel_element;
};

Verdict verify_dedekind(const DedekindCertificate& cert);
/// `order` must already be verified and `tt` derived from it.
Verdict verify_pmax_short(const OrderDescription& order, const TimesTable& tt, const PMaxShortCertificate& cert,
                          unsigned threads = 1);
Verdict verify_pmax_long(const OrderDescription& order, const TimesTable& tt, const PMaxLongCertificate& cert,
                         unsigned threads = 1);

/// Generator side. nullopt if the Dedekind criterion fails at p.
std::optional<DedekindCertificate> generate_dedekind(const ZPoly& T, const BigInt& p);

/// Smallest t with r <= p^t.
unsigned minimal_frobenius_exponent(std::size_t r, const BigInt& p);

/// Kernel of the p^t-power Frobenius on O/pO plus a complement with
/// independent images. Satisfies (i), (ii), (iv), (v) by construction.
KernelBasis frobenius_kernel_basis(const FpTimesTable& tt_mod_p, unsigned t);

struct PMaxOptions {
    unsigned witness_budget = 512;  // random witness samples after the 0/1 sweep
    bool allow_short = true;
    std::uint64_t seed = 1;
};

using PMaxResult = std::variant<PMaxShortCertificate, PMaxLongCertificate, NotMaximal>;

PMaxResult generate_pmax(const OrderDescription& order, const TimesTable& tt, const BigInt& p,
                         const PMaxOptions& opts = {});

}  // namespace ringcert

#endif
