#ifndef RINGCERT_ORDERS_HPP
#define RINGCERT_ORDERS_HPP

#include <string>
#include <variant>
#include <vector>

#include "ringcert/matrix.hpp"
#include "ringcert/poly.hpp"
#include "ringcert/verdict.hpp"

namespace ringcert {

/// Position of the unordered pair (i, j), i <= j, in the packed
/// lexicographic list (0,0), (0,1), ..., (0,n-1), (1,1), ...
std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n);
inline std::size_t pair_count(std::size_t n) { return n * (n + 1) / 2; }

/// An order O in Q[X]/(T) with basis w_0..w_{n-1}. Column j of B holds the
/// coefficients of d*w_j in powers of theta (B[i][j] is the coefficient of
/// theta^i); write b_j for that polynomial. For each packed pair (i <= j):
///   b_i * b_j = d * sum_k a[ij][k] * b_k - T * s[ij].
/// The unit and theta are exhibited by
///   sum_k one[k] * b_k - T * one_s = d,   sum_k theta[k] * b_k - T * theta_s = d*X.
struct OrderDescription {
    ZPoly T;
    BigInt d;
    ZMatrix B;
    std::vector<std::vector<BigInt>> a;  // pair_count(n) rows of length n
    std::vector<ZPoly> s;                // pair_count(n)
    std::vector<BigInt> one;
    ZPoly one_s;
    std::vector<BigInt> theta;
    ZPoly theta_s;

    std::size_t rank() const { return B.rows(); }
    friend bool operator==(const OrderDescription&, const OrderDescription&) = default;
};

/// Coordinates with respect to the basis of an order.
using Coords = std::vector<BigInt>;

/// n x n table of product coordinates over a coefficient ring C
/// (integers, or F_p for O/pO).
template <class C>
struct TimesTableT {
    std::size_t n = 0;
    C zero;
    std::vector<std::vector<C>> entries;  // entries[i*n + j] = coords of w_i w_j
    std::vector<C> unit;                  // coords of 1

    const std::vector<C>& at(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
};

using TimesTable = TimesTableT<BigInt>;
using FpTimesTable = TimesTableT<Fp>;

Verdict verify_order_builder(const OrderDescription& desc, unsigned threads = 1);

TimesTable times_table_of(const OrderDescription& desc);
FpTimesTable reduce_mod_p(const TimesTable& tt, Modulus p);

/// sum_i sum_j x_i y_j table[i][j]; short inputs are zero-padded and the
/// result has its trailing zeros dropped.
template <class C>
std::vector<C> tt_mul(const TimesTableT<C>& tt, const std::vector<C>& x, const std::vector<C>& y)
{
    std::vector<C> out(tt.n, tt.zero);
    const std::size_t nx = std::min(x.size(), tt.n), ny = std::min(y.size(), tt.n);
    for (std::size_t i = 0; i < nx; ++i) {
        if (coeff_is_zero(x[i]))
            continue;
        for (std::size_t j = 0; j < ny; ++j) {
            if (coeff_is_zero(y[j]))
                continue;
            C c = x[i] * y[j];
            const auto& e = tt.at(i, j);
            for (std::size_t k = 0; k < e.size() && k < tt.n; ++k)
                out[k] += c * e[k];
        }
    }
    return drop_trailing_zeros(std::move(out));
}

template <class C>
std::vector<C> tt_pow(const TimesTableT<C>& tt, const std::vector<C>& x, const BigInt& e)
{
    if (e < 0)
        throw std::domain_error("negative exponent in tt_pow");
    std::vector<C> result = drop_trailing_zeros(tt.unit);
    const std::size_t bits = e == 0 ? 0 : mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = tt_mul(tt, result, result);
        if (mpz_tstbit(e.get_mpz_t(), i))
            result = tt_mul(tt, result, x);
    }
    return result;
}

/// Zero-pads a coordinate list to length n.
template <class C>
std::vector<C> padded(std::vector<C> v, std::size_t n, const C& zero)
{
    v.resize(std::max(v.size(), n), zero);
    return v;
}

struct HermiteForm {
    ZMatrix H;
    ZMatrix U;
};

/// Column-style Hermite normal form of a square nonsingular matrix:
/// M * U = H, H upper triangular with positive diagonal and every entry to
/// the right of a diagonal entry reduced into [0, H_ii). Throws
/// std::domain_error on rank deficiency.
HermiteForm hnf(const ZMatrix& m);

/// Index [M : N] of the lattice spanned by the columns of N inside the one
/// spanned by the columns of M. Throws std::domain_error if N is not inside M.
BigInt index_z(const ZMatrix& m, const ZMatrix& n);

bool is_upper_triangular_nonsingular(const ZMatrix& b);

struct OrderBuildError {
    std::string message;
};

/// Generator side: structure constants and certifying polynomials for the
/// basis given by the columns of `basis` (over denominator d). The basis is
/// replaced by its Hermite form unless it is already upper triangular.
std::variant<OrderDescription, OrderBuildError> build_order(const ZPoly& T, const BigInt& d, const ZMatrix& basis);

/// Power basis order Z[theta].
OrderDescription monogenic_order(const ZPoly& T);

/// Coordinates (over Q) of the element represented by the polynomial
/// `numerator`/d, i.e. solves B c = numerator mod T.
std::vector<Rat> coordinates_of(const OrderDescription& desc, const ZPoly& numerator);

}  // namespace ringcert

#endif
