#ifndef RINGCERT_RESULTANTS_HPP
#define RINGCERT_RESULTANTS_HPP

#include "ringcert/matrix.hpp"
#include "ringcert/orders.hpp"
#include "ringcert/poly.hpp"

namespace ringcert {

/// Sylvester matrix of f (degree n) and g (degree m), size (n+m) x (n+m).
/// Rows 0..m-1 hold f's ascending coefficients shifted right by the row
/// index; rows m..m+n-1 hold g's the same way. With this layout
/// Res(X - a, X - b) = b - a, matching
/// Res(f, g) = (-1)^{nm} lc(f)^m lc(g)^n prod (alpha_i - beta_j).
template <class C>
Matrix<C> sylvester_matrix(const DensePoly<C>& f, const DensePoly<C>& g)
{
    if (f.is_zero() || g.is_zero())
        throw std::domain_error("sylvester matrix of a zero polynomial");
    const std::size_t n = static_cast<std::size_t>(f.degree());
    const std::size_t m = static_cast<std::size_t>(g.degree());
    const C zero = f.leading() - f.leading();
    Matrix<C> s(n + m, n + m, zero);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t k = 0; k <= n; ++k)
            s(r, r + k) = f[k];
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k <= m; ++k)
            s(m + r, r + k) = g[k];
    return s;
}

BigInt resultant(const ZPoly& f, const ZPoly& g);
Fp resultant(const FpPoly& f, const FpPoly& g);

/// Res(f, f') with no leading-coefficient normalization.
BigInt disc_poly(const ZPoly& f);

struct OrderDiscriminant {
    BigInt value;
    BigInt poly_disc;      // Disc(T) = Res(T, T')
    BigInt index;          // [O : Z[theta]]
    unsigned sign_exponent = 0;  // n(n-1)/2
};

/// disc(O) = (-1)^{n(n-1)/2} Disc(T) / [O : Z[theta]]^2. The index is
/// computed both as d^n / |det B| and through index_z; the two must agree
/// and the division must be exact (std::domain_error otherwise).
OrderDiscriminant disc_order(const OrderDescription& desc);

}  // namespace ringcert

#endif
