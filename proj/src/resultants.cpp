#include "ringcert/resultants.hpp"

#include <stdexcept>

namespace ringcert {

BigInt resultant(const ZPoly& f, const ZPoly& g)
{
    return det_bareiss(sylvester_matrix(f, g));
}

Fp resultant(const FpPoly& f, const FpPoly& g)
{
    const Fp one(1L, f.is_zero() ? g.leading().modulus() : f.leading().modulus());
    return det_field(sylvester_matrix(f, g), one);
}

BigInt disc_poly(const ZPoly& f)
{
    if (f.degree() < 1)
        throw std::domain_error("discriminant of a constant polynomial");
    ZPoly df = formal_derivative(f);
    if (df.is_zero())
        return 0;
    return resultant(f, df);
}

OrderDiscriminant disc_order(const OrderDescription& o)
{
    const std::size_t n = o.rank();
    OrderDiscriminant out;
    out.poly_disc = disc_poly(o.T);
    out.sign_exponent = static_cast<unsigned>(n * (n - 1) / 2);

    // Z[theta] inside O: O is spanned by the columns of B (scaled by d), and
    // Z[theta] scaled by d by d*I.
    BigInt det_b = abs_value(det_bareiss(o.B));
    BigInt dn = pow(o.d, static_cast<unsigned long>(n));
    ZMatrix dI = identity_matrix(n);
    for (std::size_t i = 0; i < n; ++i)
        dI(i, i) = o.d;
    BigInt via_hnf = index_z(o.B, dI);
    if (!mpz_divisible_p(dn.get_mpz_t(), det_b.get_mpz_t()) || dn / det_b != via_hnf)
        throw std::domain_error("disc_order: index routes disagree");
    out.index = via_hnf;

    BigInt signed_disc = out.sign_exponent % 2 ? BigInt(-out.poly_disc) : out.poly_disc;
    BigInt sq = out.index * out.index;
    if (!mpz_divisible_p(signed_disc.get_mpz_t(), sq.get_mpz_t()))
        throw std::domain_error("disc_order: Disc(T) is not divisible by the squared index");
    out.value = signed_disc / sq;
    return out;
}

}  // namespace ringcert
