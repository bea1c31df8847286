#include "ringcert/fp.hpp"

#include <mutex>
#include <set>
#include <stdexcept>

namespace ringcert {

Modulus Modulus::of(const BigInt& p)
{
    if (p < 2)
        throw std::invalid_argument("modulus must be at least 2");
    // Interned values are never erased, so the addresses stay valid.
    static std::mutex mu;
    static std::set<BigInt> table;
    std::lock_guard<std::mutex> lock(mu);
    auto it = table.insert(p).first;
    return Modulus(&*it);
}

Fp Fp::inverse() const
{
    if (v_ == 0)
        throw std::domain_error("inverse of zero in F_p");
    BigInt r;
    if (mpz_invert(r.get_mpz_t(), v_.get_mpz_t(), mod_.value().get_mpz_t()) == 0)
        throw std::domain_error("element not invertible; modulus is not prime");
    return Fp(r, mod_);
}

Fp Fp::pow(const BigInt& e) const
{
    if (e < 0)
        return inverse().pow(BigInt(-e));
    return Fp(powm(v_, e, mod_.value()), mod_);
}

}  // namespace ringcert
