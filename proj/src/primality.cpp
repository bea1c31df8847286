#include "ringcert/primality.hpp"

#include <stdexcept>

namespace ringcert {

bool operator==(const PrimalityProof& a, const PrimalityProof& b)
{
    if (a.p != b.p || static_cast<bool>(a.pratt) != static_cast<bool>(b.pratt))
        return false;
    return !a.pratt || *a.pratt == *b.pratt;
}

bool operator==(const PrattFactor& a, const PrattFactor& b)
{
    return a.exponent == b.exponent && a.prime == b.prime;
}

bool operator==(const PrattCertificate& a, const PrattCertificate& b)
{
    return a.p == b.p && a.witness == b.witness && a.factors == b.factors;
}

Verdict verify_pratt(const PrattCertificate& cert)
{
    const BigInt& p = cert.p;
    if (p < 2)
        return Verdict::reject("pratt/p-too-small");
    if (p == 2)
        return Verdict::accept();
    if (cert.witness < 2 || cert.witness >= p)
        return Verdict::reject("pratt/witness-range");
    const BigInt pm1 = p - 1;
    if (powm(cert.witness, pm1, p) != 1)
        return Verdict::reject("pratt/fermat");

    BigInt product = 1;
    for (std::size_t i = 0; i < cert.factors.size(); ++i) {
        const PrattFactor& f = cert.factors[i];
        if (f.exponent == 0)
            return Verdict::reject("pratt/factor/" + std::to_string(i) + "/zero-exponent");
        product *= pow(f.prime.p, f.exponent);
    }
    if (product != pm1)
        return Verdict::reject("pratt/factorization");

    for (std::size_t i = 0; i < cert.factors.size(); ++i) {
        const BigInt& q = cert.factors[i].prime.p;
        // q < p, so recursion terminates.
        Verdict v = verify_primality(cert.factors[i].prime);
        if (!v)
            return v.under("pratt/factor/" + std::to_string(i));
        if (powm(cert.witness, BigInt(pm1 / q), p) == 1)
            return Verdict::reject("pratt/order/" + std::to_string(i));
    }
    return Verdict::accept();
}

Verdict verify_primality(const PrimalityProof& proof)
{
    if (!proof.pratt) {
        if (proof.p >= kTrialDivisionLimit)
            return Verdict::reject("prime/needs-pratt");
        if (!is_prime_trial_division(proof.p))
            return Verdict::reject("prime/trial-division");
        return Verdict::accept();
    }
    if (proof.pratt->p != proof.p)
        return Verdict::reject("prime/pratt-mismatch");
    return verify_pratt(*proof.pratt);
}

PrattCertificate generate_pratt(const BigInt& p)
{
    if (!is_probable_prime(p))
        throw std::invalid_argument("generate_pratt: " + to_string(p) + " is not prime");
    PrattCertificate cert;
    cert.p = p;
    if (p == 2) {
        cert.witness = 1;
        return cert;
    }
    const BigInt pm1 = p - 1;
    auto fac = factor_integer(pm1);
    for (const auto& [q, e] : fac)
        cert.factors.push_back({make_primality_proof(q), e});
    for (BigInt w = 2; w < p; ++w) {
        bool ok = true;
        for (const auto& [q, e] : fac) {
            if (powm(w, BigInt(pm1 / q), p) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            cert.witness = w;
            return cert;
        }
    }
    throw std::logic_error("no primitive root found");
}

PrimalityProof make_primality_proof(const BigInt& p)
{
    if (p < kTrialDivisionLimit) {
        if (!is_prime_trial_division(p))
            throw std::invalid_argument("make_primality_proof: " + to_string(p) + " is not prime");
        return {p, nullptr};
    }
    return {p, std::make_shared<PrattCertificate>(generate_pratt(p))};
}

}  // namespace ringcert
