#ifndef RINGCERT_PRIMALITY_HPP
#define RINGCERT_PRIMALITY_HPP

#include <memory>
#include <vector>

#include "ringcert/bigint.hpp"
#include "ringcert/verdict.hpp"

namespace ringcert {

/// Numbers below this bound may be certified prime by plain trial division.
inline const BigInt kTrialDivisionLimit = 1000000;

struct PrattCertificate;

/// Proof that p is prime: trial division when pratt is null (only allowed
/// for p below kTrialDivisionLimit), otherwise a Pratt certificate for p.
struct PrimalityProof {
    BigInt p;
    std::shared_ptr<const PrattCertificate> pratt;
};

struct PrattFactor {
    PrimalityProof prime;  // q
    unsigned exponent = 0;
};

/// Pratt certificate: `witness` has multiplicative order exactly p-1 modulo p,
/// shown through the factorization p-1 = prod q^e.
struct PrattCertificate {
    BigInt p;
    BigInt witness;
    std::vector<PrattFactor> factors;
};

bool operator==(const PrimalityProof& a, const PrimalityProof& b);
bool operator==(const PrattFactor& a, const PrattFactor& b);
bool operator==(const PrattCertificate& a, const PrattCertificate& b);

Verdict verify_pratt(const PrattCertificate& cert);
Verdict verify_primality(const PrimalityProof& proof);

/// Generator side. `p` must be prime; throws std::invalid_argument otherwise.
PrattCertificate generate_pratt(const BigInt& p);
PrimalityProof make_primality_proof(const BigInt& p);

}  // namespace ringcert

#endif
