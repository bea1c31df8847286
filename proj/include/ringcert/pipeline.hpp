#ifndef RINGCERT_PIPELINE_HPP
#define RINGCERT_PIPELINE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ringcert/irred_ff.hpp"
#include "ringcert/irred_int.hpp"
#include "ringcert/maximality.hpp"
#include "ringcert/orders.hpp"

namespace ringcert {

/// a*T + b*T' = n with n = sign * prod factors[k].prime^exponent, the
/// primes strictly increasing. Any prime not dividing n leaves T mod p
/// squarefree, hence Z[theta] (and so O) is maximal there.
struct SeparabilityWitness {
    ZPoly a;
    ZPoly b;
    BigInt n;
    int sign = 1;
    std::vector<NumberFactor> factors;
    friend bool operator==(const SeparabilityWitness&, const SeparabilityWitness&) = default;
};

using MaximalityEntry = std::variant<DedekindCertificate, PMaxShortCertificate, PMaxLongCertificate>;

/// The prime a maximality entry speaks about.
const BigInt& entry_prime(const MaximalityEntry& e);

/// Everything needed to accept O = O_K for the order described by `order`.
/// entries[k] certifies the prime separability.factors[k].
struct CertificateBundle {
    ZPoly T;
    IntIrredCertificate irreducibility;
    OrderDescription order;
    SeparabilityWitness separability;
    std::vector<MaximalityEntry> entries;
    std::optional<BigInt> claimed_discriminant;
    friend bool operator==(const CertificateBundle&, const CertificateBundle&) = default;
};

Verdict verify_separability(const ZPoly& T, const SeparabilityWitness& w);
Verdict verify_bundle(const CertificateBundle& bundle, unsigned threads = 1);

/// Verifies the bundle, then compares disc(O) with `claimed`.
Verdict claim_discriminant(const CertificateBundle& bundle, const BigInt& claimed, unsigned threads = 1);

struct BundleOptions {
    IntIrredOptions irred;
    PMaxOptions pmax;
    bool prefer_dedekind = true;
    std::uint64_t seed = 1;
};

struct BundleFailure {
    enum class Kind { InvalidInput, Reducible, IrreducibilityExhausted, NotAnOrder, NotMaximal };
    Kind kind = Kind::InvalidInput;
    std::string message;
    std::optional<ZPoly> factor;
    std::optional<BigInt> prime;
    Coords kernel_element;
};

using BundleResult = std::variant<CertificateBundle, BundleFailure>;

/// The basis is given as d and the matrix whose columns are d * w_j in the
/// power basis of theta (it need not be triangular).
BundleResult generate_bundle(const ZPoly& T, const BigInt& d, const ZMatrix& basis, const BundleOptions& opts = {});

SeparabilityWitness generate_separability(const ZPoly& T, std::uint64_t seed = 1);

/// Which form each entry took, e.g. {"2:short", "3:dedekind"}.
std::vector<std::string> entry_forms(const CertificateBundle& bundle);

}  // namespace ringcert

#endif
