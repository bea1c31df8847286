#ifndef RINGCERT_IRRED_INT_HPP
#define RINGCERT_IRRED_INT_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <variant>
#include <vector>

#include "ringcert/irred_ff.hpp"
#include "ringcert/poly.hpp"
#include "ringcert/primality.hpp"
#include "ringcert/verdict.hpp"

namespace ringcert {

/// One irreducible factor of f mod p, with its own Rabin certificate
/// (the factor polynomial is cert.f, monic).
struct ModPFactor {
    RabinCertificate cert;
    unsigned multiplicity = 0;
    friend bool operator==(const ModPFactor&, const ModPFactor&) = default;
};

struct DegreeAnalysisPrime {
    PrimalityProof p;
    std::vector<ModPFactor> factors;
    friend bool operator==(const DegreeAnalysisPrime&, const DegreeAnalysisPrime&) = default;
};

/// Factorizations of f modulo several primes. Any factor of f over Z has a
/// degree lying in the subset sums of the factor degrees at every prime.
struct DegreeAnalysisCertificate {
    ZPoly f;
    std::vector<DegreeAnalysisPrime> primes;
    friend bool operator==(const DegreeAnalysisCertificate&, const DegreeAnalysisCertificate&) = default;
};

/// Large prime factor witness: |f(m)| = s * P with P prime, |m| >= rho + 1
/// and s < (|m| - rho)^d, where rho bounds the complex roots and every
/// factor of f has degree >= d. An absent degree analysis means d = 1.
struct LPFWCertificate {
    ZPoly f;
    std::optional<DegreeAnalysisCertificate> degree_analysis;
    Rat r;
    Rat rho;
    BigInt m;
    BigInt s;
    PrimalityProof P;
    friend bool operator==(const LPFWCertificate&, const LPFWCertificate&) = default;
};

using IntIrredCertificate = std::variant<DegreeAnalysisCertificate, LPFWCertificate>;

/// A nontrivial factor over Z (a constant > 1 when f is not primitive).
struct ReducibleZ {
    ZPoly factor;
};

/// The generator gave up within its budget. Not a statement about f.
struct SearchExhausted {
    std::string message;
};

std::set<int> subset_sums(const std::vector<int>& degrees);

/// min((intersection of the subset-sum sets) \ {0}); -1 if that set is empty.
int degree_lower_bound(const std::vector<std::vector<int>>& degree_multisets);

/// r * (1 + max_{i<n} |a_i| / (|a_n| r^{n-i})).
Rat cauchy_bound_scaled(const ZPoly& f, const Rat& r);

/// Verifies the factorizations; on success `d` holds the degree lower bound.
Verdict verify_degree_analysis(const DegreeAnalysisCertificate& cert, int& d, unsigned threads = 1);
/// Irreducibility via degree analysis alone: requires d = deg f.
Verdict verify_degree_analysis_irreducible(const DegreeAnalysisCertificate& cert, unsigned threads = 1);
Verdict verify_lpfw(const LPFWCertificate& cert, unsigned threads = 1);
Verdict verify_int_irred(const IntIrredCertificate& cert, unsigned threads = 1);

struct IntIrredOptions {
    unsigned prime_budget = 40;          // primes tried for degree analysis
    unsigned evaluation_budget = 10000;  // LPFW evaluation points
    std::uint64_t seed = 1;
};

using IntIrredResult = std::variant<IntIrredCertificate, ReducibleZ, SearchExhausted>;

IntIrredResult generate_int_irred(const ZPoly& f, const IntIrredOptions& opts = {});

/// Generator side: returns a nontrivial factor of f if f is reducible over Z.
std::optional<ZPoly> find_integer_factor(const ZPoly& f, std::uint64_t seed = 1);

}  // namespace ringcert

#endif
