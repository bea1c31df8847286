#ifndef RINGCERT_IRRED_FF_HPP
#define RINGCERT_IRRED_FF_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "ringcert/fp.hpp"
#include "ringcert/poly.hpp"
#include "ringcert/primality.hpp"
#include "ringcert/verdict.hpp"

namespace ringcert {

struct NumberFactor {
    PrimalityProof prime;
    unsigned exponent = 0;
    friend bool operator==(const NumberFactor&, const NumberFactor&) = default;
};

/// Rabin-style irreducibility certificate for f over F_p.
///
/// With p = sum_j b_j t^j (base-t digits b_0..b_s, b_s != 0), the rows
/// h'_{i,s}, ..., h'_{i,0} trace the computation of h_i^p modulo f one digit
/// at a time, and g_{ij} is the quotient that makes each step an exact
/// polynomial identity:
///   h'_{i,s} = h_i^{b_s},  h'_{i,0} = h_{i+1},
///   f * g_{ij} = (h'_{i,j+1})^t * h_i^{b_j} - h'_{ij}       (0 <= j < s),
///   h_0 = X,  h_n = X,
///   a_{n/q} * f + b_{n/q} * (h_{n/q} - X) = 1   for each prime q | n.
struct RabinCertificate {
    PrimalityProof p;
    unsigned n = 0;
    BigInt t;
    unsigned s = 0;
    FpPoly f;
    std::vector<FpPoly> h;                   // n+1 entries
    std::vector<std::vector<FpPoly>> g;      // n x s
    std::vector<std::vector<FpPoly>> hprime; // n x (s+1)
    std::vector<FpPoly> a;                   // n entries, only n/q used
    std::vector<FpPoly> b;
    std::vector<NumberFactor> n_factors;

    friend bool operator==(const RabinCertificate&, const RabinCertificate&) = default;
};

/// A nontrivial monic factor of the input.
struct ReducibleFp {
    FpPoly factor;
};

/// Base-t digits of e, least significant first. Empty for e = 0.
std::vector<unsigned long> base_digits(const BigInt& e, const BigInt& t);

struct ResidueChain {
    FpPoly y;
    std::vector<FpPoly> steps;  // partial powers, most significant digit first
};

/// g^e mod f using base-t digits of e.
ResidueChain residue_chain(const FpPoly& g, const BigInt& e, const FpPoly& f, const BigInt& t = 2);

Verdict verify_rabin(const RabinCertificate& cert, unsigned threads = 1);

/// Base used by the generator when none is requested.
BigInt default_rabin_base(const BigInt& p, unsigned n);

std::variant<RabinCertificate, ReducibleFp> generate_rabin(const FpPoly& f, std::optional<BigInt> t = std::nullopt);

// Generator-side factorization over F_p.

struct FpFactor {
    FpPoly poly;  // monic irreducible
    unsigned multiplicity = 0;
};

struct FpFactorization {
    Fp leading;
    std::vector<FpFactor> factors;  // sorted by degree, then coefficients
};

std::vector<FpFactor> squarefree_factorization(const FpPoly& f);
std::vector<FpFactor> distinct_degree_factorization(const FpPoly& f);
FpFactorization factor_fp(const FpPoly& f, std::uint64_t seed = 1);

/// Total order on polynomials over the same F_p used for deterministic output.
bool fppoly_less(const FpPoly& a, const FpPoly& b);

}  // namespace ringcert

#endif
