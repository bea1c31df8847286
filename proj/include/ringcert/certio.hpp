#ifndef RINGCERT_CERTIO_HPP
#define RINGCERT_CERTIO_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ringcert/irred_ff.hpp"
#include "ringcert/irred_int.hpp"
#include "ringcert/maximality.hpp"
#include "ringcert/orders.hpp"
#include "ringcert/pipeline.hpp"
#include "ringcert/primality.hpp"

namespace ringcert {

inline constexpr std::string_view kSchemaVersion = "ringcert/1";
inline constexpr std::string_view kVerdictSchemaVersion = "ringcert-verdict/1";

/// Input basis: the columns of `matrix` are d * w_j in the power basis.
struct BasisInput {
    BigInt d;
    ZMatrix matrix;
    friend bool operator==(const BasisInput&, const BasisInput&) = default;
};

/// Stand-alone p-maximality certificates carry the order they talk about.
struct PMaxShortFile {
    OrderDescription order;
    PMaxShortCertificate cert;
    friend bool operator==(const PMaxShortFile&, const PMaxShortFile&) = default;
};

struct PMaxLongFile {
    OrderDescription order;
    PMaxLongCertificate cert;
    friend bool operator==(const PMaxLongFile&, const PMaxLongFile&) = default;
};

using CertificateFile =
    std::variant<ZPoly, BasisInput, PrimalityProof, RabinCertificate, DegreeAnalysisCertificate, LPFWCertificate,
                 DedekindCertificate, PMaxShortFile, PMaxLongFile, CertificateBundle>;

/// "poly", "basis", "pratt", "rabin", "degree_analysis", "lpfw", "dedekind",
/// "pmax_short", "pmax_long" or "bundle".
std::string kind_name(const CertificateFile& file);

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::optional<std::size_t> byte, std::string pointer = {})
        : std::runtime_error(what), byte_offset(byte), json_pointer(std::move(pointer))
    {
    }
    std::optional<std::size_t> byte_offset;
    std::string json_pointer;
};

std::string serialize(const CertificateFile& file);
/// Throws ParseError on syntax errors (with a byte offset), schema
/// mismatches, non-canonical numbers and inconsistent dimensions.
CertificateFile parse(std::string_view bytes);

std::string sha256_hex(std::string_view bytes);

/// Dispatches to the verifier for the file's kind. Inputs (poly, basis)
/// are not certificates and throw std::invalid_argument.
Verdict verify_certificate(const CertificateFile& file, unsigned threads = 1);

struct VerifyOutcome {
    enum class Status { Accepted, Rejected, Malformed };
    Status status = Status::Malformed;
    std::string kind;
    std::string reason;
};

VerifyOutcome verify_bytes(std::string_view bytes, unsigned threads = 1);

/// Deterministic single-line JSON, independent of thread count.
std::string verdict_json(const VerifyOutcome& outcome);

/// One-field tamperings of a serialized certificate: each numeric leaf is
/// replaced by a few nearby values, and the envelope digest is recomputed
/// so the file still passes the integrity check. Leaves whose alternatives
/// can legitimately verify (pivot choices, Pratt witnesses, Frobenius
/// exponents) are skipped.
struct Mutation {
    std::string pointer;
    std::string before;
    std::string after;
    std::string bytes;
};

/// With limit > 0 an evenly spaced subset of at most `limit` mutations.
std::vector<Mutation> single_field_mutations(std::string_view bytes, std::size_t limit = 0);

/// Directory holding the shipped fixtures: $RINGCERT_FIXTURES if set,
/// otherwise `fallback`.
std::string fixture_dir(const std::string& fallback);

}  // namespace ringcert

#endif
