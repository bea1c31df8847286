#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ringcert/certio.hpp"
#include "ringcert/pipeline.hpp"
#include "ringcert/resultants.hpp"

using namespace ringcert;

namespace {

// Exit codes shared by all subcommands.
constexpr int kAccepted = 0;
constexpr int kRejected = 1;
constexpr int kMalformed = 2;
constexpr int kExhausted = 3;

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void emit(const std::string& bytes, const std::string& out_path)
{
    if (out_path.empty() || out_path == "-") {
        std::cout << bytes;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + out_path);
    out << bytes;
}

template <class T>
T load_as(const std::string& path, const char* what)
{
    CertificateFile f = parse(read_file(path));
    if (auto* x = std::get_if<T>(&f))
        return *x;
    throw ParseError(path + ": expected a " + what + " file, found kind '" + kind_name(f) + "'", std::nullopt);
}

std::string vector_text(const std::vector<BigInt>& v)
{
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + to_string(v[i]);
    return s + "]";
}

struct Common {
    unsigned threads = 1;
    std::uint64_t seed = 1;
    unsigned budget = 0;
    std::string out;
};

int gen_irred(const std::string& poly_path, const Common& c)
{
    ZPoly f = load_as<ZPoly>(poly_path, "poly");
    IntIrredOptions opts;
    opts.seed = c.seed;
    if (c.budget)
        opts.evaluation_budget = c.budget;
    IntIrredResult r = generate_int_irred(f, opts);
    if (auto* red = std::get_if<ReducibleZ>(&r)) {
        std::cerr << "reducible: factor " << vector_text(red->factor.coeffs()) << "\n";
        emit(serialize(red->factor), c.out);
        return kRejected;
    }
    if (auto* ex = std::get_if<SearchExhausted>(&r)) {
        std::cerr << "search exhausted: " << ex->message << "\n";
        return kExhausted;
    }
    const IntIrredCertificate& cert = std::get<IntIrredCertificate>(r);
    if (auto* da = std::get_if<DegreeAnalysisCertificate>(&cert))
        emit(serialize(*da), c.out);
    else
        emit(serialize(std::get<LPFWCertificate>(cert)), c.out);
    return kAccepted;
}

int gen_bundle(const std::string& poly_path, const std::string& basis_path, const std::string& claim,
               const Common& c)
{
    ZPoly T = load_as<ZPoly>(poly_path, "poly");
    BasisInput basis = load_as<BasisInput>(basis_path, "basis");
    BundleOptions opts;
    opts.seed = c.seed;
    opts.irred.seed = c.seed;
    opts.pmax.seed = c.seed;
    if (c.budget) {
        opts.irred.evaluation_budget = c.budget;
        opts.pmax.witness_budget = c.budget;
    }
    BundleResult r = generate_bundle(T, basis.d, basis.matrix, opts);
    if (auto* fail = std::get_if<BundleFailure>(&r)) {
        std::cerr << fail->message;
        if (fail->kind == BundleFailure::Kind::NotMaximal)
            std::cerr << "; kernel element " << vector_text(fail->kernel_element)
                      << " (coordinates in the supplied basis, divide by p for the missing integer)";
        if (fail->factor)
            std::cerr << "; factor " << vector_text(fail->factor->coeffs());
        std::cerr << "\n";
        return fail->kind == BundleFailure::Kind::IrreducibilityExhausted ? kExhausted : kRejected;
    }
    CertificateBundle b = std::get<CertificateBundle>(std::move(r));
    if (!claim.empty())
        b.claimed_discriminant = parse_bigint(claim);
    emit(serialize(b), c.out);
    return kAccepted;
}

int verify(const std::string& path, bool json_verdict, const Common& c)
{
    VerifyOutcome o = verify_bytes(read_file(path), c.threads);
    if (json_verdict)
        std::cout << verdict_json(o) << "\n";
    switch (o.status) {
    case VerifyOutcome::Status::Accepted:
        if (!json_verdict)
            std::cout << "accepted (" << o.kind << ")\n";
        return kAccepted;
    case VerifyOutcome::Status::Rejected:
        std::cerr << "rejected: " << o.reason << "\n";
        return kRejected;
    default:
        std::cerr << "malformed: " << o.reason << "\n";
        return kMalformed;
    }
}

int disc(const std::string& path, const Common& c)
{
    CertificateBundle b = load_as<CertificateBundle>(path, "bundle");
    Verdict v = verify_bundle(b, c.threads);
    if (!v) {
        std::cerr << "rejected: " << v.reason << "\n";
        return kRejected;
    }
    std::cout << to_string(disc_order(b.order).value) << "\n";
    return kAccepted;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Certificates for irreducibility and rings of integers"};
    app.require_subcommand(1);
    Common common;
    app.add_option("--threads", common.threads, "Worker threads for verification")->check(CLI::Range(1u, 256u));
    app.add_option("--seed", common.seed, "Seed for generator randomness");
    app.add_option("--budget", common.budget, "Search budget (evaluation points and witness samples)");

    CLI::App* gen = app.add_subcommand("gen", "Generate certificates");
    gen->require_subcommand(1);
    std::string poly_path, basis_path, claim;
    CLI::App* irred = gen->add_subcommand("irred", "Irreducibility certificate for an integer polynomial");
    irred->add_option("polyfile", poly_path)->required();
    irred->add_option("-o,--output", common.out, "Output file (default stdout)");
    CLI::App* bundle = gen->add_subcommand("bundle", "Certificate bundle for O = O_K");
    bundle->add_option("polyfile", poly_path)->required();
    bundle->add_option("basisfile", basis_path)->required();
    bundle->add_option("-o,--output", common.out, "Output file (default stdout)");
    bundle->add_option("--claim-disc", claim, "Record a discriminant claim in the bundle");

    std::string cert_path;
    bool json_verdict = false;
    CLI::App* ver = app.add_subcommand("verify", "Check a certificate file");
    ver->add_option("certfile", cert_path)->required();
    ver->add_flag("--json-verdict", json_verdict, "Print the verdict as JSON on stdout");

    CLI::App* dsc = app.add_subcommand("disc", "Verify a bundle and print disc(O)");
    dsc->add_option("bundlefile", cert_path)->required();

    // Global options are accepted after the subcommand too.
    for (CLI::App* sub : {irred, bundle, ver, dsc}) {
        sub->add_option("--threads", common.threads)->check(CLI::Range(1u, 256u));
        sub->add_option("--seed", common.seed);
        sub->add_option("--budget", common.budget);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kMalformed;
    }

    try {
        if (*irred)
            return gen_irred(poly_path, common);
        if (*bundle)
            return gen_bundle(poly_path, basis_path, claim, common);
        if (*ver)
            return verify(cert_path, json_verdict, common);
        return disc(cert_path, common);
    } catch (const ParseError& e) {
        std::cerr << "malformed: " << e.what() << "\n";
        return kMalformed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kMalformed;
    }
}
