#ifndef RINGCERT_TESTS_COMMON_HPP
#define RINGCERT_TESTS_COMMON_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ringcert/certio.hpp"
#include "ringcert/orders.hpp"
#include "ringcert/pipeline.hpp"

namespace testing {

inline std::string fixtures() { return ringcert::fixture_dir(RINGCERT_SOURCE_FIXTURES); }

inline std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("missing fixture " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct OrderFixture {
    std::string name;
    ringcert::ZPoly T;
    ringcert::BigInt d;
    ringcert::ZMatrix basis;
};

/// Loads fixtures/inputs/<name>.{poly,basis}.json.
inline OrderFixture load_inputs(const std::string& name, const std::string& basis_name = "")
{
    using namespace ringcert;
    const std::string dir = fixtures() + "/inputs/";
    CertificateFile poly = parse(slurp(dir + name + ".poly.json"));
    CertificateFile basis = parse(slurp(dir + (basis_name.empty() ? name : basis_name) + ".basis.json"));
    const BasisInput& b = std::get<BasisInput>(basis);
    return {name, std::get<ZPoly>(poly), b.d, b.matrix};
}

inline ringcert::OrderDescription build(const OrderFixture& f)
{
    auto r = ringcert::build_order(f.T, f.d, f.basis);
    return std::get<ringcert::OrderDescription>(r);
}

inline const std::vector<std::string>& bundle_names()
{
    static const std::vector<std::string> names = {
        "quadratic_x2-x+1",           "gaussian_x2+1",
        "cubic_x3-30x-80",            "cubic_x3-3x-10",
        "quartic_x4+1",               "quintic_x5-5x3+10x-2",
        "quintic_x5-10x2-12",         "quintic_x5+20x-16",
        "quintic_x5-15x3-10x2+30x-36", "quintic_x5+x4-4x3+4x2-3x+5",
        "quintic_x5+7x4-2x3-7x2-x-7"};
    return names;
}

inline const std::vector<std::string>& quintic_names()
{
    static const std::vector<std::string> names = {
        "quintic_x5-5x3+10x-2",        "quintic_x5-10x2-12",          "quintic_x5+20x-16",
        "quintic_x5-15x3-10x2+30x-36", "quintic_x5+x4-4x3+4x2-3x+5", "quintic_x5+7x4-2x3-7x2-x-7"};
    return names;
}

inline ringcert::CertificateBundle generate(const OrderFixture& f, const ringcert::BundleOptions& opts = {})
{
    auto r = ringcert::generate_bundle(f.T, f.d, f.basis, opts);
    if (auto* fail = std::get_if<ringcert::BundleFailure>(&r))
        throw std::runtime_error(f.name + ": " + fail->message);
    return std::get<ringcert::CertificateBundle>(std::move(r));
}

}  // namespace testing

#endif
