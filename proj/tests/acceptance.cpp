// Acceptance criteria, one PASS/FAIL line each. Exit status is the number of
// failed criteria (0 when everything passes).

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "common.hpp"
#include "oracles.hpp"
#include "ringcert/certio.hpp"
#include "ringcert/irred_ff.hpp"
#include "ringcert/irred_int.hpp"
#include "ringcert/maximality.hpp"
#include "ringcert/pipeline.hpp"
#include "ringcert/resultants.hpp"

using namespace ringcert;
using Clock = std::chrono::steady_clock;

namespace {

// Pinned limits.
constexpr double kCauchyLimitMs = 1.0;
constexpr double kAnchorLimitS = 5.0;
constexpr double kExhaustiveLimitS = 60.0;
constexpr double kResultantLimitS = 30.0;
constexpr double kTimesTableLimitS = 10.0;
constexpr double kMutationLimitS = 60.0;
constexpr double kQuinticLimitS = 120.0;
constexpr int kResultantPairs = 1000;
constexpr int kTimesTablePairs = 500;
constexpr std::size_t kMinMutations = 100;
constexpr std::size_t kMutationSample = 400;
constexpr std::size_t kMinQuintics = 5;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void report(int id, bool ok, const std::string& what, const std::string& detail)
{
    std::printf("[%s] AC%d %s | %s\n", ok ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!ok)
        ++failures;
}

template <class Fn>
void guarded(int id, const std::string& what, Fn&& fn)
{
    try {
        fn();
    } catch (const std::exception& e) {
        report(id, false, what, std::string("exception: ") + e.what());
    }
}

std::string fmt(double x, const char* unit)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f %s", x, unit);
    return buf;
}

// ---------------------------------------------------------------------------

void ac1()
{
    const ZPoly f = make_zpoly({3, 14, 15, 92, 65});
    const Rat r = make_rat(1, 2);
    (void)cauchy_bound_scaled(f, r);
    const auto t0 = Clock::now();
    const Rat got = cauchy_bound_scaled(f, r);
    const double ms = seconds_since(t0) * 1e3;
    const bool ok = got == make_rat(249, 130) && ms < kCauchyLimitMs;
    report(1, ok, "cauchy_bound_scaled([3,14,15,92,65], 1/2) == 249/130",
           "got " + to_string(got) + ", exact equality, " + fmt(ms, "ms") + " < 1 ms");
}

void ac2()
{
    const auto t0 = Clock::now();
    auto fx = testing::load_inputs("cubic_x3-30x-80");
    CertificateBundle b = testing::generate(fx);
    Verdict v = verify_bundle(b, 4);
    Verdict claim = claim_discriminant(b, BigInt(-16200), 4);
    Verdict wrong = claim_discriminant(b, BigInt(-16201), 4);
    const double s = seconds_since(t0);
    const bool ok = v.accepted && claim.accepted && !wrong.accepted && s < kAnchorLimitS;
    report(2, ok, "X^3-30X-80 bundle verifies and claim_discriminant(-16200) accepts",
           std::string("verify=") + (v ? "accept" : v.reason) + ", claim=" + (claim ? "accept" : claim.reason) +
               ", claim(-16201)=" + (wrong ? "accept" : "reject") + ", " + fmt(s, "s") + " < 5 s");
}

void ac3()
{
    const auto t0 = Clock::now();
    auto good = testing::load_inputs("cubic_x3-3x-10");
    CertificateBundle b = testing::generate(good);
    Verdict v = verify_bundle(b, 4);

    auto power = testing::load_inputs("cubic_x3-3x-10", "cubic_x3-3x-10_power");
    BundleResult r = generate_bundle(power.T, power.d, power.basis);
    bool reported = false, witness_ok = false;
    std::string detail;
    if (auto* fail = std::get_if<BundleFailure>(&r)) {
        reported = fail->kind == BundleFailure::Kind::NotMaximal && fail->prime == BigInt(2) &&
                   fail->message == "not maximal at 2";
        // x/2 must be an algebraic integer outside Z[alpha]: x is nonzero mod 2
        // and multiplication by x/2 has an integral characteristic polynomial.
        OrderDescription o = testing::build(power);
        TimesTable tt = times_table_of(o);
        const auto& x = fail->kernel_element;
        bool nonzero_mod_2 = false;
        for (const BigInt& c : x)
            nonzero_mod_2 |= mpz_odd_p(c.get_mpz_t()) != 0;
        std::vector<std::vector<oracle::Q>> M(3, std::vector<oracle::Q>(3));
        for (std::size_t j = 0; j < 3; ++j) {
            std::vector<BigInt> ej(3, BigInt(0));
            ej[j] = 1;
            auto col = padded(tt_mul(tt, x, ej), 3, BigInt(0));
            for (std::size_t i = 0; i < 3; ++i)
                M[i][j] = oracle::Q(col[i], 2);
        }
        witness_ok = nonzero_mod_2 && oracle::all_integral(oracle::charpoly(M));
        detail = "kernel element [";
        for (std::size_t i = 0; i < x.size(); ++i)
            detail += (i ? "," : "") + to_string(x[i]);
        detail += "]";
    }
    const double s = seconds_since(t0);
    const bool ok = v.accepted && reported && witness_ok && s < kAnchorLimitS;
    report(3, ok, "X^3-3X-10: basis {1,a,(a-a^2)/2} verifies; {1,a,a^2} not maximal at 2",
           std::string("verify=") + (v ? "accept" : v.reason) + ", " + detail +
               (witness_ok ? " (x/2 integral, x != 0 mod 2)" : " (witness invalid)") + ", " + fmt(s, "s") +
               " < 5 s");
}

void ac4()
{
    const auto t0 = Clock::now();
    long checked = 0, mismatches = 0;
    for (long p : {2L, 3L, 5L}) {
        const Modulus mod = Modulus::of(p);
        for (int deg = 1; deg <= 4; ++deg) {
            for (long lead = 1; lead < p; ++lead) {
                oracle::for_each_monic(deg, p, [&](const oracle::LongPoly& monic) {
                    oracle::LongPoly f = monic;
                    for (long& c : f)
                        c = c * lead % p;
                    std::vector<BigInt> coeffs(f.begin(), f.end());
                    FpPoly fp = make_fppoly(coeffs, mod);
                    const bool brute = oracle::irreducible_by_trial_division(f, p);
                    auto r = generate_rabin(make_monic(fp));
                    bool rabin;
                    if (auto* cert = std::get_if<RabinCertificate>(&r))
                        rabin = verify_rabin(*cert).accepted;
                    else
                        rabin = false;
                    ++checked;
                    if (rabin != brute)
                        ++mismatches;
                });
            }
        }
    }
    const double s = seconds_since(t0);
    report(4, mismatches == 0 && s < kExhaustiveLimitS,
           "Rabin agrees with trial division on every polynomial of degree <= 4 over F_2, F_3, F_5",
           std::to_string(checked) + " polynomials, " + std::to_string(mismatches) + " mismatches, " +
               fmt(s, "s") + " < 60 s");
}

void ac5()
{
    const auto t0 = Clock::now();
    std::mt19937_64 rng(5);
    long mismatches = 0, total = 0;
    for (long p : {5L, 7L, 11L}) {
        const Modulus mod = Modulus::of(p);
        std::uniform_int_distribution<long> res(0, p - 1), unit(1, p - 1);
        std::uniform_int_distribution<int> deg(1, 5);
        for (int k = 0; k < kResultantPairs; ++k) {
            const long a = unit(rng), b = unit(rng);
            std::vector<long> alpha(static_cast<std::size_t>(deg(rng))), beta(static_cast<std::size_t>(deg(rng)));
            for (long& x : alpha)
                x = res(rng);
            for (long& x : beta)
                x = res(rng);
            auto fl = oracle::from_roots(a, alpha, p), gl = oracle::from_roots(b, beta, p);
            FpPoly f = make_fppoly(std::vector<BigInt>(fl.begin(), fl.end()), mod);
            FpPoly g = make_fppoly(std::vector<BigInt>(gl.begin(), gl.end()), mod);
            const long expect = oracle::resultant_from_roots(a, alpha, b, beta, p);
            if (resultant(f, g).value() != expect)
                ++mismatches;
            ++total;
        }
    }
    const double s = seconds_since(t0);
    report(5, mismatches == 0 && s < kResultantLimitS,
           "Sylvester determinant equals (-1)^{nm} a^m b^n prod(alpha_i - beta_j) on random split pairs",
           std::to_string(total) + " pairs over F_5, F_7, F_11 (1000 each), " + std::to_string(mismatches) +
               " mismatches, " + fmt(s, "s") + " < 30 s");
}

void ac6()
{
    const auto t0 = Clock::now();
    std::mt19937_64 rng(6);
    std::uniform_int_distribution<long> coord(-50, 50);
    long mismatches = 0, total = 0;
    const std::vector<std::pair<std::string, std::string>> cubics = {
        {"cubic_x3-30x-80", "cubic_x3-30x-80"},
        {"cubic_x3-3x-10", "cubic_x3-3x-10"},
        {"cubic_x3-3x-10", "cubic_x3-3x-10_power"}};
    for (const auto& [poly, basis] : cubics) {
        OrderDescription o = testing::build(testing::load_inputs(poly, basis));
        TimesTable tt = times_table_of(o);
        std::vector<std::vector<oracle::Z>> B(3, std::vector<oracle::Z>(3));
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j)
                B[i][j] = o.B(i, j);
        oracle::ZP T(o.T.coeffs().begin(), o.T.coeffs().end());
        for (int k = 0; k < kTimesTablePairs; ++k) {
            std::vector<BigInt> x(3), y(3);
            for (auto& c : x)
                c = coord(rng);
            for (auto& c : y)
                c = coord(rng);
            auto got = padded(tt_mul(tt, x, y), 3, BigInt(0));
            auto want = oracle::multiply_via_polynomials(B, o.d, T, x, y);
            bool same = true;
            for (std::size_t i = 0; i < 3; ++i)
                same &= oracle::Q(got[i]) == want[i];
            mismatches += !same;
            ++total;
        }
    }
    const double s = seconds_since(t0);
    report(6, mismatches == 0 && s < kTimesTableLimitS, "tt_mul equals the polynomial-mod-T oracle",
           std::to_string(total) + " pairs over 3 cubic orders (500 each), " + std::to_string(mismatches) +
               " mismatches, " + fmt(s, "s") + " < 10 s");
}

std::string irreducible_rabin_file()
{
    // First irreducible X^6 + c1 X + c0 over F_7.
    const Modulus p = Modulus::of(7);
    for (long c0 = 1; c0 < 7; ++c0)
        for (long c1 = 0; c1 < 7; ++c1) {
            auto r = generate_rabin(make_fppoly({c0, c1, 0, 0, 0, 0, 1}, p));
            if (auto* c = std::get_if<RabinCertificate>(&r))
                return serialize(*c);
        }
    throw std::runtime_error("no irreducible sextic found");
}

void ac7()
{
    const auto t0 = Clock::now();
    std::vector<std::pair<std::string, std::string>> files;  // kind label, bytes

    files.emplace_back("pratt", serialize(make_primality_proof(BigInt("618970019642690137449562111"))));
    files.emplace_back("rabin", irreducible_rabin_file());
    files.emplace_back("degree_analysis", testing::slurp(testing::fixtures() + "/certs/cubic_x3-30x-80.irred"));
    files.emplace_back("lpfw", testing::slurp(testing::fixtures() + "/certs/quartic_x4+1.irred"));

    auto fx = testing::load_inputs("cubic_x3-30x-80");
    CertificateBundle b = testing::generate(fx);
    OrderDescription o = b.order;
    TimesTable tt = times_table_of(o);
    CertificateBundle quintic = testing::generate(testing::load_inputs("quintic_x5+7x4-2x3-7x2-x-7"));
    files.emplace_back("dedekind", serialize(std::get<DedekindCertificate>(quintic.entries.at(1))));
    files.emplace_back("pmax_short",
                       serialize(PMaxShortFile{o, std::get<PMaxShortCertificate>(generate_pmax(o, tt, 2))}));
    PMaxOptions long_only;
    long_only.allow_short = false;
    files.emplace_back("pmax_long",
                       serialize(PMaxLongFile{o, std::get<PMaxLongCertificate>(generate_pmax(o, tt, 2, long_only))}));
    files.emplace_back("bundle", testing::slurp(testing::fixtures() + "/bundles/cubic_x3-30x-80.bundle"));

    std::ostringstream detail;
    bool all_ok = true;
    for (const auto& [kind, bytes] : files) {
        const VerifyOutcome base = verify_bytes(bytes);
        auto muts = single_field_mutations(bytes, kMutationSample);
        std::size_t rejected = 0, silent = 0;
        std::string escaped;
        for (const Mutation& m : muts) {
            VerifyOutcome out = verify_bytes(m.bytes);
            if (out.status == VerifyOutcome::Status::Accepted) {
                if (escaped.empty())
                    escaped = m.pointer + ":" + m.before + "->" + m.after;
                continue;
            }
            ++rejected;
            silent += out.reason.empty();
        }
        const bool ok = base.status == VerifyOutcome::Status::Accepted && muts.size() >= kMinMutations &&
                        rejected == muts.size() && silent == 0;
        all_ok &= ok;
        detail << kind << " " << rejected << "/" << muts.size() << (ok ? "" : " FAILED") << "; ";
        if (!escaped.empty())
            detail << "accepted mutation " << escaped << "; ";
    }
    const double s = seconds_since(t0);
    detail << fmt(s, "s") << " < 60 s";
    report(7, all_ok && s < kMutationLimitS,
           ">= 100 single-field mutations per certificate kind all rejected with a reason", detail.str());
}

void ac8()
{
    std::ostringstream detail;
    std::size_t ok_count = 0;
    double worst = 0;
    for (const std::string& name : testing::quintic_names()) {
        const auto t0 = Clock::now();
        bool ok = false;
        std::string forms;
        try {
            CertificateBundle b = testing::generate(testing::load_inputs(name));
            ok = verify_bundle(b, 4).accepted;
            for (const std::string& f : entry_forms(b))
                forms += (forms.empty() ? "" : " ") + f;
        } catch (const std::exception& e) {
            forms = e.what();
        }
        const double s = seconds_since(t0);
        worst = std::max(worst, s);
        ok = ok && s < kQuinticLimitS;
        ok_count += ok;
        detail << name << " {" << forms << "} " << fmt(s, "s") << (ok ? "" : " FAILED") << "; ";
        std::printf("       AC8 record: %s forms {%s}\n", name.c_str(), forms.c_str());
    }
    detail << "max " << fmt(worst, "s") << " < 120 s each";
    report(8, ok_count >= kMinQuintics, std::to_string(ok_count) + " degree-5 bundles generate and verify (>= 5)",
           detail.str());
}

void ac9()
{
    std::vector<std::string> paths;
    for (const std::string& name : testing::bundle_names())
        paths.push_back(testing::fixtures() + "/bundles/" + name + ".bundle");
    paths.push_back(testing::fixtures() + "/certs/quartic_x4+1.irred");
    paths.push_back(testing::fixtures() + "/certs/cubic_x3-30x-80.irred");
    std::size_t same = 0;
    std::string diff;
    for (const std::string& p : paths) {
        const std::string bytes = testing::slurp(p);
        const std::string one = verdict_json(verify_bytes(bytes, 1));
        const std::string eight = verdict_json(verify_bytes(bytes, 8));
        if (one == eight)
            ++same;
        else if (diff.empty())
            diff = " first difference: " + p;
    }
    report(9, same == paths.size(), "verdict JSON byte-identical with 1 and 8 threads on every fixture",
           std::to_string(same) + "/" + std::to_string(paths.size()) + " fixtures identical" + diff);
}

}  // namespace

int main()
{
    guarded(1, "cauchy bound", ac1);
    guarded(2, "X^3-30X-80 bundle", ac2);
    guarded(3, "X^3-3X-10 bundle", ac3);
    guarded(4, "exhaustive Rabin", ac4);
    guarded(5, "resultant oracle", ac5);
    guarded(6, "times table oracle", ac6);
    guarded(7, "mutations", ac7);
    guarded(8, "degree-5 bundles", ac8);
    guarded(9, "thread-count determinism", ac9);
    std::printf("%d criteria failed\n", failures);
    return failures;
}
