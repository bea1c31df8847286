#include "common.hpp"
#include "doctest.h"
#include "ringcert/pipeline.hpp"
#include "ringcert/resultants.hpp"

using namespace ringcert;

TEST_SUITE("pipeline")
{
    TEST_CASE("every shipped bundle verifies")
    {
        for (const std::string& name : testing::bundle_names()) {
            CAPTURE(name);
            auto file = parse(testing::slurp(testing::fixtures() + "/bundles/" + name + ".bundle"));
            const CertificateBundle& b = std::get<CertificateBundle>(file);
            CHECK(verify_bundle(b, 1).accepted);
            CHECK(verify_bundle(b, 8).accepted);
        }
    }

    TEST_CASE("separability witness")
    {
        const ZPoly T = make_zpoly({-10, -3, 0, 1});
        SeparabilityWitness w = generate_separability(T);
        CHECK(w.n == disc_poly(T));
        CHECK(verify_separability(T, w).accepted);
        auto bad = w;
        bad.sign = -bad.sign;
        CHECK_FALSE(verify_separability(T, bad).accepted);
        bad = w;
        bad.a = bad.a + make_zpoly({1});
        CHECK(verify_separability(T, bad).reason == "separability/bezout");
        bad = w;
        bad.factors.pop_back();
        CHECK(verify_separability(T, bad).reason == "separability/factorization-product");
        CHECK_THROWS(generate_separability(make_zpoly({1, 2, 1})));
    }

    TEST_CASE("coverage of every prime dividing Res(T, T')")
    {
        CertificateBundle b = testing::generate(testing::load_inputs("cubic_x3-3x-10"));
        REQUIRE(entry_prime(b.entries.front()) == 2);
        auto missing = b;
        missing.entries.erase(missing.entries.begin());
        CHECK(verify_bundle(missing).reason == "bundle/coverage/uncovered/p=2");
        auto extra = b;
        extra.entries.push_back(*generate_dedekind(b.T, 7));
        CHECK(verify_bundle(extra).reason == "bundle/coverage/extra-entry");
        auto swapped = b;
        swapped.T = make_zpoly({-10, -4, 0, 1});
        CHECK_FALSE(verify_bundle(swapped).accepted);
    }

    TEST_CASE("maximality failures carry the prime in the reason")
    {
        CertificateBundle b = testing::generate(testing::load_inputs("cubic_x3-30x-80"));
        for (std::size_t k = 0; k < b.entries.size(); ++k) {
            auto bad = b;
            std::visit(
                [](auto& c) {
                    using C = std::decay_t<decltype(c)>;
                    if constexpr (std::is_same_v<C, DedekindCertificate>)
                        c.u = c.u + make_fppoly({1}, Modulus::of(c.p.p));
                    else
                        c.X(0, 0) += 1;
                },
                bad.entries[k]);
            Verdict v = verify_bundle(bad, 4);
            const std::string expect = "bundle/maximality/p=" + to_string(entry_prime(b.entries[k])) + "/";
            CHECK(v.reason.rfind(expect, 0) == 0);
        }
    }

    TEST_CASE("discriminant claims")
    {
        CertificateBundle b = testing::generate(testing::load_inputs("cubic_x3-30x-80"));
        CHECK(claim_discriminant(b, -16200).accepted);
        Verdict wrong = claim_discriminant(b, -16201);
        CHECK(wrong.reason ==
              "discriminant/mismatch/computed=-16200/poly-disc=64800/index=2/claimed=-16201");
        b.claimed_discriminant = BigInt(-16200);
        CHECK(verify_bundle(b).accepted);
        b.claimed_discriminant = BigInt(16200);
        CHECK(verify_bundle(b).reason == "bundle/discriminant-claim/computed=-16200/claimed=16200");

        auto broken = testing::generate(testing::load_inputs("cubic_x3-30x-80"));
        broken.order.theta[0] += 1;
        CHECK(claim_discriminant(broken, -16200).reason == "bundle/order/theta");
    }

    TEST_CASE("generation failures")
    {
        using Kind = BundleFailure::Kind;
        ZMatrix id = ZMatrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
        auto red = generate_bundle(make_zpoly({-6, 11, -6, 1}), 1, id);
        REQUIRE(std::holds_alternative<BundleFailure>(red));
        CHECK(std::get<BundleFailure>(red).kind == Kind::Reducible);
        CHECK(std::get<BundleFailure>(red).factor.has_value());

        auto not_order = generate_bundle(make_zpoly({-10, -3, 0, 1}), 2,
                                         ZMatrix::from_rows({{2, 0, 0}, {0, 1, 0}, {0, 0, 2}}));
        REQUIRE(std::holds_alternative<BundleFailure>(not_order));
        CHECK(std::get<BundleFailure>(not_order).kind == Kind::NotAnOrder);

        auto nm = generate_bundle(make_zpoly({-10, -3, 0, 1}), 1, id);
        REQUIRE(std::holds_alternative<BundleFailure>(nm));
        const BundleFailure& f = std::get<BundleFailure>(nm);
        CHECK(f.kind == Kind::NotMaximal);
        CHECK(f.message == "not maximal at 2");
        CHECK(f.prime == BigInt(2));
        CHECK_FALSE(f.kernel_element.empty());

        auto invalid = generate_bundle(make_zpoly({1, 0, 2}), 1, ZMatrix::from_rows({{1, 0}, {0, 1}}));
        REQUIRE(std::holds_alternative<BundleFailure>(invalid));
        CHECK(std::get<BundleFailure>(invalid).kind == Kind::InvalidInput);
    }

    TEST_CASE("preferring Dedekind is optional")
    {
        BundleOptions kernel_only;
        kernel_only.prefer_dedekind = false;
        CertificateBundle b = testing::generate(testing::load_inputs("gaussian_x2+1"), kernel_only);
        CHECK(verify_bundle(b).accepted);
        for (const auto& e : b.entries)
            CHECK_FALSE(std::holds_alternative<DedekindCertificate>(e));
    }
}
