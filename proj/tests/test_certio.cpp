#include <filesystem>

#include "common.hpp"
#include "doctest.h"
#include "ringcert/certio.hpp"

using namespace ringcert;

namespace {

std::vector<std::string> all_fixture_files()
{
    std::vector<std::string> out;
    for (const char* sub : {"bundles", "certs", "inputs"})
        for (const auto& e : std::filesystem::directory_iterator(testing::fixtures() + "/" + sub))
            out.push_back(e.path().string());
    std::sort(out.begin(), out.end());
    return out;
}

const std::string kPoly = R"({"schema_version": "ringcert/1", "kind": "poly", "payload": {"coefficients": ["1", "0", "1"]}})";

}  // namespace

TEST_SUITE("certio")
{
    TEST_CASE("generated fixtures round-trip byte for byte")
    {
        for (const std::string& path : all_fixture_files()) {
            if (path.find("/inputs/") != std::string::npos)
                continue;
            CAPTURE(path);
            const std::string bytes = testing::slurp(path);
            CHECK(serialize(parse(bytes)) == bytes);
        }
    }

    TEST_CASE("hand-written inputs parse and canonicalize stably")
    {
        for (const std::string& path : all_fixture_files()) {
            if (path.find("/inputs/") == std::string::npos)
                continue;
            CAPTURE(path);
            CertificateFile f = parse(testing::slurp(path));
            const std::string canon = serialize(f);
            CHECK(serialize(parse(canon)) == canon);
            CHECK(parse(canon) == f);
        }
    }

    TEST_CASE("regenerated bundles match the fixtures")
    {
        for (const std::string& name : testing::bundle_names()) {
            CAPTURE(name);
            CertificateBundle b = testing::generate(testing::load_inputs(name));
            if (name == "cubic_x3-30x-80")
                b.claimed_discriminant = BigInt(-16200);
            CHECK(serialize(b) == testing::slurp(testing::fixtures() + "/bundles/" + name + ".bundle"));
        }
    }

    TEST_CASE("integers must be decimal strings")
    {
        CHECK(std::get<ZPoly>(parse(kPoly)) == make_zpoly({1, 0, 1}));
        std::string as_number = kPoly;
        as_number.replace(as_number.find("\"0\""), 3, "1e5");
        CHECK_THROWS_AS(parse(as_number), ParseError);
        std::string as_string = kPoly;
        as_string.replace(as_string.find("\"0\""), 3, "\"1e5\"");
        CHECK_THROWS_AS(parse(as_string), ParseError);
        std::string plain = kPoly;
        plain.replace(plain.find("\"0\""), 3, "0");
        CHECK_THROWS_AS(parse(plain), ParseError);
    }

    TEST_CASE("syntax errors report a byte offset")
    {
        const std::string bytes = testing::slurp(testing::fixtures() + "/bundles/gaussian_x2+1.bundle");
        try {
            parse(bytes.substr(0, bytes.size() / 2));
            FAIL("truncated input parsed");
        } catch (const ParseError& e) {
            REQUIRE(e.byte_offset.has_value());
            CHECK(*e.byte_offset <= bytes.size() / 2 + 1);
        }
        VerifyOutcome o = verify_bytes(bytes.substr(0, 40));
        CHECK(o.status == VerifyOutcome::Status::Malformed);
        CHECK(o.reason.rfind("parse/", 0) == 0);
    }

    TEST_CASE("envelope checks")
    {
        const std::string bytes = testing::slurp(testing::fixtures() + "/bundles/gaussian_x2+1.bundle");
        CHECK(verify_bytes(bytes).status == VerifyOutcome::Status::Accepted);

        std::string v2 = bytes;
        v2.replace(v2.find("ringcert/1"), 10, "ringcert/2");
        CHECK(verify_bytes(v2).status == VerifyOutcome::Status::Malformed);

        std::string tampered = bytes;
        const std::size_t at = tampered.find("\"n_r\": \"2\"");
        REQUIRE(at != std::string::npos);
        tampered.replace(at, 10, "\"n_r\": \"3\"");
        VerifyOutcome t = verify_bytes(tampered);
        CHECK(t.status == VerifyOutcome::Status::Malformed);

        std::string unknown = kPoly;
        unknown.replace(unknown.find("\"coefficients\""), 0, "\"extra\": 1, ");
        CHECK_THROWS_AS(parse(unknown), ParseError);

        std::string no_integrity = bytes;
        no_integrity.erase(no_integrity.find("\"integrity\""), no_integrity.find("\"kind\"") - no_integrity.find("\"integrity\""));
        CHECK(verify_bytes(no_integrity).status == VerifyOutcome::Status::Malformed);
    }

    TEST_CASE("sha256")
    {
        CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
        CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    }

    TEST_CASE("verdict JSON")
    {
        VerifyOutcome ok{VerifyOutcome::Status::Accepted, "bundle", ""};
        CHECK(verdict_json(ok) ==
              R"({"accepted":true,"kind":"bundle","reason":"","schema_version":"ringcert-verdict/1","status":"accepted"})");
        VerifyOutcome bad{VerifyOutcome::Status::Rejected, "rabin", "rabin/check-ii/i=0"};
        CHECK(verdict_json(bad).find(R"("status":"rejected")") != std::string::npos);
        CHECK(verify_bytes(kPoly).status == VerifyOutcome::Status::Malformed);
    }

    TEST_CASE("mutations change exactly one leaf and are rejected")
    {
        const std::string bytes = testing::slurp(testing::fixtures() + "/certs/cubic_x3-30x-80.irred");
        auto muts = single_field_mutations(bytes, 30);
        CHECK(muts.size() == 30);
        for (const Mutation& m : muts) {
            CAPTURE(m.pointer);
            CHECK(m.before != m.after);
            VerifyOutcome o = verify_bytes(m.bytes);
            CHECK(o.status != VerifyOutcome::Status::Accepted);
            CHECK_FALSE(o.reason.empty());
        }
    }
}
