#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "ringcert/bigint.hpp"
#include "ringcert/fp.hpp"
#include "ringcert/matrix.hpp"
#include "ringcert/orders.hpp"
#include "ringcert/poly.hpp"
#include "ringcert/primality.hpp"
#include "ringcert/verdict.hpp"

using namespace ringcert;

TEST_SUITE("exactalg")
{
    TEST_CASE("decimal literals are strict")
    {
        CHECK(parse_bigint("-123") == -123);
        CHECK(parse_bigint("0") == 0);
        for (const char* bad : {"1e5", "+1", "01", "-0", "", "-", "1.0", " 1", "0x10"})
            CHECK_THROWS_AS(parse_bigint(bad), std::invalid_argument);
        CHECK(parse_rat("6/4") == make_rat(3, 2));
        CHECK_THROWS(parse_rat("1/0"));
        CHECK_THROWS(parse_rat("1/-2"));
    }

    TEST_CASE("prime field arithmetic")
    {
        const Modulus p = Modulus::of(101);
        CHECK(Modulus::of(101) == p);
        for (long a = 1; a < 101; ++a) {
            Fp x(a, p);
            CHECK((x * x.inverse()).value() == 1);
            CHECK(x.pow(100).value() == 1);
        }
        CHECK(Fp(-1L, p).value() == 100);
        CHECK_THROWS(Fp(0L, p).inverse());
    }

    TEST_CASE("dense polynomials stay canonical")
    {
        ZPoly f = make_zpoly({1, 2, 0, 0});
        CHECK(f.degree() == 1);
        CHECK(ZPoly().degree() == kZeroPolyDegree);
        CHECK((f - f).is_zero());
        CHECK((f * make_zpoly({0, 1})).coeffs() == std::vector<BigInt>{0, 1, 2});
        CHECK(formal_derivative(make_zpoly({5, 3, 0, 7})) == make_zpoly({3, 0, 21}));
        CHECK(poly_eval(make_zpoly({-80, -30, 0, 1}), BigInt(-4)) == -64 + 120 - 80);
    }

    TEST_CASE("division, xgcd and powmod over F_p against brute identities")
    {
        std::mt19937_64 rng(11);
        for (long pv : {2L, 3L, 7L, 31L}) {
            const Modulus p = Modulus::of(pv);
            std::uniform_int_distribution<long> c(0, pv - 1);
            for (int trial = 0; trial < 60; ++trial) {
                std::vector<BigInt> a(1 + trial % 7), b(1 + trial % 4);
                for (auto& x : a)
                    x = c(rng);
                for (auto& x : b)
                    x = c(rng);
                b.back() = 1;
                FpPoly f = make_fppoly(a, p), g = make_fppoly(b, p);
                auto [q, r] = poly_divmod(f, g);
                CHECK(q * g + r == f);
                CHECK(r.degree() < g.degree());
                if (f.is_zero())
                    continue;
                auto x = poly_xgcd(f, g);
                CHECK(x.a * f + x.b * g == x.d);
                CHECK(x.d.leading().value() == 1);
                CHECK(poly_mod(f, x.d).is_zero());
                CHECK(poly_mod(g, x.d).is_zero());
                if (g.degree() >= 1) {
                    FpPoly slow = poly_const(Fp(1L, p));
                    for (int k = 0; k < 9; ++k)
                        slow = poly_mod(slow * f, g);
                    CHECK(poly_powmod(f, BigInt(9), g) == slow);
                }
            }
        }
    }

    TEST_CASE("integer polynomial helpers")
    {
        CHECK(content(make_zpoly({6, -9, 12})) == 3);
        CHECK(primitive_part(make_zpoly({-6, 9, -12})) == make_zpoly({2, -3, 4}));
        auto dm = divmod_monic(make_zpoly({-10, -3, 0, 1}) * make_zpoly({1, 1}), make_zpoly({-10, -3, 0, 1}));
        CHECK(dm.quotient == make_zpoly({1, 1}));
        CHECK(dm.remainder.is_zero());
        ZPoly q;
        CHECK(divides_exactly(make_zpoly({-1, 0, 1}), make_zpoly({1, 1}), q));
        CHECK(q == make_zpoly({-1, 1}));
        CHECK_FALSE(divides_exactly(make_zpoly({1, 0, 1}), make_zpoly({1, 1}), q));
    }

    TEST_CASE("Bareiss determinant matches cofactor expansion")
    {
        std::mt19937_64 rng(3);
        std::uniform_int_distribution<long> c(-9, 9);
        for (int trial = 0; trial < 200; ++trial) {
            const std::size_t n = 1 + trial % 5;
            std::vector<std::vector<BigInt>> rows(n, std::vector<BigInt>(n));
            for (auto& r : rows)
                for (auto& x : r)
                    x = trial % 7 == 0 ? BigInt(c(rng) % 2) : BigInt(c(rng));
            CHECK(det_bareiss(ZMatrix::from_rows(rows)) == oracle::det_cofactor(rows));
        }
        CHECK(det_bareiss(ZMatrix::from_rows({{0, 1}, {1, 0}})) == -1);
    }

    TEST_CASE("rref transform records the row operations")
    {
        const Modulus p = Modulus::of(5);
        std::mt19937_64 rng(4);
        std::uniform_int_distribution<long> c(0, 4);
        for (int trial = 0; trial < 50; ++trial) {
            FpMatrix m(4, 6, Fp(0L, p));
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 6; ++j)
                    m(i, j) = Fp(trial % 3 == 0 && i == 3 ? m(0, j).value() * 2 : BigInt(c(rng)), p);
            FpMatrix g(4, 4, Fp(0L, p));
            for (std::size_t i = 0; i < 4; ++i)
                g(i, i) = Fp(1L, p);
            FpMatrix r = m;
            auto piv = rref_in_place(r, &g);
            FpMatrix prod(4, 6, Fp(0L, p));
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 6; ++j)
                    for (std::size_t k = 0; k < 4; ++k)
                        prod(i, j) += g(i, k) * m(k, j);
            CHECK(prod == r);
            for (std::size_t k = 0; k < piv.size(); ++k)
                CHECK(r(k, piv[k]).value() == 1);
        }
    }

    TEST_CASE("column Hermite form")
    {
        ZMatrix m = ZMatrix::from_rows({{2, 0, 0}, {0, 2, 0}, {1, 1, -1}});
        HermiteForm hf = hnf(m);
        CHECK(is_upper_triangular_nonsingular(hf.H));
        CHECK(matmul(m, hf.U) == hf.H);
        CHECK(abs_value(det_bareiss(hf.U)) == 1);
        for (std::size_t i = 0; i < 3; ++i)
            CHECK(hf.H(i, i) > 0);
        CHECK_THROWS_AS(hnf(ZMatrix::from_rows({{1, 2}, {2, 4}})), std::domain_error);
    }

    TEST_CASE("index of sublattices")
    {
        ZMatrix b = ZMatrix::from_rows({{2, 0, 0}, {0, 2, 1}, {0, 0, -1}});
        ZMatrix d2 = ZMatrix::from_rows({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
        CHECK(index_z(b, d2) == 2);
        CHECK_THROWS_AS(index_z(d2, b), std::domain_error);
    }

    TEST_CASE("first_failure picks the smallest failing index for every thread count")
    {
        auto check = [](std::size_t i) {
            return (i % 97 == 13 || i == 500) ? Verdict::reject("i=" + std::to_string(i)) : Verdict::accept();
        };
        for (unsigned t : {1u, 2u, 3u, 8u, 32u}) {
            Verdict v = first_failure(1000, t, check);
            CHECK_FALSE(v.accepted);
            CHECK(v.reason == "i=13");
            CHECK(first_failure(13, t, check).accepted);
        }
        CHECK(Verdict::reject("x").under("a/b").reason == "a/b/x");
    }

    TEST_CASE("primality proofs")
    {
        CHECK(verify_primality(make_primality_proof(999983)).accepted);
        PrimalityProof big = make_primality_proof(BigInt("618970019642690137449562111"));
        REQUIRE(big.pratt);
        CHECK(verify_primality(big).accepted);
        CHECK_FALSE(verify_primality({1000003, nullptr}).accepted);
        CHECK_FALSE(verify_primality({1000001, nullptr}).accepted);
        CHECK_FALSE(verify_primality({91, nullptr}).accepted);
        CHECK_FALSE(verify_primality({1, nullptr}).accepted);
        CHECK_THROWS(make_primality_proof(91));

        PrattCertificate bad = *big.pratt;
        bad.witness = 1;
        CHECK_FALSE(verify_pratt(bad).accepted);
        bad = *big.pratt;
        bad.factors.pop_back();
        CHECK_FALSE(verify_pratt(bad).accepted);
    }

    TEST_CASE("integer factorization multiplies back")
    {
        for (const char* s : {"16200", "988200000", "283516983", "1000000007", "600851475143"}) {
            BigInt n(s), prod = 1;
            for (const auto& [q, e] : factor_integer(n)) {
                CHECK(is_probable_prime(q));
                prod *= pow(q, e);
            }
            CHECK(prod == n);
        }
    }
}
