#include <random>

#include "common.hpp"
#include "doctest.h"
#include "oracles.hpp"
#include "ringcert/resultants.hpp"

using namespace ringcert;

TEST_SUITE("resultants")
{
    TEST_CASE("small resultants and discriminants")
    {
        CHECK(resultant(make_zpoly({-2, 1}), make_zpoly({-5, 1})) == 3);
        CHECK(disc_poly(make_zpoly({1, 1, 1})) == 3);
        CHECK(resultant(make_zpoly({1, 1, 1}), make_zpoly({1, 2})) == 3);
        // Res(T, T') for a cubic is minus the classical -4a^3 - 27b^2.
        CHECK(disc_poly(make_zpoly({-80, -30, 0, 1})) == 4 * BigInt(-30) * -30 * -30 + 27 * 6400);
        CHECK(resultant(make_zpoly({-1, 0, 1}), make_zpoly({-1, 1})) == 0);
        CHECK(resultant(make_zpoly({7}), make_zpoly({1, 0, 1})) == 49);
    }

    TEST_CASE("swapping arguments multiplies by (-1)^{nm}")
    {
        std::mt19937_64 rng(5);
        std::uniform_int_distribution<long> c(-7, 7);
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<BigInt> a(2 + trial % 4), b(2 + trial % 3);
            for (auto& x : a)
                x = c(rng);
            for (auto& x : b)
                x = c(rng);
            a.back() = 1 + trial % 3;
            b.back() = -1 - trial % 2;
            ZPoly f(a), g(b);
            const int sign = (f.degree() * g.degree()) % 2 ? -1 : 1;
            CHECK(resultant(f, g) == sign * resultant(g, f));
            CHECK(resultant(f, g) == det_bareiss(sylvester_matrix(f, g)));
        }
    }

    TEST_CASE("integer resultants reduce to the F_p resultant")
    {
        std::mt19937_64 rng(6);
        std::uniform_int_distribution<long> c(-30, 30);
        for (long pv : {3L, 11L, 101L}) {
            const Modulus p = Modulus::of(pv);
            for (int trial = 0; trial < 40; ++trial) {
                std::vector<BigInt> a(4), b(3);
                for (auto& x : a)
                    x = c(rng);
                for (auto& x : b)
                    x = c(rng);
                a.back() = 1;
                b.back() = 1;
                ZPoly f(a), g(b);
                CHECK(Fp(resultant(f, g), p) == resultant(reduce_mod_p(f, p), reduce_mod_p(g, p)));
            }
        }
    }

    TEST_CASE("split polynomials over F_7 against the product of root differences")
    {
        const long pv = 7;
        const Modulus p = Modulus::of(pv);
        std::mt19937_64 rng(17);
        std::uniform_int_distribution<long> r(0, pv - 1), lc(1, pv - 1);
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<long> alpha(1 + trial % 4), beta(1 + trial % 3);
            for (auto& x : alpha)
                x = r(rng);
            for (auto& x : beta)
                x = r(rng);
            const long a = lc(rng), b = lc(rng);
            auto fa = oracle::from_roots(a, alpha, pv), gb = oracle::from_roots(b, beta, pv);
            FpPoly f = make_fppoly(std::vector<BigInt>(fa.begin(), fa.end()), p);
            FpPoly g = make_fppoly(std::vector<BigInt>(gb.begin(), gb.end()), p);
            CHECK(resultant(f, g).value() == oracle::resultant_from_roots(a, alpha, b, beta, pv));
        }
    }

    TEST_CASE("order discriminants")
    {
        const std::vector<std::pair<std::string, long>> expected = {
            {"cubic_x3-30x-80", -16200},
            {"cubic_x3-3x-10", -648},
            {"quadratic_x2-x+1", -3},
            {"gaussian_x2+1", -4},
            {"quartic_x4+1", 256},
        };
        for (const auto& [name, value] : expected) {
            CAPTURE(name);
            OrderDiscriminant d = disc_order(testing::build(testing::load_inputs(name)));
            CHECK(d.value == value);
            CHECK(d.poly_disc == disc_poly(testing::load_inputs(name).T));
        }
        OrderDiscriminant power = disc_order(testing::build(testing::load_inputs("cubic_x3-3x-10", "cubic_x3-3x-10_power")));
        CHECK(power.value == -2592);
        CHECK(power.index == 1);
    }
}
