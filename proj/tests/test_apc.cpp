#include <doctest.h>

#include <random>

#include "apcqc/apc.hpp"
#include "apcqc/cyclotomic.hpp"
#include "support/oracles.hpp"

using apcqc::apc_distance;
using apcqc::ApcResult;
using apcqc::char_sum;
using apcqc::CycInt;
using apcqc::FpFunction;
using apcqc::FpVector;
using apcqc::parse_poly;
namespace oracle = apcqc::testing;

namespace {

const char* kPentagon = "x1*x2+x2*x3+x3*x4+x4*x5+x5*x1";

}  // namespace

TEST_CASE("character sum fixed points") {
    std::mt19937 rng(31);
    for (int p : {2, 3}) {
        for (int n = 1; n <= 3; ++n) {
            FpFunction f = oracle::random_function(rng, p, n);
            FpVector zero = FpVector::zero(p, n);
            auto pn = CycInt::integer(p, static_cast<long long>(f.size()));

            // (a, b) = (0, 0): the exponent is identically zero.
            CHECK(char_sum(f, zero, zero) == pn);

            FpFunction c = FpFunction::constant(p, n, static_cast<int>(rng() % p));
            FpVector a = oracle::random_vector(rng, p, n);
            CHECK(char_sum(c, a, zero) == pn);

            // b != 0 on a constant function: full additive character sum.
            FpVector b = FpVector::unit(p, n, static_cast<int>(rng() % n), 1);
            CHECK(char_sum(c, zero, b).is_zero());
            CHECK(char_sum(c, a, b).is_zero());
        }
    }
}

TEST_CASE("character sums match the term-by-term oracle") {
    std::mt19937 rng(37);
    for (int p : {2, 3, 5}) {
        for (int round = 0; round < 25; ++round) {
            int n = 1 + static_cast<int>(rng() % 3);
            FpFunction f = oracle::random_function(rng, p, n);
            FpVector a = oracle::random_vector(rng, p, n);
            FpVector b = oracle::random_vector(rng, p, n);
            CHECK(char_sum(f, a, b) == oracle::oracle_char_sum(f, a, b));
        }
    }
}

TEST_CASE("p=2 sums are plain signed counts within [-2^n, 2^n]") {
    std::mt19937 rng(41);
    for (int round = 0; round < 40; ++round) {
        int n = 1 + static_cast<int>(rng() % 4);
        FpFunction f = oracle::random_function(rng, 2, n);
        FpVector a = oracle::random_vector(rng, 2, n);
        FpVector b = oracle::random_vector(rng, 2, n);
        std::int64_t s = oracle::oracle_char_sum_p2(f, a, b);
        CHECK(char_sum(f, a, b) == CycInt::integer(2, s));
        CHECK(s <= (std::int64_t{1} << n));
        CHECK(s >= -(std::int64_t{1} << n));
        CHECK((s % 2 + 2) % 2 == (std::int64_t{1} << n) % 2);
    }
}

TEST_CASE("two-variable product has APC distance 2") {
    FpFunction f = parse_poly("x1*x2", 2, 2);
    CHECK(oracle::oracle_apc(f) == 2);  // all 15 nonzero pairs
    ApcResult result = apc_distance(f);
    REQUIRE(result.attained());
    CHECK(*result.distance == 2);
    // Hand check from the derivation: ((1,0),(0,1)) attains weight 2.
    CHECK_FALSE(char_sum(f, FpVector(2, {1, 0}), FpVector(2, {0, 1})).is_zero());
}

TEST_CASE("pentagon quadratic has APC distance 3") {
    FpFunction f = parse_poly(kPentagon, 2, 5);
    CHECK(oracle::oracle_apc(f) == 3);
    ApcResult result = apc_distance(f);
    REQUIRE(result.attained());
    CHECK(*result.distance == 3);
}

TEST_CASE("constant functions have APC distance 1 with the canonical witness") {
    for (int p : {2, 3}) {
        for (int n = 2; n <= 4; ++n) {
            ApcResult result = apc_distance(FpFunction::constant(p, n, 1));
            REQUIRE(result.attained());
            CHECK(*result.distance == 1);
            CHECK(result.witness->a == FpVector::unit(p, n, 0, 1));
            CHECK(result.witness->b == FpVector::zero(p, n));
        }
    }
}

TEST_CASE("search agrees with the full-space oracle on random functions") {
    std::mt19937 rng(43);
    auto run = [&](int p, int n, int rounds) {
        for (int round = 0; round < rounds; ++round) {
            FpFunction f = oracle::random_function(rng, p, n);
            ApcResult result = apc_distance(f);
            auto expected = oracle::oracle_apc(f);
            REQUIRE(result.attained() == expected.has_value());
            if (expected) {
                CHECK(*result.distance == *expected);
                // The witness is a genuine minimum-weight hit.
                CHECK(apcqc::ws(result.witness->a, result.witness->b) == *expected);
                CHECK_FALSE(char_sum(f, result.witness->a, result.witness->b).is_zero());
            }
        }
    };
    run(2, 2, 10);
    run(2, 3, 10);
    run(3, 2, 10);
}

TEST_CASE("APC distance is invariant under affine shifts") {
    std::mt19937 rng(47);
    for (int p : {2, 3}) {
        for (int round = 0; round < 15; ++round) {
            int n = 2 + static_cast<int>(rng() % 2);
            FpFunction f = oracle::random_function(rng, p, n);
            FpVector c = oracle::random_vector(rng, p, n);
            int e = static_cast<int>(rng() % p);
            // g = f + c.x + e via the table shift plus a constant bump
            FpFunction g = f.add_linear(c);
            std::vector<int> table = g.table();
            for (int& v : table) v = (v + e) % p;
            FpFunction h(p, n, std::move(table));

            ApcResult rf = apc_distance(f);
            ApcResult rh = apc_distance(h);
            CHECK(rf.distance == rh.distance);
        }
    }
}

TEST_CASE("results are identical across worker counts") {
    FpFunction f = parse_poly(kPentagon, 2, 5);
    ApcResult one = apc_distance(f, 1);
    for (int threads : {2, 3, 8}) {
        ApcResult many = apc_distance(f, threads);
        CHECK(one.distance == many.distance);
        CHECK(one.witness->a == many.witness->a);
        CHECK(one.witness->b == many.witness->b);
    }
}

TEST_CASE("character sum rejects mismatched dimensions") {
    FpFunction f = parse_poly("x1*x2", 2, 2);
    CHECK_THROWS_AS(char_sum(f, FpVector::zero(2, 3), FpVector::zero(2, 3)),
                    apcqc::DimensionError);
    CHECK_THROWS_AS(char_sum(f, FpVector::zero(3, 2), FpVector::zero(3, 2)),
                    apcqc::DimensionError);
}
