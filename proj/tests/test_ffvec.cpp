#include <doctest.h>

#include <random>

#include "apcqc/ffvec.hpp"

using apcqc::dot;
using apcqc::FpVector;
using apcqc::wh;
using apcqc::ws;

namespace {

FpVector vec(int p, std::vector<int> c) { return FpVector(p, std::move(c)); }

}  // namespace

TEST_CASE("symmetrical weight counts the union of supports") {
    CHECK(ws(vec(2, {0, 0, 0}), vec(2, {0, 0, 0})) == 0);
    CHECK(ws(vec(2, {1, 0, 1}), vec(2, {0, 1, 0})) == 3);
    CHECK(ws(vec(3, {1, 0}), vec(3, {2, 0})) == 1);
}

TEST_CASE("hamming distance counts differing positions") {
    CHECK(wh(vec(2, {1, 0, 1}), vec(2, {1, 0, 1})) == 0);
    CHECK(wh(vec(2, {1, 0, 1}), vec(2, {0, 1, 1})) == 2);
    CHECK(wh(vec(3, {0, 0}), vec(3, {1, 2})) == 2);
}

TEST_CASE("dot products reduce mod p") {
    CHECK(dot(vec(5, {0, 0, 0}), vec(5, {3, 1, 4})) == 0);
    CHECK(dot(vec(3, {1, 2}), vec(3, {2, 2})) == 0);
    CHECK(dot(vec(2, {1, 1}), vec(2, {1, 1})) == 0);
}

TEST_CASE("construction validates the modulus and coordinates") {
    CHECK_THROWS_AS(vec(4, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(vec(9, {0}), std::invalid_argument);
    CHECK_THROWS_AS(vec(3, {0, 3}), std::invalid_argument);
    CHECK_THROWS_AS(vec(3, {-1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(vec(3, {}), std::invalid_argument);
}

TEST_CASE("operations reject mismatched spaces") {
    CHECK_THROWS_AS(ws(vec(2, {0, 1}), vec(2, {0, 1, 1})), apcqc::DimensionError);
    CHECK_THROWS_AS(wh(vec(2, {0, 1}), vec(3, {0, 1})), apcqc::DimensionError);
    CHECK_THROWS_AS(dot(vec(5, {1}), vec(7, {1})), apcqc::DimensionError);
    CHECK_THROWS_AS(vec(2, {0, 1}) + vec(2, {0, 1, 0}), apcqc::DimensionError);
}

TEST_CASE("serialized form round-trips") {
    FpVector v = vec(3, {1, 0, 2});
    CHECK(v.str() == "1,0,2");
    CHECK(FpVector::parse(3, "1,0,2") == v);
    CHECK_THROWS_AS(FpVector::parse(3, "1,,2"), std::invalid_argument);
    CHECK_THROWS_AS(FpVector::parse(3, "1,x"), std::invalid_argument);
    CHECK_THROWS_AS(FpVector::parse(3, ""), std::invalid_argument);
}

TEST_CASE("weight function identities on random vectors") {
    std::mt19937 rng(2024);
    for (int p : {2, 3, 5}) {
        std::uniform_int_distribution<int> coord(0, p - 1);
        for (int round = 0; round < 200; ++round) {
            int n = 1 + static_cast<int>(rng() % 6);
            auto draw = [&] {
                std::vector<int> c(static_cast<std::size_t>(n));
                for (int& x : c) x = coord(rng);
                return FpVector(p, std::move(c));
            };
            FpVector a = draw(), b = draw(), c = draw();
            FpVector zero = FpVector::zero(p, n);

            CHECK(ws(a, b) == ws(b, a));
            CHECK(wh(a, b) == wh(b, a));
            CHECK(ws(a, b) >= std::max(ws(a, zero), ws(b, zero)));
            CHECK(ws(a, b) <= ws(a, zero) + ws(b, zero));
            CHECK(wh(a, b) <= wh(a, c) + wh(c, b));
            CHECK(wh(a, b) == ws(a - b, zero));
        }
    }
}

TEST_CASE("arithmetic is coordinate-wise mod p") {
    FpVector a = vec(3, {1, 2, 0});
    FpVector b = vec(3, {2, 2, 1});
    CHECK(a + b == vec(3, {0, 1, 1}));
    CHECK(a - b == vec(3, {2, 0, 2}));
    CHECK(-b == vec(3, {1, 1, 2}));
    CHECK(a.scaled(2) == vec(3, {2, 1, 0}));
    CHECK(a.scaled(-1) == -a);
    CHECK((a + (-a)).is_zero());
}

TEST_CASE("unit and zero constructors") {
    CHECK(FpVector::zero(5, 3) == vec(5, {0, 0, 0}));
    CHECK(FpVector::unit(5, 3, 1, 4) == vec(5, {0, 4, 0}));
    CHECK(FpVector::unit(2, 2, 0) == vec(2, {1, 0}));
    CHECK_THROWS_AS(FpVector::unit(2, 2, 2), std::invalid_argument);
}
