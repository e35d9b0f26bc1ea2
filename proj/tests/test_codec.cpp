#include <doctest.h>

#include <random>
#include <set>

#include "apcqc/apc.hpp"
#include "apcqc/codec.hpp"
#include "apcqc/report.hpp"
#include "support/oracles.hpp"

using apcqc::build_betas_large_p;
using apcqc::build_betas_small_p;
using apcqc::check_wh_constraint;
using apcqc::code_distance;
using apcqc::FpFunction;
using apcqc::FpVector;
using apcqc::KBoundVersion;
using apcqc::max_K;
using apcqc::mds_condition;
using apcqc::mds_saturates;
using apcqc::singleton_bound_K;
namespace oracle = apcqc::testing;

namespace {

std::vector<FpVector> family(int p, std::initializer_list<std::vector<int>> lists) {
    std::vector<FpVector> out;
    for (const auto& c : lists) out.emplace_back(p, c);
    return out;
}

}  // namespace

TEST_CASE("code distance of a singleton family equals d_prime") {
    CHECK(code_distance(family(2, {{0, 0, 0}}), 3, 2, 3) == 3);
    CHECK(code_distance(family(3, {{0, 0, 0, 0}}), 3, 3, 4) == 3);
    // Also for a nonzero singleton: with i == j the condition collapses to
    // ws(u, v) >= d_prime regardless of the beta.
    CHECK(code_distance(family(2, {{1, 1, 0}}), 2, 2, 3) == 2);
}

TEST_CASE("code distance of the two-element binary family") {
    auto betas = family(2, {{0, 0, 0}, {1, 0, 0}});
    CHECK(oracle::oracle_code_distance(betas, 3, 2, 3) == 2);  // all 64 pairs
    CHECK(code_distance(betas, 3, 2, 3) == 2);
}

TEST_CASE("a pair at Hamming distance >= d_prime pulls the distance to 0") {
    // (u, v) = (0, 0) satisfies ws(0, beta_2 - beta_1) >= d_prime.
    auto betas = family(2, {{0, 0, 0, 0}, {1, 1, 0, 0}});
    CHECK(code_distance(betas, 2, 2, 4) == 0);
    CHECK(oracle::oracle_code_distance(betas, 2, 2, 4) == 0);
}

TEST_CASE("code distance matches the full-space oracle on random families") {
    std::mt19937 rng(53);
    for (int p : {2, 3}) {
        for (int round = 0; round < 30; ++round) {
            int n = 2 + static_cast<int>(rng() % 2);
            int d_prime = 2 + static_cast<int>(rng() % (n - 1));
            int K = 1 + static_cast<int>(rng() % 3);
            auto betas = oracle::random_family(rng, p, n, K);
            CHECK(code_distance(betas, d_prime, p, n) ==
                  oracle::oracle_code_distance(betas, d_prime, p, n));
        }
    }
}

TEST_CASE("code distance input validation") {
    CHECK_THROWS_AS(code_distance({}, 3, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(code_distance(family(2, {{0, 0}, {0, 0}}), 2, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(code_distance(family(2, {{0, 0}}), 1, 2, 2), std::domain_error);
    CHECK_THROWS_AS(code_distance(family(2, {{0, 0}}), 3, 2, 2), std::domain_error);
    CHECK_THROWS_AS(code_distance(family(3, {{0, 0}}), 2, 2, 2), apcqc::DimensionError);
}

TEST_CASE("prefix family: first k coordinates run over F_p^k") {
    auto b310 = build_betas_large_p(3, 1, 3);
    CHECK(b310 == family(3, {{0, 0, 0}, {1, 0, 0}, {2, 0, 0}}));

    CHECK(build_betas_large_p(2, 0, 2) == family(2, {{0, 0}}));

    auto bc = build_betas_large_p(4, 2, 5);
    CHECK(bc.size() == 25);
    CHECK(check_wh_constraint(bc, 2));
}

TEST_CASE("sparse-tail family matches its size formula") {
    auto b422 = build_betas_small_p(4, 2, 2);
    CHECK(b422 == family(2, {{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0},
                             {0, 0, 0, 1}}));
    CHECK(build_betas_small_p(5, 3, 2).size() == 10);  // 2 * (1 + 4*1)
    CHECK(check_wh_constraint(build_betas_small_p(5, 3, 2), 3));
    CHECK_THROWS_AS(build_betas_small_p(4, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(build_betas_small_p(4, 2, 5), std::invalid_argument);
}

TEST_CASE("family sizes, distinctness and Hamming spread across the parameter grid") {
    for (int p : {2, 3, 5, 7}) {
        for (int n = 1; n <= 8; ++n) {
            for (int k = 0; k <= std::min(n, 4); ++k) {
                auto large = build_betas_large_p(n, k, p);
                long long expected = 1;
                for (int i = 0; i < k; ++i) expected *= p;
                CHECK(static_cast<long long>(large.size()) == expected);
                CHECK(check_wh_constraint(large, k));
                std::set<std::vector<int>> dedup;
                for (const auto& b : large) dedup.insert(b.coords());
                CHECK(dedup.size() == large.size());

                if (k >= 2 && p < n - k + 1) {
                    auto small = build_betas_small_p(n, k, p);
                    long long prefix = 1;
                    for (int i = 0; i < k - 2; ++i) prefix *= p;
                    CHECK(static_cast<long long>(small.size()) ==
                          prefix * (1 + static_cast<long long>(n - k + 2) * (p - 1)));
                    CHECK(check_wh_constraint(small, k));
                    dedup.clear();
                    for (const auto& b : small) dedup.insert(b.coords());
                    CHECK(dedup.size() == small.size());
                    // Never more than the derived bound.
                    CHECK(static_cast<long long>(small.size()) <= max_K(n, p, k + 2, k));
                }
                CHECK(static_cast<long long>(large.size()) <= max_K(n, p, k + 2, k));
            }
        }
    }
}

TEST_CASE("Hamming-spread predicate") {
    CHECK(check_wh_constraint(family(5, {{0, 3}}), 0));
    CHECK_FALSE(check_wh_constraint(family(2, {{0, 0}, {1, 1}}), 1));
    CHECK(check_wh_constraint(family(2, {{0, 0}, {1, 1}}), 2));
}

TEST_CASE("family size bound") {
    CHECK(max_K(5, 3, 4, 0) == 1);
    CHECK(max_K(5, 3, 3, 1) == 3);
    CHECK(max_K(4, 2, 4, 2) == 5);  // max{1 + 4*1, 4}
    CHECK(max_K(3, 5, 4, 2) == 25);  // max{1 + 3*4, 25}
    CHECK_THROWS_AS(max_K(5, 2, 3, 2), std::domain_error);
    CHECK_THROWS_AS(max_K(5, 2, 4, 3), std::domain_error);
    CHECK_THROWS_AS(max_K(5, 2, 3, -1), std::invalid_argument);

    // The headline form replaces n-k+2 by n; they agree at k = 2 and the
    // headline one is never smaller.
    CHECK(max_K(6, 2, 5, 3, KBoundVersion::kDerived) == 12);
    CHECK(max_K(6, 2, 5, 3, KBoundVersion::kHeadline) == 14);
    for (int n = 2; n <= 7; ++n) {
        for (int k = 2; k <= n; ++k) {
            CHECK(max_K(n, 3, k + 2, k, KBoundVersion::kDerived) <=
                  max_K(n, 3, k + 2, k, KBoundVersion::kHeadline));
            CHECK(max_K(n, 3, 4, 2, KBoundVersion::kDerived) ==
                  max_K(n, 3, 4, 2, KBoundVersion::kHeadline));
        }
    }
}

TEST_CASE("Singleton bound and saturation") {
    CHECK(singleton_bound_K(5, 3, 2) == 2);
    CHECK(singleton_bound_K(5, 2, 3) == 27);
    CHECK(singleton_bound_K(4, 3, 2) == 1);
    CHECK_THROWS_AS(singleton_bound_K(3, 3, 2), std::domain_error);
    CHECK_THROWS_AS(singleton_bound_K(3, 4, 2), std::invalid_argument);

    CHECK(mds_saturates(4, 1, 3, 2));
    CHECK_FALSE(mds_saturates(5, 1, 3, 2));
    CHECK(mds_saturates(6, 4, 3, 2));
    CHECK(mds_saturates(6, 9, 3, 3));
    CHECK(mds_saturates(6, 25, 3, 5));
}

TEST_CASE("Singleton-saturation condition by case") {
    auto c1 = mds_condition(4, 2, 3, 0);
    CHECK(c1.case_id == 1);
    CHECK(c1.holds);
    CHECK_FALSE(c1.beyond_k_bound_range);

    auto c1odd = mds_condition(5, 2, 3, 0);
    CHECK(c1odd.case_id == 1);
    CHECK_FALSE(c1odd.holds);

    // n(p-1)+1 = p^{n-2d'+4}: n=4, p=5, d'=3 gives 17 != 25.
    auto c2 = mds_condition(4, 5, 3, 1);
    CHECK(c2.case_id == 2);
    CHECK_FALSE(c2.holds);
    // n=8, p=3, d'=5: 8*2+1 = 17 != 3^2; n=4, p=3, d'=3: 9 = 3^2 holds.
    CHECK(mds_condition(4, 3, 3, 1).holds);

    auto c3 = mds_condition(5, 7, 3, 2);
    CHECK(c3.case_id == 3);
    CHECK_FALSE(c3.holds);  // 2d' = 6 != n+k+2 = 9
    CHECK(mds_condition(6, 7, 5, 2).case_id == 3);
    CHECK(mds_condition(6, 7, 5, 2).holds);  // 10 = 6+2+2

    // Family size 1 + (6)(2) = 13 but the bound is 3^{6-6+2} = 9.
    auto c4 = mds_condition(6, 3, 5, 2);
    CHECK(c4.case_id == 4);
    CHECK_FALSE(c4.holds);
    CHECK_FALSE(c4.beyond_k_bound_range);
    // A point where the case-4 equality genuinely holds: 1 + 7*1 = 8 = 2^3.
    auto c4eq = mds_condition(7, 2, 5, 2);
    CHECK(c4eq.case_id == 4);
    CHECK(c4eq.holds);

    CHECK_THROWS_AS(mds_condition(4, 2, 5, 0), std::domain_error);   // hypothesis fails
    CHECK_THROWS_AS(mds_condition(6, 2, 3, 4), std::domain_error);   // k > d'
    CHECK(mds_condition(6, 2, 3, 3).beyond_k_bound_range);           // k = d'
    CHECK(mds_condition(8, 2, 4, 3).beyond_k_bound_range);           // k = d' - 1
    CHECK_FALSE(mds_condition(8, 2, 5, 3).beyond_k_bound_range);     // k = d' - 2
}

TEST_CASE("distance properties over random families") {
    std::mt19937 rng(59);
    int checked = 0;
    while (checked < 60) {
        int p = rng() % 2 == 0 ? 2 : 3;
        int n = 2 + static_cast<int>(rng() % 2);
        FpFunction f = oracle::random_function(rng, p, n);
        auto apc = apcqc::apc_distance(f);
        if (!apc.attained() || *apc.distance < 2) continue;
        int d_prime = *apc.distance;

        int K = 1 + static_cast<int>(rng() % 4);
        auto betas = oracle::random_family(rng, p, n, K);
        int d = code_distance(betas, d_prime, p, n);

        // d never exceeds d_prime.
        CHECK(d <= d_prime);
        // Families with any nonzero member stay strictly below d_prime
        // (random K = 1 families are always {0} here).
        bool any_nonzero = false;
        for (const auto& b : betas) any_nonzero = any_nonzero || !b.is_zero();
        if (any_nonzero) CHECK(d < d_prime);
        // When d = d_prime - k with 0 < k <= d_prime - 2, the family is
        // k-spread in Hamming distance.
        int k = d_prime - d;
        if (k > 0 && k <= d_prime - 2) CHECK(check_wh_constraint(betas, k));
        ++checked;
    }
}

TEST_CASE("constructed families achieve d = d_prime - k on quadratics") {
    struct Probe {
        const char* poly;
        int p, n, d_prime;
    };
    // APC distances verified against the full-space oracle in test_apc.
    const Probe probes[] = {
        {"x1*x2+x2*x3+x3*x4+x4*x5+x5*x1", 2, 5, 3},
        {"x1*x2", 2, 2, 2},
        {"x1*x2+x2*x3", 2, 3, 2},
    };
    int equal = 0, total = 0;
    for (const auto& probe : probes) {
        FpFunction f = apcqc::parse_poly(probe.poly, probe.p, probe.n);
        auto apc = apcqc::apc_distance(f);
        REQUIRE(apc.attained());
        REQUIRE(*apc.distance == probe.d_prime);
        for (int k = 0; k <= probe.d_prime - 2; ++k) {
            std::string branch;
            std::vector<FpVector> betas;
            if (k <= 1 || probe.p >= probe.n - k + 1) {
                betas = build_betas_large_p(probe.n, k, probe.p);
            } else {
                betas = build_betas_small_p(probe.n, k, probe.p);
            }
            int d = code_distance(betas, probe.d_prime, probe.p, probe.n);
            ++total;
            if (d == probe.d_prime - k) {
                ++equal;
            } else {
                MESSAGE("construction gap: ", probe.poly, " k=", k, " gave d=", d,
                        " instead of ", probe.d_prime - k);
            }
            CHECK(d <= probe.d_prime);
        }
    }
    CHECK(equal == total);
}

TEST_CASE("code spec JSON round-trips and validates") {
    FpFunction f = apcqc::parse_poly("x1*x2", 2, 2);
    apcqc::CodeSpec code{f, family(2, {{0, 0}, {1, 0}}), 2, 1};
    auto j = apcqc::codespec_json(code);
    apcqc::CodeSpec back = apcqc::codespec_from_json(j);
    CHECK(back.f == code.f);
    CHECK(back.betas == code.betas);
    CHECK(back.d_prime == code.d_prime);
    CHECK(back.d_claimed == code.d_claimed);

    auto dup = j;
    dup["betas"] = nlohmann::json::array({{0, 0}, {0, 0}});
    CHECK_THROWS_AS(apcqc::codespec_from_json(dup), std::invalid_argument);

    apcqc::CodeSpec weak{FpFunction::constant(2, 2, 0), family(2, {{0, 0}}), 1, 4};
    auto warnings = weak.warnings();
    REQUIRE(warnings.size() == 2);  // d' < 2 and claim above d'
}
