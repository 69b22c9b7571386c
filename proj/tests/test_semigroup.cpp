#include "rainbow/semigroup.hpp"

#include <numeric>
#include <random>

#include "doctest.h"
#include "oracles.hpp"

using namespace rainbow;

TEST_CASE("membership enumeration") {
    NumericalSemigroup s({3, 5}, false);
    CHECK(s.members_up_to(8) == std::vector<long long>{3, 5, 6, 8});
    NumericalSemigroup m({3, 5}, true);
    CHECK(m.members_up_to(8) == std::vector<long long>{0, 3, 5, 6, 8});
    NumericalSemigroup ones({1}, false);
    CHECK(ones.members_up_to(4) == std::vector<long long>{1, 2, 3, 4});
    NumericalSemigroup big({14, 38, 108}, false);
    CHECK(big.members_up_to(110) ==
          std::vector<long long>{14, 28, 38, 42, 52, 56, 66, 70, 76, 80, 84, 90, 94, 98,
                                 104, 108});
    NumericalSemigroup zero({}, true);
    CHECK(zero.members_up_to(5) == std::vector<long long>{0});
    CHECK_THROWS_AS(NumericalSemigroup({}, false), std::invalid_argument);
    CHECK_THROWS_AS(NumericalSemigroup({0, 3}, false), std::invalid_argument);
    CHECK_THROWS_AS(NumericalSemigroup({-2}, false), std::invalid_argument);
}

TEST_CASE("period is the gcd of the generators") {
    CHECK(NumericalSemigroup({14, 38, 108}, true).period() == 2);
    CHECK(NumericalSemigroup({7}, true).period() == 7);
    CHECK(NumericalSemigroup({3, 5}, false).period() == 1);
    CHECK_THROWS_AS(NumericalSemigroup({}, true).period(), UndefinedPeriodError);
}

TEST_CASE("period equals the gcd of member differences") {
    std::mt19937 rng(99);
    for (int iter = 0; iter < 100; ++iter) {
        int count = 1 + static_cast<int>(rng() % 3);
        std::vector<long long> gens;
        for (int i = 0; i < count; ++i) gens.push_back(1 + static_cast<long long>(rng() % 30));
        NumericalSemigroup s(gens, false);
        long long top = 4 * *std::max_element(gens.begin(), gens.end());
        auto members = oracle::semigroup_members(gens, false, top);
        CHECK(s.period() == oracle::period_of_members(members));
    }
}

TEST_CASE("membership matches the fixpoint oracle") {
    std::mt19937 rng(4242);
    for (int iter = 0; iter < 120; ++iter) {
        int count = 1 + static_cast<int>(rng() % 3);
        std::vector<long long> gens;
        for (int i = 0; i < count; ++i) gens.push_back(1 + static_cast<long long>(rng() % 25));
        bool zero = rng() % 2;
        long long bound = static_cast<long long>(rng() % 200);
        NumericalSemigroup s(gens, zero);
        auto got = s.members_up_to(bound);
        auto want = oracle::semigroup_members(gens, zero, bound);
        CHECK(std::vector<long long>(want.begin(), want.end()) == got);
    }
}

TEST_CASE("progression conductor on published inputs") {
    CHECK(progression_conductor(NumericalSemigroup({14, 38, 108}, true), 2) == 216);
    CHECK(progression_conductor(NumericalSemigroup({1}, false), 1) == 1);
    CHECK(progression_conductor(NumericalSemigroup({3, 5}, false), 1) == 8);
    CHECK_THROWS_AS(progression_conductor(NumericalSemigroup({4, 6}, false), 3),
                    NoSuchProgressionError);
    CHECK_THROWS_AS(progression_conductor(NumericalSemigroup({}, true), 1),
                    UndefinedPeriodError);
}

TEST_CASE("progression conductor is the minimal start") {
    std::mt19937 rng(31337);
    for (int iter = 0; iter < 60; ++iter) {
        int count = 1 + static_cast<int>(rng() % 3);
        std::vector<long long> gens;
        for (int i = 0; i < count; ++i) gens.push_back(2 + static_cast<long long>(rng() % 20));
        NumericalSemigroup s(gens, false);
        long long p = s.period() * (1 + static_cast<long long>(rng() % 3));
        long long got = progression_conductor(s, p);
        long long a0 = s.min_generator();
        long long terms = a0 / std::gcd(a0, p);
        long long window = got + (terms + 2) * p + 4 * a0;
        auto members = oracle::semigroup_members(gens, false, window);
        CHECK(oracle::progression_start(members, p, terms, window) == got);
    }
}

TEST_CASE("frobenius numbers") {
    CHECK(frobenius_pair(3, 5) == 7);
    CHECK(frobenius_pair(2, 3) == 1);
    CHECK(frobenius_pair(7, 19) == 107);
    CHECK_THROWS_AS(frobenius_pair(4, 6), NotCoprimeError);
    CHECK_THROWS_AS(frobenius_pair(1, 5), std::invalid_argument);
    for (long long n = 2; n <= 30; ++n)
        for (long long m = n + 1; m <= 30; ++m) {
            if (std::gcd(n, m) != 1) continue;
            long long f = frobenius_pair(n, m);
            CHECK(f == oracle::frobenius(n, m));
            CHECK(f + 1 <= (n - 1) * (m - 1));
        }
}

TEST_CASE("scaled progression bound") {
    auto [p, bound] = scaled_progression(2, 7, 19);
    CHECK(p == 2);
    CHECK(bound == 216);
    auto [p2, b2] = scaled_progression(4, 9, 8);
    CHECK(p2 == 4);
    CHECK(b2 == 224);
    CHECK_THROWS_AS(scaled_progression(2, 4, 6), NotCoprimeError);
}

TEST_CASE("squares start certified progressions") {
    CHECK(prop_progression_start(3, 5) == 9);
    CHECK(prop_progression_start(7, 19) == 49);
    std::mt19937 rng(55);
    for (int iter = 0; iter < 40; ++iter) {
        long long n = 2 + static_cast<long long>(rng() % 15);
        long long m = n + 1 + static_cast<long long>(rng() % 15);
        long long start = prop_progression_start(n, m);
        CHECK(start == n * n);
        long long step = m - n;
        long long terms = n / std::gcd(n, step);
        auto members =
            oracle::semigroup_members({n, m}, false, start + (terms + 1) * step);
        for (long long j = 0; j <= terms; ++j) CHECK(members.count(start + j * step) == 1);
    }
}
