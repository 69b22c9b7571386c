#include "rainbow/search.hpp"

#include <set>

#include "doctest.h"
#include "oracles.hpp"

using namespace rainbow;

namespace {

// The published 88-step cycle on Z_254 and 100-step cycle on Z_290.
const char* kCompact22 =
    "0 →87 87 →^13 1 100 →^6 13 178 →87 11 →^5 1 16 "
    "→87 103 →^7 13 194 →87 27 →^5 1 32 →87 119 "
    "→^7 13 210 →87 43 →^5 1 48 →^2 87 222 →^32 1 0";
const char* kCompact25 =
    "0 →99 99 →^13 1 112 →^7 13 203 →99 12 →^4 1 16 "
    "→99 115 →^8 13 219 →99 28 →^4 1 32 →99 131 "
    "→^8 13 235 →99 44 →^4 1 48 →^2 99 246 →^44 1 0";

// The 20-step cycle on Z_50 printed vertex by vertex.
const std::vector<int> kSteps20 = {1, 1, 1, 13, 1, 1, 19, 19, 19, 1,
                                   1, 19, 13, 13, 19, 1, 1, 19, 19, 19};

}  // namespace

TEST_CASE("step multisets and their weight identities") {
    StepMultiset e16 = even_multiset(16);
    CHECK(e16.counts == std::map<int, int>{{1, 8}, {7, 6}, {15, 2}});
    CHECK(e16.total() == 16);
    CHECK(e16.weighted_sum() == 2 * (3 * 16 - 8));
    StepMultiset d22 = div4_multiset(22);
    CHECK(d22.counts == std::map<int, int>{{1, 60}, {13, 20}, {87, 8}});
    CHECK(d22.weighted_sum() == 4 * 254);
    for (int n = 12; n <= 100; n += 2)
        CHECK(even_multiset(n).weighted_sum() == 2LL * (3 * n - 8));
    for (int k = 3; k <= 60; ++k)
        CHECK(div4_multiset(k).weighted_sum() == 4LL * (12 * k - 10));
    CHECK_THROWS_AS(even_multiset(10), std::invalid_argument);
    CHECK_THROWS_AS(div4_multiset(2), std::invalid_argument);
}

TEST_CASE("the inequality window") {
    std::set<int> hold;
    for (int k = 5; k <= 34; ++k)
        if (check_inequalities_div4(k).all_hold()) hold.insert(k);
    CHECK(hold == std::set<int>{11, 20, 23, 24, 26, 27, 29, 30, 32, 33});
    for (int k = 35; k <= 500; ++k) CHECK(check_inequalities_div4(k).x1);
    Div4Inequalities q11 = check_inequalities_div4(11);
    CHECK(q11.r == 3);
    CHECK(q11.d1 == 3);
    CHECK(q11.d2 == 0);
    CHECK(q11.all_hold());
    Div4Inequalities q22 = check_inequalities_div4(22);
    CHECK_FALSE(q22.x1);
}

TEST_CASE("verification families") {
    VerificationFamily e = even_family(16);
    CHECK(e.M == 40);
    CHECK(e.allowed(0, 15) == ColorSet::arc(40, 0, 2));
    CHECK(e.allowed(39, 7) == ColorSet::arc(40, 39, 2));
    CHECK(e.allowed(5, 1) == ColorSet::singleton(40, 5));
    CHECK_FALSE(e.knows(11));
    CHECK_THROWS_AS(e.allowed(0, 11), std::invalid_argument);
    VerificationFamily d = div4_family(20);
    CHECK(d.M == 50);
    CHECK(d.allowed(48, 13) == ColorSet::of(50, {48, 49, 0}));
    CHECK(d.allowed(10, 19) == ColorSet::arc(50, 10, 3));
}

TEST_CASE("even constructions verify for every target length") {
    for (int n = 12; n <= 60; n += 2) {
        CAPTURE(n);
        auto [tr, w] = construct_even(n);
        CHECK(w.length() == n);
        CHECK(w.modulus() == 3 * n - 8);
        CHECK(verify_cycle(w.modulus(), w.steps(), n, even_family(n)).valid());
    }
    auto [t14, w14] = construct_even(14);
    CHECK(t14.d == 5);
    auto [t16, w16] = construct_even(16);
    CHECK(t16.d == 2);
    CHECK(t16.z == 11);
    CHECK(t16.y == 26);
    CHECK(t16.u == 24);
    CHECK(t16.inequality_report ==
          std::vector<std::pair<std::string, bool>>{
              {"Ineq1", true}, {"Ineq2", true}, {"Ineq3", true}});
    auto [t12, w12] = construct_even(12);
    CHECK(w12.steps() == std::vector<int>{11, 1, 1, 1, 1, 1, 7, 7, 7, 11, 7, 1});
    CHECK(t12.inequality_report.empty());
    CHECK_THROWS_AS(construct_even(11), std::invalid_argument);
}

TEST_CASE("div4 constructions verify on the window and beyond") {
    std::set<int> window = {11, 20, 23, 24, 26, 27, 29, 30, 32, 33};
    for (int k : window) {
        CAPTURE(k);
        auto [tr, w] = construct_div4(k);
        CHECK(w.length() == 4 * k);
        CHECK(w.modulus() == 12 * k - 10);
        CHECK(verify_cycle(w.modulus(), w.steps(), 4 * k, div4_family(4 * k)).valid());
        // Each revolution overshoots by d1 + d2.
        REQUIRE(tr.round_positions.size() == 3);
        int s = tr.d1 + tr.d2;
        for (int j = 0; j < 3; ++j)
            CHECK(tr.round_positions[j] == ((j + 1) * s) % (12 * k - 10));
    }
    for (int k : {35, 41, 60, 80}) {
        CAPTURE(k);
        auto [tr, w] = construct_div4(k);
        CHECK(verify_cycle(w.modulus(), w.steps(), 4 * k, div4_family(4 * k)).valid());
    }
    CHECK_THROWS_AS(construct_div4(22), InequalityError);
    CHECK_THROWS_AS(construct_div4(6), InequalityError);
    CHECK_THROWS_AS(construct_div4(2), std::invalid_argument);
}

TEST_CASE("compact notation round trip and diagnostics") {
    CHECK(parse_compact("0 →^3 1 3 →4 7 →^3 1 0", 10) ==
          std::vector<int>{1, 1, 1, 4, 1, 1, 1});
    CHECK(parse_compact("0 ->^3 1 3 ->4 7 ->^3 1 0", 10) ==
          std::vector<int>{1, 1, 1, 4, 1, 1, 1});
    CHECK_THROWS_AS(parse_compact("0 ->^3 1 4 ->4 7 ->^3 1 0", 10), CompactParseError);
    CHECK_THROWS_AS(parse_compact("0 ->3 3 ->7", 10), CompactParseError);   // no vertex
    CHECK_THROWS_AS(parse_compact("0 =>3 3", 10), CompactParseError);       // bad arrow
    CHECK_THROWS_AS(parse_compact("0 ->^ 1 1", 10), CompactParseError);     // bad count
    CHECK_THROWS_AS(parse_compact("0 ->2 2 ->3 5", 10), CompactParseError); // open
    CHECK_THROWS_AS(parse_compact("", 10), CompactParseError);
}

TEST_CASE("published cycles all verify") {
    auto s22 = parse_compact(kCompact22, 254);
    CHECK(s22.size() == 88);
    std::map<int, int> counts;
    for (int s : s22) ++counts[s];
    CHECK(counts == std::map<int, int>{{1, 60}, {13, 20}, {87, 8}});
    CycleCertificate c22 = verify_cycle(254, s22, 88, div4_family(88));
    CHECK(c22.valid());

    auto s25 = parse_compact(kCompact25, 290);
    CHECK(s25.size() == 100);
    CycleCertificate c25 = verify_cycle(290, s25, 100, div4_family(100));
    CHECK(c25.valid());

    CycleCertificate c5 = verify_cycle(50, kSteps20, 20, div4_family(20));
    CHECK(c5.valid());
    CHECK(c5.constraint_family == "div4-chain(20)");

    CycleCertificate c12 = verify_cycle(
        28, {11, 1, 1, 1, 1, 1, 7, 7, 7, 11, 7, 1}, 12, even_family(12));
    CHECK(c12.valid());
}

TEST_CASE("perturbed cycles are rejected with the right reason") {
    auto s22 = parse_compact(kCompact22, 254);
    auto bumped = s22;
    *std::find(bumped.begin(), bumped.end(), 1) = 2;
    CycleCertificate c = verify_cycle(254, bumped, 88, div4_family(88));
    CHECK_FALSE(c.multiset_ok);
    CHECK_FALSE(c.valid());

    // Same multiset as the n=12 cycle, but rearranged to revisit vertex 27.
    CycleCertificate c2 = verify_cycle(
        28, {11, 11, 1, 1, 1, 1, 1, 7, 7, 7, 7, 1}, 12, even_family(12));
    CHECK(c2.multiset_ok);
    CHECK(c2.closed_ok);
    CHECK_FALSE(c2.distinct_ok);
    CHECK_FALSE(c2.valid());

    // Wrong length n: the prescribed multiset no longer matches.
    CycleCertificate c3 = verify_cycle(254, s22, 92, div4_family(92));
    CHECK_FALSE(c3.multiset_ok);
}

TEST_CASE("backtracking agrees with permutation enumeration on small rings") {
    // Even case n=12 on Z_28: both find a witness.
    StepMultiset ms = even_multiset(12);
    VerificationFamily fam = even_family(12);
    SearchOutcome out = backtrack_search(28, ms, fam, {1, 7, 11}, true, 0);
    auto brute = oracle::cycle_by_permutations(28, ms, fam);
    CHECK(out.status == SearchOutcome::Status::found);
    CHECK(brute.has_value());
    REQUIRE(out.walk.has_value());
    CHECK(verify_cycle(28, out.walk->steps(), 12, fam).valid());

    // Div4 case k=4 on Z_38: both prove nonexistence.
    StepMultiset ms4 = div4_multiset(4);
    VerificationFamily fam4 = div4_family(16);
    SearchOutcome none = backtrack_search(38, ms4, fam4, {1, 13, 15}, true, 0);
    CHECK(none.status == SearchOutcome::Status::none);
    CHECK_FALSE(oracle::cycle_by_permutations(38, ms4, fam4).has_value());
}

TEST_CASE("search budgets and argument validation") {
    StepMultiset ms = div4_multiset(5);
    VerificationFamily fam = div4_family(20);
    SearchOutcome tiny = backtrack_search(50, ms, fam, {1, 13, 19}, false, 25);
    CHECK(tiny.status == SearchOutcome::Status::budget_exhausted);
    CHECK(tiny.nodes > 25);

    SearchOutcome found = backtrack_search(50, ms, fam, {1, 13, 19}, false, 100000000);
    CHECK(found.status == SearchOutcome::Status::found);
    REQUIRE(found.walk.has_value());
    CHECK(verify_cycle(50, found.walk->steps(), 20, fam).valid());

    CHECK_THROWS_AS(backtrack_search(50, ms, fam, {1, 13}, false, 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(backtrack_search(50, ms, fam, {1, 13, 19, 19}, false, 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(backtrack_search(50, ms, even_family(12), {1, 13, 19}, false, 0),
                    std::invalid_argument);
}

TEST_CASE("search progress callback reports node counts") {
    long long last = 0;
    int calls = 0;
    StepMultiset ms4 = div4_multiset(4);
    backtrack_search(38, ms4, div4_family(16), {15, 13, 1}, true, 0,
                     [&](long long nodes) {
                         ++calls;
                         last = nodes;
                     });
    // The n=16 tree is tiny (~16k nodes), so no callback fires with a 2^20
    // reporting interval; a bigger tree does.
    CHECK(calls == 0);
    SearchOutcome big = backtrack_search(50, div4_multiset(5), div4_family(20),
                                         {19, 13, 1}, false, 3000000,
                                         [&](long long nodes) {
                                             ++calls;
                                             last = nodes;
                                         });
    if (big.status == SearchOutcome::Status::budget_exhausted) CHECK(big.nodes > 3000000);
    if (calls > 0) CHECK(last % (1 << 20) == 0);
}
