#include "rainbow/gadget.hpp"

#include <random>
#include <set>

#include "doctest.h"

using namespace rainbow;

namespace {

std::set<int> as_set(const ColorSet& cs) {
    auto v = cs.values();
    return {v.begin(), v.end()};
}

// Independent recomputation of what propagate must return.
std::set<int> ref_propagate(const Walk& w, int target, const ConstraintStore& st) {
    std::set<int> uni;
    for (int i = 0; i < w.length(); ++i) {
        if (i == target) continue;
        for (int c : st.allowed(w.edge(i)).values()) uni.insert(c);
    }
    std::set<int> out;
    for (int c : st.allowed(w.edge(target)).values())
        if (uni.count(c)) out.insert(c);
    return out;
}

}  // namespace

TEST_CASE("propagate intersects the target with the union of the others") {
    ConstraintStore st(AmbientRing{12});
    Walk w = Walk::from_steps(12, 0, {1, 1, 5, 5});  // edges (0,1),(1,2),(2,7),(7,0)
    REQUIRE(st.install(w.edge(2), ColorSet::of(12, {3, 5, 6})));
    // Edge 3 currently full; others: color 0, color 1, {3,5,6}.
    Refinement r = propagate(w, 3, st);
    CHECK_FALSE(r.contradiction);
    CHECK(as_set(r.set) == std::set<int>{0, 1, 3, 5, 6});
    CHECK(as_set(r.set) == ref_propagate(w, 3, st));

    // A cycle through every n-gon must repeat a color somewhere, so when the
    // non-target edges cannot collide among themselves the target must absorb
    // the repeat: empty intersection is a contradiction.
    REQUIRE(st.install(w.edge(3), ColorSet::of(12, {9, 10})));
    Refinement r2 = propagate(w, 3, st);
    CHECK(r2.contradiction);
}

TEST_CASE("propagate requires pairwise-disjoint non-target sets") {
    ConstraintStore st(AmbientRing{12});
    Walk w = Walk::from_steps(12, 0, {2, 2, 8});
    REQUIRE(st.install(w.edge(0), ColorSet::of(12, {4, 5})));
    REQUIRE(st.install(w.edge(1), ColorSet::of(12, {5, 6})));
    CHECK_THROWS_AS(propagate(w, 2, st), PropagationPrecondition);
}

TEST_CASE("propagate agrees with the reference on random instances") {
    std::mt19937 rng(2024);
    for (int iter = 0; iter < 200; ++iter) {
        int m = 8 + static_cast<int>(rng() % 13);  // 8..20
        // Build a small closed walk: a, b, and the closing complement.
        int a = 2 + static_cast<int>(rng() % (m / 2 - 1));
        int b = 2 + static_cast<int>(rng() % (m / 2 - 1));
        if ((a + b) % m == 0 || a + b >= m) continue;
        Walk w = Walk::from_steps(m, 0, {a, b, m - a - b});
        ConstraintStore st(AmbientRing{m});
        // Give two edges disjoint random sets, leave one full.
        int w0 = 1 + static_cast<int>(rng() % 3), w1 = 1 + static_cast<int>(rng() % 3);
        int s0 = static_cast<int>(rng() % m);
        ColorSet c0 = ColorSet::arc(m, s0, w0);
        ColorSet c1 = ColorSet::arc(m, s0 + w0, w1);  // disjoint by construction
        if (!st.install(w.edge(0), c0)) continue;
        if (!st.install(w.edge(1), c1)) continue;
        Refinement r = propagate(w, 2, st);
        std::set<int> want = ref_propagate(w, 2, st);
        if (r.contradiction)
            CHECK(want.empty());
        else
            CHECK(as_set(r.set) == want);
    }
}

TEST_CASE("deduced_union skips the target edge") {
    ConstraintStore st(AmbientRing{10});
    Walk w = Walk::from_steps(10, 0, {3, 3, 4});
    REQUIRE(st.install(w.edge(0), ColorSet::of(10, {1})));
    REQUIRE(st.install(w.edge(1), ColorSet::of(10, {7})));
    CHECK(as_set(deduced_union(w, 2, st)) == std::set<int>{1, 7});
}

TEST_CASE("disjoint_pair_deduction splits the outside union") {
    // Two cycles sharing their color budget: each target set narrows to its
    // own allowed colors plus whatever the other target could still absorb.
    ConstraintStore st(AmbientRing{14});
    Walk w = Walk::from_steps(14, 0, {4, 4, 6});
    REQUIRE(st.install(w.edge(0), ColorSet::of(14, {1, 2})));       // A1
    REQUIRE(st.install(w.edge(1), ColorSet::of(14, {5, 6})));       // A2
    REQUIRE(st.install(w.edge(2), ColorSet::of(14, {2, 5, 9})));    // outside U
    Disjunction d = disjoint_pair_deduction(w, 0, 1, st);
    // B1 = A1 ∩ (U ∪ A2) = {2}; B2 = A2 ∩ (U ∪ A1) = {5}.
    CHECK(as_set(d.first) == std::set<int>{2});
    CHECK(as_set(d.second) == std::set<int>{5});
}

TEST_CASE("forced_rainbow reports a colliding pair or certifies disjointness") {
    ConstraintStore st(AmbientRing{12});
    Walk w = Walk::from_steps(12, 0, {3, 3, 3, 3});
    REQUIRE(st.install(w.edge(0), ColorSet::of(12, {0, 1})));
    REQUIRE(st.install(w.edge(1), ColorSet::of(12, {2, 3})));
    REQUIRE(st.install(w.edge(2), ColorSet::of(12, {4, 5})));
    REQUIRE(st.install(w.edge(3), ColorSet::of(12, {6, 7})));
    RainbowCheck ok = forced_rainbow(w, st);
    CHECK(ok.forced);

    ConstraintStore st2(AmbientRing{12});
    REQUIRE(st2.install(w.edge(0), ColorSet::of(12, {0, 1})));
    REQUIRE(st2.install(w.edge(1), ColorSet::of(12, {4, 8})));
    REQUIRE(st2.install(w.edge(2), ColorSet::of(12, {4, 5})));
    REQUIRE(st2.install(w.edge(3), ColorSet::of(12, {6, 7})));
    RainbowCheck bad = forced_rainbow(w, st2);
    CHECK_FALSE(bad.forced);
    CHECK(bad.witness_i == 1);
    CHECK(bad.witness_j == 2);
}

TEST_CASE("even-ring chains derive the published chord families") {
    for (int n : {12, 14, 16, 20, 34, 46, 60}) {
        CAPTURE(n);
        ChainResult cr = lemma_even_chain(n);
        const int M = 3 * n - 8;
        REQUIRE(cr.families.size() == 3);
        CHECK(cr.families[0].shape == FamilyShape{n - 1, 0, 2});
        CHECK(cr.families[1].shape == FamilyShape{n - 5, n - 5, 2});
        CHECK(cr.families[2].shape == FamilyShape{7, 0, 2});
        for (const ChordFamily& f : cr.families) {
            REQUIRE(static_cast<int>(f.by_base.size()) == M);
            for (int i = 0; i < M; ++i)
                CHECK(f.by_base[i] ==
                      ColorSet::arc(M, (i + f.shape.offset) % M, f.shape.width));
        }
        // The merged store holds every family that fits it.
        for (int i = 0; i < M; ++i)
            CHECK(cr.store.allowed(make_edge(M, i, (i + n - 1) % M)) ==
                  ColorSet::arc(M, i, 2));
        if (n == 12)
            CHECK_FALSE(cr.notes.empty());
        else
            CHECK(cr.notes.empty());
    }
    CHECK_THROWS_AS(lemma_even_chain(10), std::invalid_argument);
    CHECK_THROWS_AS(lemma_even_chain(13), std::invalid_argument);
}

TEST_CASE("div4-ring chains derive the published chord families") {
    for (int n : {12, 16, 20, 24, 36, 100}) {
        CAPTURE(n);
        ChainResult cr = lemma_div4_chain(n);
        const int M = 3 * n - 10;
        if (n >= 20) {
            REQUIRE(cr.families.size() == 3);
            CHECK(cr.families[2].shape == FamilyShape{13, 0, 3});
        } else {
            REQUIRE(cr.families.size() == 2);
        }
        CHECK(cr.families[0].shape == FamilyShape{n - 1, 0, 3});
        CHECK(cr.families[1].shape == FamilyShape{n - 7, n - 7, 3});
        for (const ChordFamily& f : cr.families) {
            REQUIRE(static_cast<int>(f.by_base.size()) == M);
            for (int i = 0; i < M; ++i)
                CHECK(f.by_base[i] ==
                      ColorSet::arc(M, (i + f.shape.offset) % M, f.shape.width));
        }
        for (int i = 0; i < M; ++i)
            CHECK(cr.store.allowed(make_edge(M, i, (i + n - 1) % M)) ==
                  ColorSet::arc(M, i, 3));
        if (n == 20)
            CHECK_FALSE(cr.notes.empty());
        else
            CHECK(cr.notes.empty());
    }
    CHECK_THROWS_AS(lemma_div4_chain(14), std::invalid_argument);
    CHECK_THROWS_AS(lemma_div4_chain(8), std::invalid_argument);
}
