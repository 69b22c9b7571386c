#include "rainbow/gadget.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace rainbow {

namespace {

int norm_mod(long long x, int m) {
    long long r = x % m;
    if (r < 0) r += m;
    return static_cast<int>(r);
}

std::vector<int> steps_concat(std::initializer_list<std::pair<int, int>> runs) {
    std::vector<int> s;
    for (auto [step, count] : runs) s.insert(s.end(), count, step);
    return s;
}

ColorSet arcs(int modulus, std::initializer_list<std::pair<int, int>> parts) {
    ColorSet s = ColorSet::empty(modulus);
    for (auto [start, width] : parts)
        s = s.unite(ColorSet::arc(modulus, norm_mod(start, modulus), width));
    return s;
}

void expect_set(const std::string& where, int base, const ColorSet& got,
                const ColorSet& want) {
    if (!(got == want))
        throw ScriptError(where + " at base " + std::to_string(base) + ": got " +
                          got.str() + ", want " + want.str());
}

void require(bool ok, const std::string& msg) {
    if (!ok) throw ScriptError(msg);
}

std::string family_name(const FamilyShape& f) {
    auto tag = [](int d) { return d == 0 ? std::string("i") : "i+" + std::to_string(d); };
    return "length-" + std::to_string(f.len) + " chords -> {" + tag(f.offset) +
           (f.width == 2 ? ", " : ", ..., ") + tag(f.offset + f.width - 1) + "}";
}

// Union of the allowed sets of all edges except the listed ones, with the
// pairwise-disjointness precondition enforced.
ColorSet union_excluding(const Walk& walk, const ConstraintStore& store,
                         int skip1, int skip2, const char* who) {
    ColorSet u = ColorSet::empty(walk.modulus());
    for (int j = 0; j < walk.length(); ++j) {
        if (j == skip1 || j == skip2) continue;
        ColorSet s = store.allowed(walk.edge(j));
        if (!u.disjoint_with(s)) {
            for (int k = 0; k < j; ++k) {
                if (k == skip1 || k == skip2) continue;
                if (!store.allowed(walk.edge(k)).disjoint_with(s))
                    throw PropagationPrecondition(
                        std::string(who) + ": edges " + std::to_string(k) + " and " +
                        std::to_string(j) + " share allowed colors");
            }
        }
        u = u.unite(s);
    }
    return u;
}

// Install a whole family into a store; returns true if every base narrowed
// without emptying out.
bool install_family(ConstraintStore& store, const ChordFamily& f) {
    bool ok = true;
    for (int i = 0; i < store.ring().modulus; ++i)
        if (!store.install(RingEdge{i, f.shape.len}, f.by_base[i])) ok = false;
    return ok;
}

// Merge families into a fresh store, shortest chord length first, so that
// when two families land on chords of the same length with incompatible
// sets, the shorter-length derivation wins and the clash is reported.
void reconcile(ChainResult& out) {
    std::vector<int> order(out.families.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (out.families[a].shape.len != out.families[b].shape.len)
            return out.families[a].shape.len < out.families[b].shape.len;
        return a > b;
    });
    for (int idx : order) {
        const ChordFamily& f = out.families[idx];
        if (!install_family(out.store, f))
            out.notes.push_back("family '" + f.name +
                                "' assigns sets disjoint from ones already merged for "
                                "the same chords; the already-merged sets are kept");
    }
}

}  // namespace

ColorSet deduced_union(const Walk& walk, int target, const ConstraintStore& store) {
    if (target < 0 || target >= walk.length())
        throw std::out_of_range("deduced_union: target edge out of range");
    return union_excluding(walk, store, target, target, "deduced_union");
}

Refinement propagate(const Walk& walk, int target, const ConstraintStore& store) {
    ColorSet u = deduced_union(walk, target, store);
    ColorSet refined = store.allowed(walk.edge(target)).intersect(u);
    return Refinement{refined, refined.is_empty()};
}

Disjunction disjoint_pair_deduction(const Walk& walk, int t1, int t2,
                                    const ConstraintStore& store) {
    if (t1 == t2) throw std::invalid_argument("disjoint_pair_deduction: t1 == t2");
    if (t1 < 0 || t1 >= walk.length() || t2 < 0 || t2 >= walk.length())
        throw std::out_of_range("disjoint_pair_deduction: target edge out of range");
    ColorSet u = union_excluding(walk, store, t1, t2, "disjoint_pair_deduction");
    ColorSet a1 = store.allowed(walk.edge(t1));
    ColorSet a2 = store.allowed(walk.edge(t2));
    return Disjunction{a1.intersect(u.unite(a2)), a2.intersect(u.unite(a1))};
}

RainbowCheck forced_rainbow(const Walk& walk, const ConstraintStore& store) {
    std::vector<ColorSet> sets;
    sets.reserve(walk.length());
    for (int j = 0; j < walk.length(); ++j) sets.push_back(store.allowed(walk.edge(j)));
    for (int i = 0; i < walk.length(); ++i)
        for (int j = i + 1; j < walk.length(); ++j)
            if (!sets[i].disjoint_with(sets[j])) return RainbowCheck{false, i, j};
    return RainbowCheck{true, -1, -1};
}

ChainResult lemma_even_chain(int n) {
    if (n < 12 || n % 2 != 0)
        throw std::invalid_argument("lemma_even_chain: requires even n >= 12");
    const int M = 3 * n - 8;
    ConstraintStore work{AmbientRing{M}};

    // Chords of length n-1: the n-gon on consecutive vertices confines each
    // to the n-1 colors under it.
    for (int i = 0; i < M; ++i) {
        Walk w = Walk::from_steps(M, i, steps_concat({{1, n - 1}, {M - (n - 1), 1}}));
        Refinement r = propagate(w, n - 1, work);
        expect_set("n-gon base range", i, r.set, ColorSet::arc(M, i, n - 1));
        require(work.install(w.edge(n - 1), r.set), "n-gon base range: install failed");
    }

    // Cycle with two length-(n-1) chords n-3 apart: base r, across to r+n-1,
    // n-4 steps forward, across again, and two steps back home.
    auto cycle_a = [&](int r) {
        return Walk::from_steps(M, r,
                                steps_concat({{n - 1, 1}, {1, n - 4}, {n - 1, 1}, {-1, 2}}));
    };

    // The two chords of cycle_a(0) straddle the reflection v -> 2-v, so
    // committing to the first branch loses no generality.
    {
        Walk a0 = cycle_a(0);
        RingEdge t1 = a0.edge(0), t2 = a0.edge(n - 3);
        Disjunction d = disjoint_pair_deduction(a0, 0, n - 3, work);
        ColorSet want = ColorSet::arc(M, 0, 2);
        expect_set("two-chord split, first branch", 0, d.first, want);
        expect_set("two-chord split, second branch", 0, d.second, want);
        require(apply_symmetry(work, 2, true) == work,
                "two-chord split: store is not reflection-invariant");
        require(map_edge(M, t2, 2, true) == t1,
                "two-chord split: reflection does not swap the two chords");
        require(map_colors(d.second, 2, true) == d.first,
                "two-chord split: reflection does not carry branch 2 to branch 1");
        require(work.install(t1, d.first), "two-chord split: install failed");
    }

    // gcd(M, n-3) = 1, so stepping the cycle by n-3 pins every base in turn,
    // each time reusing the chord pinned one step earlier.
    std::vector<ColorSet> fam0(M, ColorSet::empty(M));
    fam0[0] = ColorSet::arc(M, 0, 2);
    {
        int r = 0;
        for (int k = 1; k < M; ++k) {
            r = norm_mod(r + (n - 3), M);
            Walk a = cycle_a(r);
            Refinement ref = propagate(a, 0, work);
            expect_set("length n-1 chain", r, ref.set, ColorSet::arc(M, r, 2));
            require(!ref.contradiction && work.install(a.edge(0), ref.set),
                    "length n-1 chain: install failed");
            fam0[r] = ref.set;
        }
    }

    // Chords of length n-5: three cycles through the same chord, each mixing
    // perimeter runs with already-pinned length-(n-1) chords; intersecting
    // the three deductions leaves exactly two colors.
    std::vector<ColorSet> fam1(M, ColorSet::empty(M));
    for (int i = 0; i < M; ++i) {
        Walk a = Walk::from_steps(M, i, steps_concat({{n - 5, 1}, {n - 1, 1}, {1, n - 2}}));
        ColorSet sa = deduced_union(a, 0, work);
        expect_set("length n-5, cycle A", i, sa,
                   arcs(M, {{i + n - 5, 2}, {i + 2 * n - 6, n - 2}}));
        Walk b = Walk::from_steps(M, i, steps_concat({{n - 5, 1}, {1, n - 2}, {n - 1, 1}}));
        ColorSet sb = deduced_union(b, 0, work);
        expect_set("length n-5, cycle B", i, sb,
                   ColorSet::arc(M, norm_mod(i + n - 5, M), n));
        Walk c = Walk::from_steps(M, i,
                                  steps_concat({{n - 5, 1}, {1, 1}, {n - 1, 1}, {1, n - 3}}));
        ColorSet sc = deduced_union(c, 0, work);
        expect_set("length n-5, cycle C", i, sc,
                   arcs(M, {{i + n - 5, 3}, {i + 2 * n - 5, n - 3}}));
        ColorSet t = sa.intersect(sb).intersect(sc);
        expect_set("length n-5, combined", i, t,
                   ColorSet::arc(M, norm_mod(i + n - 5, M), 2));
        fam1[i] = t;
        require(work.install(RingEdge{i, n - 5}, t), "length n-5: install failed");
    }

    // Chords of length 7: three cycles built from length-(n-5) hops and
    // backward perimeter runs.
    std::vector<ColorSet> fam2(M, ColorSet::empty(M));
    for (int i = 0; i < M; ++i) {
        Walk a = Walk::from_steps(
            M, i, steps_concat({{7, 1}, {n - 5, 1}, {-1, n - 7}, {n - 5, 2}, {-1, 2}, {n - 5, 1}}));
        ColorSet sa = deduced_union(a, 0, work);
        expect_set("length 7, cycle A", i, sa,
                   arcs(M, {{i, 2}, {i + 9, n - 3}, {i + 2 * n - 3, 4}}));
        Walk b = Walk::from_steps(
            M, i, steps_concat({{7, 1}, {n - 5, 2}, {-1, n - 10}, {n - 5, 2}, {-1, 5}}));
        ColorSet sb = deduced_union(b, 0, work);
        expect_set("length 7, cycle B", i, sb,
                   arcs(M, {{i, 7}, {i + n + 2, 2}, {i + n + 7, n - 8}, {i + 2 * n + 2, 2}}));
        ColorSet tab = sa.intersect(sb);
        expect_set("length 7, cycles A+B", i, tab,
                   arcs(M, {{i, 2}, {i + n + 2, 2}, {i + 2 * n - 3, 2}}));
        Walk c = Walk::from_steps(
            M, i,
            steps_concat({{7, 1}, {-1, 2}, {n - 5, 3}, {-1, n - 10}, {n - 5, 1}, {-1, 3}}));
        ColorSet sc = deduced_union(c, 0, work);
        expect_set("length 7, cycle C", i, sc,
                   arcs(M, {{i, 7}, {i + n, 2}, {i + 2 * n - 5, 2}, {i + 2 * n, n - 8}}));
        ColorSet t = tab.intersect(sc);
        expect_set("length 7, combined", i, t, ColorSet::arc(M, i, 2));
        fam2[i] = t;
    }

    ChainResult out{ConstraintStore{AmbientRing{M}}, {}, {}};
    out.families.push_back(ChordFamily{FamilyShape{n - 1, 0, 2},
                                       family_name(FamilyShape{n - 1, 0, 2}), fam0});
    out.families.push_back(ChordFamily{FamilyShape{n - 5, n - 5, 2},
                                       family_name(FamilyShape{n - 5, n - 5, 2}), fam1});
    out.families.push_back(
        ChordFamily{FamilyShape{7, 0, 2}, family_name(FamilyShape{7, 0, 2}), fam2});
    reconcile(out);
    return out;
}

ChainResult lemma_div4_chain(int n) {
    if (n < 12 || n % 4 != 0)
        throw std::invalid_argument("lemma_div4_chain: requires n divisible by 4, n >= 12");
    const int M = 3 * n - 10;
    ConstraintStore work{AmbientRing{M}};

    for (int i = 0; i < M; ++i) {
        Walk w = Walk::from_steps(M, i, steps_concat({{1, n - 1}, {M - (n - 1), 1}}));
        Refinement r = propagate(w, n - 1, work);
        expect_set("n-gon base range", i, r.set, ColorSet::arc(M, i, n - 1));
        require(work.install(w.edge(n - 1), r.set), "n-gon base range: install failed");
    }

    // Cycle with two length-(n-1) chords n-4 apart; since gcd(M, n-4) = 2 the
    // chain only reaches bases of one parity from a given start.
    auto cycle_a = [&](int r) {
        return Walk::from_steps(M, r,
                                steps_concat({{n - 1, 1}, {1, n - 5}, {n - 1, 1}, {-1, 3}}));
    };

    {
        Walk a0 = cycle_a(0);
        RingEdge t1 = a0.edge(0), t2 = a0.edge(n - 4);
        Disjunction d = disjoint_pair_deduction(a0, 0, n - 4, work);
        ColorSet want = ColorSet::arc(M, 0, 3);
        expect_set("two-chord split, first branch", 0, d.first, want);
        expect_set("two-chord split, second branch", 0, d.second, want);
        require(apply_symmetry(work, 3, true) == work,
                "two-chord split: store is not reflection-invariant");
        require(map_edge(M, t2, 3, true) == t1,
                "two-chord split: reflection does not swap the two chords");
        require(map_colors(d.second, 3, true) == d.first,
                "two-chord split: reflection does not carry branch 2 to branch 1");
        require(work.install(t1, d.first), "two-chord split: install failed");
    }

    std::vector<ColorSet> fam0(M, ColorSet::empty(M));
    fam0[0] = ColorSet::arc(M, 0, 3);
    {
        int r = 0;
        for (int k = 1; k < M / 2; ++k) {
            r = norm_mod(r + (n - 4), M);
            Walk a = cycle_a(r);
            Refinement ref = propagate(a, 0, work);
            expect_set("even-base chain", r, ref.set, ColorSet::arc(M, r, 3));
            require(!ref.contradiction && work.install(a.edge(0), ref.set),
                    "even-base chain: install failed");
            fam0[r] = ref.set;
        }
    }

    // Odd bases. Suppose the chord (1, n) avoided {1,2,3}. Then the second
    // chord of cycle_a(1) is pinned instead, the confinement walks backward
    // around the whole odd coset in "top of the span" form, and a final cycle
    // would have all n edge sets pairwise disjoint -- impossible for a ring
    // whose cycle lengths include n. Hence (1, n) meets {1,2,3} after all.
    {
        ConstraintStore branch = work;
        RingEdge c1{1, n - 1};
        ColorSet neg = ColorSet::arc(M, 4, n - 4);
        require(ColorSet::arc(M, 1, 3).unite(neg) == branch.allowed(c1),
                "odd-base split: branches do not cover the prior");
        require(branch.install(c1, neg), "odd-base split: negation install failed");

        Walk a1 = cycle_a(1);
        Disjunction d = disjoint_pair_deduction(a1, 0, n - 4, branch);
        require(d.first.is_empty(), "odd-base split: first branch should be empty");
        expect_set("odd-base split, forced branch", 1, d.second, ColorSet::arc(M, 1, 3));
        require(branch.install(a1.edge(n - 4), d.second),
                "odd-base split: forced install failed");

        int t = norm_mod(2 * n - 5, M);
        for (int k = 1; k < M / 2; ++k) {
            int rr = t;
            t = norm_mod(t - (n - 4), M);
            Walk a = cycle_a(rr);
            Refinement ref = propagate(a, n - 4, branch);
            expect_set("odd-base backward chain", t, ref.set,
                       ColorSet::arc(M, norm_mod(t + n - 4, M), 3));
            require(!ref.contradiction && branch.install(a.edge(n - 4), ref.set),
                    "odd-base backward chain: install failed");
        }

        Walk e = Walk::from_steps(
            M, 0,
            steps_concat(
                {{n - 1, 1}, {1, 1}, {n - 1, 1}, {-1, n / 2 + 2}, {n - 1, 1}, {1, n / 2 - 6}}));
        expect_set("refuting cycle, chord 1", 0, branch.allowed(RingEdge{0, n - 1}),
                   ColorSet::arc(M, 0, 3));
        expect_set("refuting cycle, chord 2", n,
                   branch.allowed(RingEdge{norm_mod(n, M), n - 1}),
                   ColorSet::arc(M, norm_mod(n, M), 3));
        expect_set("refuting cycle, chord 3", 3 * n / 2 - 3,
                   branch.allowed(RingEdge{norm_mod(3 * n / 2 - 3, M), n - 1}),
                   ColorSet::arc(M, norm_mod(5 * n / 2 - 7, M), 3));
        RainbowCheck rc = forced_rainbow(e, branch);
        require(rc.forced, "odd-base refutation: closing cycle is not forced rainbow");
    }

    require(work.install(RingEdge{1, n - 1}, ColorSet::arc(M, 1, 3)),
            "odd-base chain: install failed");
    fam0[1] = ColorSet::arc(M, 1, 3);
    {
        int r = 1;
        for (int k = 1; k < M / 2; ++k) {
            r = norm_mod(r + (n - 4), M);
            Walk a = cycle_a(r);
            Refinement ref = propagate(a, 0, work);
            expect_set("odd-base chain", r, ref.set, ColorSet::arc(M, r, 3));
            require(!ref.contradiction && work.install(a.edge(0), ref.set),
                    "odd-base chain: install failed");
            fam0[r] = ref.set;
        }
    }

    // Chords of length n-7.
    std::vector<ColorSet> fam1(M, ColorSet::empty(M));
    for (int i = 0; i < M; ++i) {
        Walk a = Walk::from_steps(M, i, steps_concat({{n - 7, 1}, {n - 1, 1}, {1, n - 2}}));
        ColorSet sa = deduced_union(a, 0, work);
        expect_set("length n-7, cycle A", i, sa,
                   arcs(M, {{i + n - 7, 3}, {i + 2 * n - 8, n - 2}}));
        Walk b = Walk::from_steps(M, i, steps_concat({{n - 7, 1}, {1, n - 2}, {n - 1, 1}}));
        ColorSet sb = deduced_union(b, 0, work);
        expect_set("length n-7, cycle B", i, sb,
                   ColorSet::arc(M, norm_mod(i + n - 7, M), n + 1));
        Walk c = Walk::from_steps(M, i,
                                  steps_concat({{n - 7, 1}, {1, 2}, {n - 1, 1}, {1, n - 4}}));
        ColorSet sc = deduced_union(c, 0, work);
        expect_set("length n-7, cycle C", i, sc,
                   arcs(M, {{i + n - 7, 5}, {i + 2 * n - 6, n - 4}}));
        ColorSet t = sa.intersect(sb).intersect(sc);
        expect_set("length n-7, combined", i, t,
                   ColorSet::arc(M, norm_mod(i + n - 7, M), 3));
        fam1[i] = t;
        require(work.install(RingEdge{i, n - 7}, t), "length n-7: install failed");
    }

    // Chords of length 13 (needs n-7 > 13, i.e. the runs below nonnegative).
    std::vector<ColorSet> fam2;
    if (n >= 20) {
        fam2.assign(M, ColorSet::empty(M));
        for (int i = 0; i < M; ++i) {
            Walk a = Walk::from_steps(
                M, i,
                steps_concat({{13, 1}, {n - 7, 1}, {-1, n - 10}, {n - 7, 2}, {-1, 5}, {n - 7, 1}}));
            ColorSet sa = deduced_union(a, 0, work);
            expect_set("length 13, cycle A", i, sa,
                       arcs(M, {{i, 3}, {i + 16, n - 4}, {i + 2 * n - 3, 8}}));
            Walk b = Walk::from_steps(
                M, i, steps_concat({{13, 1}, {n - 7, 2}, {-1, n - 13}, {n - 7, 2}, {-1, 8}}));
            ColorSet sb = deduced_union(b, 0, work);
            expect_set("length 13, cycle B", i, sb,
                       arcs(M, {{i, 11}, {i + n + 6, 3}, {i + n + 12, n - 10}, {i + 2 * n + 5, 3}}));
            ColorSet tab = sa.intersect(sb);
            expect_set("length 13, cycles A+B", i, tab,
                       arcs(M, {{i, 3}, {i + n + 6, 3}, {i + 2 * n - 3, 5}}));
            Walk c = Walk::from_steps(
                M, i,
                steps_concat({{13, 1}, {-1, 5}, {n - 7, 3}, {-1, n - 15}, {n - 7, 1}, {-1, 5}}));
            ColorSet sc = deduced_union(c, 0, work);
            expect_set("length 13, cycle C", i, sc,
                       arcs(M, {{i, 13}, {i + n + 1, 3}, {i + 2 * n - 6, 3}, {i + 2 * n + 2, n - 12}}));
            ColorSet t = tab.intersect(sc);
            expect_set("length 13, combined", i, t, ColorSet::arc(M, i, 3));
            fam2[i] = t;
        }
    }

    ChainResult out{ConstraintStore{AmbientRing{M}}, {}, {}};
    out.families.push_back(ChordFamily{FamilyShape{n - 1, 0, 3},
                                       family_name(FamilyShape{n - 1, 0, 3}), fam0});
    out.families.push_back(ChordFamily{FamilyShape{n - 7, n - 7, 3},
                                       family_name(FamilyShape{n - 7, n - 7, 3}), fam1});
    if (n >= 20)
        out.families.push_back(
            ChordFamily{FamilyShape{13, 0, 3}, family_name(FamilyShape{13, 0, 3}), fam2});
    reconcile(out);
    return out;
}

}  // namespace rainbow
