#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rainbow/constraint_store.hpp"

namespace rainbow {

// A scripted derivation produced a set different from the closed form it must
// reproduce, or an internal soundness check failed.
struct ScriptError : std::logic_error {
    using std::logic_error::logic_error;
};

// Two non-target edges of a walk share an allowed color, so the "some two
// edges repeat a color" argument cannot pin the target.
struct PropagationPrecondition : std::logic_error {
    using std::logic_error::logic_error;
};

// Result of refining one edge; contradiction means the refined set is empty
// (no coloring consistent with the store keeps the walk non-rainbow).
struct Refinement {
    ColorSet set;
    bool contradiction = false;
};

// Union of the allowed sets of all edges except `target`.
// Pre: those sets are pairwise disjoint (throws PropagationPrecondition).
// If the walk's length is in the spectrum, the target's color lies in this
// union: the walk cannot be rainbow, the other edges never collide, so the
// target must repeat one of their colors.
ColorSet deduced_union(const Walk& walk, int target, const ConstraintStore& store);

// allowed(target) intersected with deduced_union; empty => contradiction.
Refinement propagate(const Walk& walk, int target, const ConstraintStore& store);

// Same inference with two open edges t1, t2 (all others pairwise disjoint):
// at least one of "color(t1) in first", "color(t2) in second" holds.
struct Disjunction {
    ColorSet first;
    ColorSet second;
};
Disjunction disjoint_pair_deduction(const Walk& walk, int t1, int t2,
                                    const ConstraintStore& store);

// forced = every pair of edge sets is disjoint, i.e. any coloring consistent
// with the store makes the walk rainbow. Otherwise a witnessing pair of edge
// indices is reported.
struct RainbowCheck {
    bool forced = false;
    int witness_i = -1;
    int witness_j = -1;
};
RainbowCheck forced_rainbow(const Walk& walk, const ConstraintStore& store);

// Closed form "chord (i, i+len) is colored within {i+offset, ...,
// i+offset+width-1}" for every base i.
struct FamilyShape {
    int len = 0;
    int offset = 0;
    int width = 0;
    bool operator==(const FamilyShape&) const = default;
};

struct ChordFamily {
    FamilyShape shape;
    std::string name;
    std::vector<ColorSet> by_base;  // derived set for each base i in [0, M)
};

struct ChainResult {
    ConstraintStore store;
    std::vector<ChordFamily> families;
    std::vector<std::string> notes;
};

// Scripted derivations for the two ambient rings. Every intermediate set is
// checked against its closed form; any mismatch throws ScriptError.
//
// Even ring M = 3n-8 (n even, n >= 12): derives width-2 families on chord
// lengths n-1, n-5 and 7.
ChainResult lemma_even_chain(int n);
// Ring M = 3n-10 (n divisible by 4, n >= 12): derives width-3 families on
// chord lengths n-1, n-7 and (for n >= 20) 13.
ChainResult lemma_div4_chain(int n);

}  // namespace rainbow
