#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rainbow/gadget.hpp"

namespace rainbow {

enum class CaseKind { even, div4 };

// A construction's required inequality failed; the message names it.
struct InequalityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A construction-internal position/congruence assertion broke.
struct ConstructionError : std::logic_error {
    using std::logic_error::logic_error;
};

struct CompactParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct StepMultiset {
    std::map<int, int> counts;  // signed step length -> count (positive = forward)
    int total() const;
    long long weighted_sum() const;
    bool operator==(const StepMultiset&) const = default;
};

// {n-1: 2, 7: n/2-2, 1: n/2} over M = 3n-8; total weight 2M.
StepMultiset even_multiset(int n);
// {4k-1: 8, 13: k-2, 1: 3k-6} over M = 12k-10; total weight 4M.
StepMultiset div4_multiset(int k);

struct Div4Inequalities {
    int k, n, M, r, d1, d2;
    bool x1, x2, x3, x4;
    bool all_hold() const { return x1 && x2 && x3 && x4; }
    std::vector<std::pair<std::string, bool>> report() const;
};
// r = ceil((4k-5)/13), d1 = 13r-n+8, d2 = (n+8) mod 13, and the four gates
// x1: 3r <= k-2;  x2: 13+3*d2 <= 3k-6;  x3: 13+3(d1+d2) <= 4k-4;
// x4: (n-1)+13r+2(d1+d2)+3 <= 3(d1+d2)+13+2(n-1).
Div4Inequalities check_inequalities_div4(int k);

// Allowed color span per step length, relative to the base vertex of a
// forward step; length-1 edges carry their fixed perimeter color.
struct VerificationFamily {
    CaseKind kind;
    int n = 0;
    int M = 0;
    std::string name;
    std::map<int, FamilyShape> spans;
    bool knows(int len) const { return spans.count(len) != 0; }
    ColorSet allowed(int base, int len) const;
};
// lengths {1, 7, n-1} with widths {1, 2, 2} over M = 3n-8.
VerificationFamily even_family(int n);
// lengths {1, 13, n-1} with widths {1, 3, 3} over M = 3n-10.
VerificationFamily div4_family(int n);

struct ConstructionTrace {
    CaseKind kind;
    int n = 0, k = 0, M = 0;
    int d = -1, z = -1, y = -1, u = -1;  // even case
    int r = -1, d1 = -1, d2 = -1;        // div4 case
    std::vector<int> round_positions;
    std::vector<std::pair<std::string, bool>> inequality_report;
};

// Deterministic witness constructions. Both verify their own output before
// returning (construction is never trusted).
std::pair<ConstructionTrace, Walk> construct_even(int n);
std::pair<ConstructionTrace, Walk> construct_div4(int k);

struct CycleCertificate {
    int M = 0, n = 0;
    std::vector<int> steps;
    std::string constraint_family;
    bool multiset_ok = false;
    bool closed_ok = false;
    bool distinct_ok = false;
    bool forced_rainbow_ok = false;
    int witness_i = -1, witness_j = -1;  // intersecting edge pair, if any
    std::string detail;                  // first failure explanation
    bool valid() const {
        return multiset_ok && closed_ok && distinct_ok && forced_rainbow_ok;
    }
};

// Full audit of a candidate cycle: exact multiset consumption, closure,
// vertex distinctness, and pairwise-disjoint allowed color sets.
CycleCertificate verify_cycle(int M, const std::vector<int>& steps, int n,
                              const VerificationFamily& family);

struct SearchOutcome {
    enum class Status { found, none, budget_exhausted };
    Status status;
    std::optional<Walk> walk;
    long long nodes = 0;
};

// Depth-first search from vertex 0 over forward steps drawn from ms, pruning
// on revisited vertices and on color-span overlap with edges already placed.
// Children are tried in `ordering` (which must list exactly the multiset's
// lengths). node_budget <= 0 means unlimited; a `none` with unlimited budget
// is exhaustive and proves nonexistence within this step family.
SearchOutcome backtrack_search(int M, const StepMultiset& ms,
                               const VerificationFamily& family,
                               const std::vector<int>& ordering, bool exhaustive,
                               long long node_budget,
                               const std::function<void(long long)>& progress = {});

// Expands "v0 ->a v1 ->^t b v2 ..." notation (UTF-8 arrow accepted) into the
// step list, validating every stated vertex against the running position.
std::vector<int> parse_compact(const std::string& notation, int M);

}  // namespace rainbow
