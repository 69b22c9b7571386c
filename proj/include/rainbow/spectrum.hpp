#pragma once

#include <string>
#include <vector>

namespace rainbow {

// The monoid operation on cycle lengths: gluing an a-cycle and a b-cycle
// along an edge yields an (a+b-2)-cycle. Identity element 2.
long long monoid_op(long long a, long long b);

// p(n): the progression step the main bounds guarantee for seed n.
int period_class(long long n);

struct MainBound {
    int p;
    long long n_bound;
};
// (p(n), N(n)): odd n -> (1, 2n^2-13n+23); n = 4k+2 -> (4, (9/4)n^2-18n+37);
// n = 4k -> (2, (9/2)n^2-39n+86). The rational forms are exact integers on
// their residue classes; this is asserted.
MainBound main_theorem_bound(long long n);

// Closure rules. "op" combines two members a, b into a+b-2. The reduction
// rules add: 3a-8 for even a >= 4; 3a-10 for a divisible by 4, a != 16;
// for odd a: 3a-6, a(a-1)/2 and every m >= 2a^2-13a+23; and three imported
// table facts 8=>16, 10=>22, 12=>26 (tagged "external" in traces).
constexpr unsigned kRuleOp = 1u;
constexpr unsigned kRuleEven = 2u;
constexpr unsigned kRuleMod4 = 4u;
constexpr unsigned kRuleOdd = 8u;
constexpr unsigned kRuleExternal = 16u;
constexpr unsigned kRuleAll = 31u;

struct TraceEntry {
    long long member;
    std::string rule;  // seed | op | even-reduction | mod4-reduction |
                       // odd-triple | odd-triangle | odd-tail | external
    std::vector<long long> premises;
};

struct SpecFacts {
    long long seed_n;
    std::vector<long long> derived;  // sorted, all >= 2
    std::vector<TraceEntry> trace;   // derivation order; first justification only
};

// Traced closure of {2, n} under the selected rules, truncated at limit.
// Deterministic: members are derived smallest-first; each member keeps the
// first justification under the rule order op < even-reduction <
// mod4-reduction < odd rules < external, smallest premises first.
SpecFacts implied_members(long long n, long long limit, unsigned rules = kRuleAll);

// Untraced closure as a membership bitmap over [0, limit]; same set as
// implied_members but scales to large limits.
std::vector<char> implied_member_bits(long long n, long long limit,
                                      unsigned rules = kRuleAll);

struct ProgressionCheck {
    bool ok;
    long long counterexample;  // least missing member, or -1 when ok
};
// Does the closure of {2, n} contain every N + k*p up to limit?
ProgressionCheck verify_progression(long long n, long long p, long long big_n,
                                    long long limit);

}  // namespace rainbow
