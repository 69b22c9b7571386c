#include "rainbow/spectrum.hpp"

#include <cmath>
#include <stdexcept>

namespace rainbow {

namespace {

constexpr long long kTracedLimit = 20'000;
constexpr long long kBitsLimit = 50'000'000;

long long integer_sqrt(long long x) {
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(x)));
    while (r > 0 && r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

void validate_seed(long long n, long long limit) {
    if (n < 2) throw std::invalid_argument("implied_members: n must be >= 2");
    if (limit < n) throw std::invalid_argument("implied_members: limit must be >= n");
}

}  // namespace

long long monoid_op(long long a, long long b) {
    if (a < 2 || b < 2) throw std::invalid_argument("monoid_op: operands must be >= 2");
    return a + b - 2;
}

int period_class(long long n) {
    if (n < 3) throw std::invalid_argument("period_class: n must be >= 3");
    if (n % 2 == 1) return 1;
    if (n % 4 == 0) return 2;
    return 4;
}

MainBound main_theorem_bound(long long n) {
    if (n < 3) throw std::invalid_argument("main_theorem_bound: n must be >= 3");
    if (n % 2 == 1) return MainBound{1, 2 * n * n - 13 * n + 23};
    if (n % 4 == 2) {
        long long num = 9 * n * n - 72 * n + 148;
        if (num % 4 != 0)
            throw std::logic_error("main_theorem_bound: non-integral bound for n = 4k+2");
        return MainBound{4, num / 4};
    }
    long long num = 9 * n * n - 78 * n + 172;
    if (num % 2 != 0)
        throw std::logic_error("main_theorem_bound: non-integral bound for n = 4k");
    return MainBound{2, num / 2};
}

SpecFacts implied_members(long long n, long long limit, unsigned rules) {
    validate_seed(n, limit);
    if (limit > kTracedLimit)
        throw std::length_error(
            "implied_members: tracing supports limit <= 20000; use implied_member_bits");
    std::vector<char> in(static_cast<size_t>(limit) + 1, 0);
    std::vector<long long> odd_members;
    SpecFacts out{n, {}, {}};
    auto add = [&](long long v, const char* rule, std::vector<long long> prem) {
        in[static_cast<size_t>(v)] = 1;
        if (v % 2 == 1) odd_members.push_back(v);
        out.derived.push_back(v);
        out.trace.push_back(TraceEntry{v, rule, std::move(prem)});
    };
    auto is_in = [&](long long v) { return in[static_cast<size_t>(v)] != 0; };

    for (long long v = 2; v <= limit; ++v) {
        if (v == 2 || v == n) {
            add(v, "seed", {});
            continue;
        }
        if (rules & kRuleOp) {
            bool found = false;
            for (long long a = 3; a <= (v + 2) / 2 && !found; ++a) {
                long long b = v + 2 - a;
                if (is_in(a) && is_in(b)) {
                    add(v, "op", {a, b});
                    found = true;
                }
            }
            if (found) continue;
        }
        if ((rules & kRuleEven) && (v + 8) % 3 == 0) {
            long long a = (v + 8) / 3;
            if (a % 2 == 0 && a >= 4 && a < v && is_in(a)) {
                add(v, "even-reduction", {a});
                continue;
            }
        }
        if ((rules & kRuleMod4) && (v + 10) % 3 == 0) {
            long long a = (v + 10) / 3;
            if (a % 4 == 0 && a != 16 && a < v && is_in(a)) {
                add(v, "mod4-reduction", {a});
                continue;
            }
        }
        if (rules & kRuleOdd) {
            if ((v + 6) % 3 == 0) {
                long long a = (v + 6) / 3;
                if (a % 2 == 1 && a < v && is_in(a)) {
                    add(v, "odd-triple", {a});
                    continue;
                }
            }
            long long a = (1 + integer_sqrt(1 + 8 * v)) / 2;
            if (a * (a - 1) / 2 == v && a % 2 == 1 && a < v && is_in(a)) {
                add(v, "odd-triangle", {a});
                continue;
            }
            bool found = false;
            for (long long oa : odd_members) {
                if (oa >= v) break;
                // the threshold is increasing for oa >= 5, so stop early
                long long threshold = 2 * oa * oa - 13 * oa + 23;
                if (threshold <= v) {
                    add(v, "odd-tail", {oa});
                    found = true;
                    break;
                }
                if (oa >= 5) break;
            }
            if (found) continue;
        }
        if (rules & kRuleExternal) {
            if (v == 16 && is_in(8)) {
                add(v, "external", {8});
                continue;
            }
            if (v == 22 && is_in(10)) {
                add(v, "external", {10});
                continue;
            }
            if (v == 26 && is_in(12)) {
                add(v, "external", {12});
                continue;
            }
        }
    }
    return out;
}

std::vector<char> implied_member_bits(long long n, long long limit, unsigned rules) {
    validate_seed(n, limit);
    if (limit > kBitsLimit)
        throw std::length_error("implied_member_bits: limit exceeds supported size");
    std::vector<char> in(static_cast<size_t>(limit) + 1, 0);
    // Closure under "op" is membership of v-2 in the numerical semigroup
    // generated by (members - 2); maintained incrementally.
    std::vector<char> semi(static_cast<size_t>(limit) - 1, 0);
    semi[0] = 1;
    long long filled_from = limit + 1;
    in[2] = 1;
    in[static_cast<size_t>(n)] = 1;
    for (long long v = 2; v <= limit; ++v) {
        if (!in[static_cast<size_t>(v)] && (rules & kRuleOp) &&
            semi[static_cast<size_t>(v - 2)])
            in[static_cast<size_t>(v)] = 1;
        if (!in[static_cast<size_t>(v)]) continue;
        if ((rules & kRuleOp) && v > 2 && !semi[static_cast<size_t>(v - 2)]) {
            long long g = v - 2;
            for (long long x = g; x <= limit - 2; ++x)
                if (semi[static_cast<size_t>(x - g)]) semi[static_cast<size_t>(x)] = 1;
        }
        if ((rules & kRuleEven) && v % 2 == 0 && v >= 4) {
            long long w = 3 * v - 8;
            if (w <= limit) in[static_cast<size_t>(w)] = 1;
        }
        if ((rules & kRuleMod4) && v % 4 == 0 && v != 16) {
            long long w = 3 * v - 10;
            if (w >= 2 && w <= limit) in[static_cast<size_t>(w)] = 1;
        }
        if ((rules & kRuleOdd) && v % 2 == 1) {
            long long w1 = 3 * v - 6;
            if (w1 >= 2 && w1 <= limit) in[static_cast<size_t>(w1)] = 1;
            long long w2 = v * (v - 1) / 2;
            if (w2 >= 2 && w2 <= limit) in[static_cast<size_t>(w2)] = 1;
            long long from = 2 * v * v - 13 * v + 23;
            if (from < 2) from = 2;
            for (long long m = from; m < filled_from && m <= limit; ++m)
                in[static_cast<size_t>(m)] = 1;
            if (from < filled_from) filled_from = from;
        }
        if (rules & kRuleExternal) {
            if (v == 8 && 16 <= limit) in[16] = 1;
            if (v == 10 && 22 <= limit) in[22] = 1;
            if (v == 12 && 26 <= limit) in[26] = 1;
        }
    }
    return in;
}

ProgressionCheck verify_progression(long long n, long long p, long long big_n,
                                    long long limit) {
    if (p < 1) throw std::invalid_argument("verify_progression: p must be >= 1");
    if (big_n < 2) throw std::invalid_argument("verify_progression: N must be >= 2");
    if (limit < big_n)
        throw std::invalid_argument("verify_progression: limit must be >= N");
    std::vector<char> bits = implied_member_bits(n, limit);
    for (long long m = big_n; m <= limit; m += p)
        if (!bits[static_cast<size_t>(m)]) return ProgressionCheck{false, m};
    return ProgressionCheck{true, -1};
}

}  // namespace rainbow
