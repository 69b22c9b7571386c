#include "rainbow/search.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rainbow {

namespace {

int norm_mod(long long x, int m) {
    long long r = x % m;
    if (r < 0) r += m;
    return static_cast<int>(r);
}

std::string failed_names(const std::vector<std::pair<std::string, bool>>& report) {
    std::string bad;
    for (const auto& [name, ok] : report)
        if (!ok) bad += (bad.empty() ? "" : ", ") + name;
    return bad;
}

}  // namespace

int StepMultiset::total() const {
    int t = 0;
    for (const auto& [len, c] : counts) t += c;
    return t;
}

long long StepMultiset::weighted_sum() const {
    long long s = 0;
    for (const auto& [len, c] : counts) s += static_cast<long long>(len) * c;
    return s;
}

StepMultiset even_multiset(int n) {
    if (n < 12 || n % 2 != 0)
        throw std::invalid_argument("even_multiset: requires even n >= 12");
    StepMultiset ms;
    ms.counts[n - 1] = 2;
    ms.counts[7] = n / 2 - 2;
    ms.counts[1] = n / 2;
    if (ms.total() != n || ms.weighted_sum() != 2LL * (3 * n - 8))
        throw std::logic_error("even_multiset: weight identity failed");
    return ms;
}

StepMultiset div4_multiset(int k) {
    if (k < 3) throw std::invalid_argument("div4_multiset: requires k >= 3");
    StepMultiset ms;
    ms.counts[4 * k - 1] = 8;
    ms.counts[13] = k - 2;
    ms.counts[1] = 3 * k - 6;
    if (ms.total() != 4 * k || ms.weighted_sum() != 4LL * (12 * k - 10))
        throw std::logic_error("div4_multiset: weight identity failed");
    return ms;
}

std::vector<std::pair<std::string, bool>> Div4Inequalities::report() const {
    return {{"x1", x1}, {"x2", x2}, {"x3", x3}, {"x4", x4}};
}

Div4Inequalities check_inequalities_div4(int k) {
    if (k < 3) throw std::invalid_argument("check_inequalities_div4: requires k >= 3");
    Div4Inequalities q{};
    q.k = k;
    q.n = 4 * k;
    q.M = 12 * k - 10;
    q.r = (4 * k + 7) / 13;  // ceil((4k-5)/13)
    q.d1 = 13 * q.r - q.n + 8;
    q.d2 = (q.n + 8) % 13;
    if (q.d1 < 3 || q.d1 >= 16)
        throw std::logic_error("check_inequalities_div4: d1 out of its ceil-forced range");
    int s = q.d1 + q.d2;
    q.x1 = 3 * q.r <= k - 2;
    q.x2 = 13 + 3 * q.d2 <= 3 * k - 6;
    q.x3 = 13 + 3 * s <= 4 * k - 4;
    q.x4 = (q.n - 1) + 13 * q.r + 2 * s + 3 <= 3 * s + 13 + 2 * (q.n - 1);
    return q;
}

ColorSet VerificationFamily::allowed(int base, int len) const {
    auto it = spans.find(len);
    if (it == spans.end())
        throw std::invalid_argument("family " + name + " has no span for length " +
                                    std::to_string(len));
    return ColorSet::arc(M, norm_mod(base + it->second.offset, M), it->second.width);
}

VerificationFamily even_family(int n) {
    if (n < 12 || n % 2 != 0)
        throw std::invalid_argument("even_family: requires even n >= 12");
    VerificationFamily f;
    f.kind = CaseKind::even;
    f.n = n;
    f.M = 3 * n - 8;
    f.name = "even-chain(" + std::to_string(n) + ")";
    f.spans[1] = FamilyShape{1, 0, 1};
    f.spans[7] = FamilyShape{7, 0, 2};
    f.spans[n - 1] = FamilyShape{n - 1, 0, 2};
    return f;
}

VerificationFamily div4_family(int n) {
    if (n < 12 || n % 4 != 0)
        throw std::invalid_argument("div4_family: requires n divisible by 4, n >= 12");
    VerificationFamily f;
    f.kind = CaseKind::div4;
    f.n = n;
    f.M = 3 * n - 10;
    f.name = "div4-chain(" + std::to_string(n) + ")";
    f.spans[1] = FamilyShape{1, 0, 1};
    f.spans[13] = FamilyShape{13, 0, 3};
    f.spans[n - 1] = FamilyShape{n - 1, 0, 3};
    return f;
}

CycleCertificate verify_cycle(int M, const std::vector<int>& steps, int n,
                              const VerificationFamily& family) {
    CycleCertificate c;
    c.M = M;
    c.n = n;
    c.steps = steps;
    c.constraint_family = family.name;
    auto fail = [&](const std::string& msg) {
        if (c.detail.empty()) c.detail = msg;
    };

    StepMultiset prescribed;
    bool have_prescribed = false;
    try {
        if (family.kind == CaseKind::even) {
            prescribed = even_multiset(n);
        } else if (n % 4 == 0) {
            prescribed = div4_multiset(n / 4);
        } else {
            throw std::invalid_argument("n is not divisible by 4");
        }
        have_prescribed = true;
    } catch (const std::exception& e) {
        fail(std::string("no prescribed multiset: ") + e.what());
    }
    if (have_prescribed) {
        std::map<int, int> got;
        for (int s : steps) ++got[s];
        c.multiset_ok = got == prescribed.counts;
        if (!c.multiset_ok) fail("step multiset differs from the prescribed one");
    }

    if (!steps.empty()) {
        long long sum = 0;
        std::vector<int> verts{0};
        for (size_t i = 0; i + 1 < steps.size(); ++i) {
            sum += steps[i];
            verts.push_back(norm_mod(sum, M));
        }
        sum += steps.back();
        c.closed_ok = norm_mod(sum, M) == 0;
        std::vector<char> seen(static_cast<size_t>(M), 0);
        c.distinct_ok = true;
        for (int v : verts) {
            if (seen[static_cast<size_t>(v)]) {
                c.distinct_ok = false;
                break;
            }
            seen[static_cast<size_t>(v)] = 1;
        }
    }
    if (!c.closed_ok) fail("steps do not sum to 0 mod M");
    if (!c.distinct_ok) fail("repeated vertex");

    if (c.closed_ok && c.distinct_ok && steps.size() >= 3) {
        std::vector<ColorSet> sets;
        bool all_known = true;
        long long acc = 0;
        for (int s : steps) {
            int base = norm_mod(acc, M);
            acc += s;
            if (s < 1 || !family.knows(s)) {
                all_known = false;
                fail("no allowed span for step length " + std::to_string(s));
                break;
            }
            sets.push_back(family.allowed(base, s));
        }
        if (all_known) {
            c.forced_rainbow_ok = true;
            for (size_t i = 0; i < sets.size() && c.forced_rainbow_ok; ++i) {
                for (size_t j = i + 1; j < sets.size(); ++j) {
                    if (!sets[i].disjoint_with(sets[j])) {
                        c.forced_rainbow_ok = false;
                        c.witness_i = static_cast<int>(i);
                        c.witness_j = static_cast<int>(j);
                        fail("edges " + std::to_string(i) + " and " + std::to_string(j) +
                             " share allowed colors");
                        break;
                    }
                }
            }
        }
    }
    return c;
}

std::pair<ConstructionTrace, Walk> construct_even(int n) {
    if (n < 12 || n % 2 != 0)
        throw std::invalid_argument("construct_even: requires even n >= 12");
    const int M = 3 * n - 8;
    ConstructionTrace tr;
    tr.kind = CaseKind::even;
    tr.n = n;
    tr.M = M;
    std::vector<int> steps;
    if (n == 12) {
        // The general recipe needs n >= 14 (its z <= n-3 gate fails at 12);
        // this explicit cycle covers the base case.
        steps = {11, 1, 1, 1, 1, 1, 7, 7, 7, 11, 7, 1};
    } else {
        // One long chord, then ones until the remaining arc is 2 mod 7, then
        // sevens wrapping past 0 to vertex 5, ones up to z, the second long
        // chord to y, and sevens closing the second revolution.
        int d = (2 * n - 9) % 7;
        int t = (2 * n - 2 - d) / 7;
        int z = 5 + n / 2 - d;
        int y = z + n - 1;
        tr.d = d;
        tr.z = z;
        tr.y = y;
        bool i1 = 0 <= d && d <= 6 && 6 <= n / 2;
        bool i2 = z <= n - 3;
        bool i3 = z > d;
        tr.inequality_report = {{"Ineq1", i1}, {"Ineq2", i2}, {"Ineq3", i3}};
        if (!(i1 && i2 && i3))
            throw InequalityError("construct_even(" + std::to_string(n) + "): failed " +
                                  failed_names(tr.inequality_report));
        if (t < 1 || n / 2 - 2 - t < 0)
            throw ConstructionError("construct_even: seven-run counts out of range");
        int u = -1;
        for (int j = 0; j < t; ++j) {
            int base = n - 1 + d + 7 * j;
            if (base < y) u = base;
        }
        if (u < 0 || y - u != 2)
            throw ConstructionError(
                "construct_even: the second chord does not land two past a seven");
        tr.u = u;
        tr.round_positions = {n - 1, n - 1 + d, 5, z, y};
        steps.push_back(n - 1);
        steps.insert(steps.end(), static_cast<size_t>(d), 1);
        steps.insert(steps.end(), static_cast<size_t>(t), 7);
        steps.insert(steps.end(), static_cast<size_t>(n / 2 - d), 1);
        steps.push_back(n - 1);
        steps.insert(steps.end(), static_cast<size_t>(n / 2 - 2 - t), 7);
    }
    Walk w = Walk::from_steps(M, 0, steps);
    CycleCertificate cert = verify_cycle(M, steps, n, even_family(n));
    if (!cert.valid())
        throw ConstructionError("construct_even(" + std::to_string(n) +
                                "): output failed verification: " + cert.detail);
    return {tr, w};
}

std::pair<ConstructionTrace, Walk> construct_div4(int k) {
    Div4Inequalities q = check_inequalities_div4(k);
    ConstructionTrace tr;
    tr.kind = CaseKind::div4;
    tr.n = q.n;
    tr.k = k;
    tr.M = q.M;
    tr.r = q.r;
    tr.d1 = q.d1;
    tr.d2 = q.d2;
    tr.inequality_report = q.report();
    if (!q.all_hold())
        throw InequalityError("construct_div4(" + std::to_string(k) + "): failed " +
                              failed_names(tr.inequality_report));
    const int n = q.n, M = q.M;
    const int s = q.d1 + q.d2;
    std::vector<int> steps;
    for (int round = 0; round < 3; ++round) {
        steps.push_back(n - 1);
        steps.insert(steps.end(), static_cast<size_t>(q.r), 13);
        steps.push_back(n - 1);
        steps.insert(steps.end(), static_cast<size_t>(q.d2), 1);
    }
    steps.insert(steps.end(), 13, 1);
    steps.push_back(n - 1);
    steps.push_back(n - 1);
    steps.insert(steps.end(), static_cast<size_t>(k - 2 - 3 * q.r), 13);
    steps.insert(steps.end(), static_cast<size_t>(3 * k - 19 - 3 * q.d2), 1);

    // Each revolution overshoots the start by s = d1 + d2.
    long long pos = 0;
    size_t idx = 0;
    const int per_round = 2 + q.r + q.d2;
    for (int round = 1; round <= 3; ++round) {
        for (int j = 0; j < per_round; ++j) pos += steps[idx++];
        int landed = norm_mod(pos, M);
        int want = norm_mod(static_cast<long long>(round) * s, M);
        if (landed != want)
            throw ConstructionError("construct_div4: revolution " + std::to_string(round) +
                                    " lands on " + std::to_string(landed) + ", want " +
                                    std::to_string(want));
        tr.round_positions.push_back(landed);
    }
    // The three long-chord landing offsets step through 3, 6, 9 mod 13.
    for (int j = 1; j <= 3; ++j) {
        long long xj = (j < 3) ? (n - 1 + static_cast<long long>(j) * s)
                               : (3LL * s + 13 + (n - 1));
        if (norm_mod(xj - (n - 1), 13) != (3 * j) % 13)
            throw ConstructionError("construct_div4: chord landing " + std::to_string(j) +
                                    " breaks its 3j mod 13 congruence");
    }

    Walk w = Walk::from_steps(M, 0, steps);
    CycleCertificate cert = verify_cycle(M, steps, n, div4_family(n));
    if (!cert.valid())
        throw ConstructionError("construct_div4(" + std::to_string(k) +
                                "): output failed verification: " + cert.detail);
    return {tr, w};
}

SearchOutcome backtrack_search(int M, const StepMultiset& ms,
                               const VerificationFamily& family,
                               const std::vector<int>& ordering, bool exhaustive,
                               long long node_budget,
                               const std::function<void(long long)>& progress) {
    (void)exhaustive;  // the traversal is identical; `none` is exhaustive iff unbudgeted
    if (M < 3) throw std::invalid_argument("backtrack_search: modulus must be >= 3");
    {
        std::vector<int> a = ordering, b;
        for (const auto& [len, cnt] : ms.counts) {
            if (len < 1)
                throw std::invalid_argument("backtrack_search: forward steps only");
            if (cnt < 1) throw std::invalid_argument("backtrack_search: counts must be >= 1");
            b.push_back(len);
        }
        std::sort(a.begin(), a.end());
        if (a != b)
            throw std::invalid_argument(
                "backtrack_search: ordering must list exactly the multiset lengths");
        for (int len : ordering)
            if (!family.knows(len))
                throw std::invalid_argument("backtrack_search: family lacks a span for length " +
                                            std::to_string(len));
    }
    const int n = ms.total();
    std::vector<int> lens(ordering), remaining, offs, widths;
    for (int len : lens) {
        remaining.push_back(ms.counts.at(len));
        const FamilyShape& sh = family.spans.at(len);
        offs.push_back(sh.offset);
        widths.push_back(sh.width);
    }
    std::vector<char> visited(static_cast<size_t>(M), 0),
        occupied(static_cast<size_t>(M), 0);
    visited[0] = 1;
    std::vector<int> chosen;
    chosen.reserve(static_cast<size_t>(n));
    long long nodes = 0;
    bool budget_hit = false;
    constexpr long long kProgressMask = (1 << 20) - 1;

    std::function<bool(int, int)> dfs = [&](int v, int depth) -> bool {
        ++nodes;
        if (progress && (nodes & kProgressMask) == 0) progress(nodes);
        if (node_budget > 0 && nodes > node_budget) {
            budget_hit = true;
            return false;
        }
        if (depth == n) return v == 0;
        for (size_t idx = 0; idx < lens.size(); ++idx) {
            if (remaining[idx] == 0) continue;
            int len = lens[idx];
            int next = v + len;
            if (next >= M) next -= M;
            if (depth == n - 1) {
                if (next != 0) continue;
            } else if (visited[static_cast<size_t>(next)]) {
                continue;
            }
            int cell = v + offs[idx];
            if (cell >= M) cell -= M;
            bool free_cells = true;
            for (int j = 0, cc = cell; j < widths[idx]; ++j) {
                if (occupied[static_cast<size_t>(cc)]) {
                    free_cells = false;
                    break;
                }
                if (++cc == M) cc = 0;
            }
            if (!free_cells) continue;
            for (int j = 0, cc = cell; j < widths[idx]; ++j) {
                occupied[static_cast<size_t>(cc)] = 1;
                if (++cc == M) cc = 0;
            }
            if (depth < n - 1) visited[static_cast<size_t>(next)] = 1;
            --remaining[idx];
            chosen.push_back(len);
            if (dfs(next, depth + 1)) return true;
            chosen.pop_back();
            ++remaining[idx];
            if (depth < n - 1) visited[static_cast<size_t>(next)] = 0;
            for (int j = 0, cc = cell; j < widths[idx]; ++j) {
                occupied[static_cast<size_t>(cc)] = 0;
                if (++cc == M) cc = 0;
            }
            if (budget_hit) return false;
        }
        return false;
    };

    bool found = dfs(0, 0);
    SearchOutcome out{found ? SearchOutcome::Status::found
                            : (budget_hit ? SearchOutcome::Status::budget_exhausted
                                          : SearchOutcome::Status::none),
                      std::nullopt, nodes};
    if (found) out.walk = Walk::from_steps(M, 0, chosen);
    return out;
}

std::vector<int> parse_compact(const std::string& notation, int M) {
    if (M < 3) throw std::invalid_argument("parse_compact: modulus must be >= 3");
    std::istringstream in(notation);
    std::vector<std::string> tokens;
    std::string t;
    while (in >> t) tokens.push_back(t);
    if (tokens.size() < 2) throw CompactParseError("parse error: too few tokens");
    auto parse_int = [](const std::string& s, const char* what) -> long long {
        try {
            size_t pos = 0;
            long long v = std::stoll(s, &pos);
            if (pos != s.size()) throw std::invalid_argument("trailing characters");
            return v;
        } catch (...) {
            throw CompactParseError(std::string("parse error: expected ") + what +
                                    ", got '" + s + "'");
        }
    };
    size_t i = 0;
    long long pos = norm_mod(parse_int(tokens[i++], "a vertex"), M);
    const long long start = pos;
    std::vector<int> steps;
    while (i < tokens.size()) {
        const std::string& tok = tokens[i++];
        std::string rest;
        if (tok.rfind("\xE2\x86\x92", 0) == 0)
            rest = tok.substr(3);
        else if (tok.rfind("->", 0) == 0)
            rest = tok.substr(2);
        else
            throw CompactParseError("parse error: expected an arrow group, got '" + tok +
                                    "'");
        long long count = 1, len = 0;
        if (!rest.empty() && rest[0] == '^') {
            count = parse_int(rest.substr(1), "a repeat count");
            if (i >= tokens.size())
                throw CompactParseError("parse error: repeat count without a length");
            len = parse_int(tokens[i++], "a step length");
        } else {
            len = parse_int(rest, "a step length");
        }
        if (count < 1 || len < 1)
            throw CompactParseError("parse error: counts and lengths must be >= 1");
        for (long long j = 0; j < count; ++j) steps.push_back(static_cast<int>(len));
        pos = norm_mod(pos + count * len, M);
        if (i >= tokens.size())
            throw CompactParseError("parse error: missing the vertex after an arrow group");
        long long stated = parse_int(tokens[i++], "a vertex");
        if (norm_mod(stated, M) != pos)
            throw CompactParseError("vertex mismatch: position " + std::to_string(pos) +
                                    " but the notation states " + std::to_string(stated));
    }
    if (pos != start)
        throw CompactParseError("vertex mismatch: the cycle does not close at its start");
    if (steps.size() < 3) throw CompactParseError("parse error: fewer than 3 steps");
    return steps;
}

}  // namespace rainbow
