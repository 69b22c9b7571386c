#include "rainbow/semigroup.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace rainbow {

namespace {

constexpr long long kMaxWindow = 500'000'000;  // DP bitmap size guard

void check_window(long long bound, const char* who) {
    if (bound > kMaxWindow)
        throw std::length_error(std::string(who) + ": membership window " +
                                std::to_string(bound) + " exceeds supported size");
}

}  // namespace

NumericalSemigroup::NumericalSemigroup(std::vector<long long> generators,
                                       bool includes_zero)
    : gens_(std::move(generators)), zero_(includes_zero) {
    for (long long g : gens_)
        if (g < 1)
            throw std::invalid_argument("NumericalSemigroup: generators must be >= 1");
    std::sort(gens_.begin(), gens_.end());
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
    if (gens_.empty() && !zero_)
        throw std::invalid_argument(
            "NumericalSemigroup: no generators and no zero leaves an empty set");
}

std::vector<char> NumericalSemigroup::member_bits(long long bound) const {
    if (bound < 0) throw std::invalid_argument("member_bits: bound must be >= 0");
    check_window(bound, "member_bits");
    std::vector<char> bits(static_cast<size_t>(bound) + 1, 0);
    bits[0] = 1;  // empty sum, masked out below when this is not a monoid
    for (long long g : gens_) {
        if (g > bound) break;
        for (long long x = g; x <= bound; ++x)
            if (bits[static_cast<size_t>(x - g)]) bits[static_cast<size_t>(x)] = 1;
    }
    bits[0] = zero_ ? 1 : 0;
    return bits;
}

std::vector<long long> NumericalSemigroup::members_up_to(long long bound) const {
    std::vector<char> bits = member_bits(bound);
    std::vector<long long> out;
    for (long long x = 0; x <= bound; ++x)
        if (bits[static_cast<size_t>(x)]) out.push_back(x);
    return out;
}

long long NumericalSemigroup::period() const {
    if (gens_.empty())
        throw UndefinedPeriodError("period: undefined for the trivial monoid {0}");
    long long g = 0;
    for (long long x : gens_) g = std::gcd(g, x);
    return g;
}

long long NumericalSemigroup::min_generator() const {
    if (gens_.empty())
        throw std::domain_error("min_generator: the trivial monoid has none");
    return gens_.front();
}

long long progression_conductor(const NumericalSemigroup& a, long long p) {
    if (p < 1) throw std::invalid_argument("progression_conductor: p must be >= 1");
    long long per = a.period();
    if (p % per != 0)
        throw NoSuchProgressionError(
            "progression_conductor: step " + std::to_string(p) +
            " is not a multiple of the period " + std::to_string(per));
    const long long a0 = a.min_generator();
    // After K = a0/gcd(a0,p) consecutive progression members, each further
    // K*p jump is a multiple of a0, so membership of k = 0..K-1 certifies
    // the whole tail.
    const long long K = a0 / std::gcd(a0, p);
    long long window = a0 * a0 + p * a0;
    if (window < 1 + (K - 1) * p) window = 1 + (K - 1) * p;
    for (int rounds = 0; rounds < 48; ++rounds) {
        check_window(window, "progression_conductor");
        std::vector<char> bits = a.member_bits(window);
        for (long long n = 1; n + (K - 1) * p <= window; ++n) {
            bool all = true;
            for (long long k = 0; k < K && all; ++k)
                all = bits[static_cast<size_t>(n + k * p)] != 0;
            if (all) return n;
        }
        window *= 2;
    }
    throw std::length_error("progression_conductor: no start found within window");
}

long long frobenius_pair(long long n, long long m) {
    if (n < 2 || m < 2) throw std::invalid_argument("frobenius_pair: need n, m >= 2");
    if (std::gcd(n, m) != 1)
        throw NotCoprimeError("frobenius_pair: gcd(" + std::to_string(n) + ", " +
                              std::to_string(m) + ") != 1");
    const long long bound = (n - 1) * (m - 1);
    check_window(bound, "frobenius_pair");
    NumericalSemigroup s({n, m}, true);
    std::vector<char> bits = s.member_bits(bound);
    for (long long x = bound; x >= 1; --x) {
        if (!bits[static_cast<size_t>(x)]) {
            if (x + 1 > bound)
                throw std::logic_error("frobenius_pair: largest gap exceeds (n-1)(m-1)");
            return x;
        }
    }
    throw std::logic_error("frobenius_pair: no gap found below (n-1)(m-1)");
}

std::pair<long long, long long> scaled_progression(long long p, long long n, long long m) {
    if (p < 1) throw std::invalid_argument("scaled_progression: p must be >= 1");
    if (n < 2 || m < 2) throw std::invalid_argument("scaled_progression: need n, m >= 2");
    if (std::gcd(n, m) != 1)
        throw NotCoprimeError("scaled_progression: gcd(" + std::to_string(n) + ", " +
                              std::to_string(m) + ") != 1");
    const long long bound = p * (n - 1) * (m - 1);
    NumericalSemigroup s({p * n, p * m}, true);
    if (s.period() != p)
        throw std::logic_error("scaled_progression: period of {pn, pm} is not p");
    long long conductor = progression_conductor(s, p);
    if (conductor > bound)
        throw std::logic_error("scaled_progression: conductor " +
                               std::to_string(conductor) + " exceeds the bound " +
                               std::to_string(bound));
    return {p, bound};
}

long long prop_progression_start(long long n, long long m) {
    if (n < 1 || m <= n)
        throw std::invalid_argument("prop_progression_start: need m > n >= 1");
    const long long step = m - n;
    const long long K = n / std::gcd(n, step);
    const long long window = n * n + (K - 1) * step;
    check_window(window, "prop_progression_start");
    NumericalSemigroup s({n, m}, false);
    std::vector<char> bits = s.member_bits(window);
    for (long long k = 0; k < K; ++k)
        if (!bits[static_cast<size_t>(n * n + k * step)])
            throw std::logic_error("prop_progression_start: " +
                                   std::to_string(n * n + k * step) +
                                   " is not a member");
    return n * n;
}

}  // namespace rainbow
