#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

namespace rainbow {

// period() of the trivial monoid {0}.
struct UndefinedPeriodError : std::domain_error {
    using std::domain_error::domain_error;
};

// Requested progression step is not a multiple of the period.
struct NoSuchProgressionError : std::domain_error {
    using std::domain_error::domain_error;
};

struct NotCoprimeError : std::domain_error {
    using std::domain_error::domain_error;
};

// Finitely generated additive subsemigroup of the nonnegative integers.
// An empty generator list is allowed only together with includes_zero and
// denotes the trivial monoid {0}.
class NumericalSemigroup {
public:
    NumericalSemigroup(std::vector<long long> generators, bool includes_zero);

    const std::vector<long long>& generators() const { return gens_; }
    bool includes_zero() const { return zero_; }

    // Membership bitmap for [0, bound]: bits[x] iff x is a finite sum of
    // generators (the empty sum counted iff includes_zero).
    std::vector<char> member_bits(long long bound) const;
    // The members themselves, sorted.
    std::vector<long long> members_up_to(long long bound) const;

    // gcd of the generators; equals the gcd of all pairwise differences of
    // members (each generator g is itself the difference 2g - g).
    long long period() const;

    long long min_generator() const;

private:
    std::vector<long long> gens_;
    bool zero_;
};

// Least N >= 1 with {N + k*p : k >= 0} contained in the semigroup.
// Requires p >= 1 and p a multiple of period(). The scan is certified
// complete: once N, N+p, ..., N+(K-1)p are members for K = a/gcd(a,p) with
// a the least generator, every further K*p increment is a multiple of a.
long long progression_conductor(const NumericalSemigroup& a, long long p);

// Largest integer not representable as a nonnegative combination of n and m
// (n, m >= 2, coprime), found by a membership scan, not by formula.
long long frobenius_pair(long long n, long long m);

// For coprime n, m >= 2 and p >= 1: the semigroup generated by {pn, pm} has
// period dividing p and contains {N + kp} for some N <= p(n-1)(m-1).
// Returns (p, p(n-1)(m-1)) after verifying the bound against the actual
// conductor.
std::pair<long long, long long> scaled_progression(long long p, long long n, long long m);

// For m > n >= 1: n^2 starts an arithmetic progression of step m-n inside
// the semigroup generated by {n, m}; returns n^2 after certifying this.
long long prop_progression_start(long long n, long long m);

}  // namespace rainbow
