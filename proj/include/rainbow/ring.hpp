#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace rainbow {

// Complete graph on Z_M drawn on a circle; perimeter edge (i, i+1) is
// pre-colored with color i, all other edges carry unknown colors.
struct AmbientRing {
    int modulus;
    bool operator==(const AmbientRing&) const = default;
};

// Undirected edge in canonical form: walking clockwise from `base` for `len`
// steps reaches the other endpoint, with 1 <= len <= M/2. When both arcs have
// length M/2 the smaller endpoint is the base.
struct RingEdge {
    int base = 0;
    int len = 1;
    auto operator<=>(const RingEdge&) const = default;
};

struct WalkError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

RingEdge make_edge(int modulus, int u, int v);

// Closed cycle in the ring: vertices v0..v_{L-1}, edge i joins v_i to
// v_{i+1 mod L}. Steps are signed (positive = clockwise) and sum to 0 mod M.
class Walk {
public:
    static Walk from_steps(int modulus, int start, const std::vector<int>& steps);

    int modulus() const { return modulus_; }
    int length() const { return static_cast<int>(vertices_.size()); }
    const std::vector<int>& vertices() const { return vertices_; }
    const std::vector<int>& steps() const { return steps_; }
    RingEdge edge(int i) const;
    std::vector<RingEdge> edges() const;

private:
    Walk() = default;
    int modulus_ = 1;
    std::vector<int> vertices_;
    std::vector<int> steps_;
};

}  // namespace rainbow
