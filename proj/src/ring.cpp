#include "rainbow/ring.hpp"

#include <algorithm>

namespace rainbow {

namespace {

int norm(int x, int m) {
    int r = x % m;
    return r < 0 ? r + m : r;
}

}  // namespace

RingEdge make_edge(int modulus, int u, int v) {
    if (modulus < 3) throw std::invalid_argument("make_edge: modulus must be >= 3");
    u = norm(u, modulus);
    v = norm(v, modulus);
    if (u == v) throw std::invalid_argument("make_edge: endpoints coincide");
    int d = norm(v - u, modulus);  // clockwise distance u -> v
    int e = modulus - d;           // clockwise distance v -> u
    if (d < e) return {u, d};
    if (e < d) return {v, e};
    return {std::min(u, v), d};  // diameter: tie broken by smaller base
}

Walk Walk::from_steps(int modulus, int start, const std::vector<int>& steps) {
    if (modulus < 3) throw WalkError("walk: modulus must be >= 3");
    if (steps.size() < 3) throw WalkError("walk: need at least 3 edges");
    Walk w;
    w.modulus_ = modulus;
    w.steps_ = steps;
    std::vector<char> seen(modulus, 0);
    int pos = norm(start, modulus);
    for (size_t i = 0; i < steps.size(); ++i) {
        if (norm(steps[i], modulus) == 0)
            throw WalkError("walk: step " + std::to_string(i) + " is 0 mod M");
        if (seen[pos])
            throw WalkError("walk: repeated vertex " + std::to_string(pos));
        seen[pos] = 1;
        w.vertices_.push_back(pos);
        pos = norm(pos + steps[i], modulus);
    }
    if (pos != w.vertices_.front())
        throw WalkError("walk: does not close (ends at " + std::to_string(pos) + ")");
    return w;
}

RingEdge Walk::edge(int i) const {
    int L = length();
    if (i < 0 || i >= L) throw std::out_of_range("walk edge index");
    return make_edge(modulus_, vertices_[i], vertices_[(i + 1) % L]);
}

std::vector<RingEdge> Walk::edges() const {
    std::vector<RingEdge> es;
    es.reserve(length());
    for (int i = 0; i < length(); ++i) es.push_back(edge(i));
    return es;
}

}  // namespace rainbow
