#include "rainbow/constraint_store.hpp"

namespace rainbow {

ColorSet ConstraintStore::allowed(RingEdge e) const {
    if (e.len == 1) return ColorSet::singleton(ring_.modulus, e.base);
    auto it = chords_.find(e);
    if (it != chords_.end()) return it->second;
    return ColorSet::full(ring_.modulus);
}

bool ConstraintStore::install(RingEdge e, const ColorSet& s) {
    if (e.len == 1)
        throw std::invalid_argument("install: perimeter colors are fixed");
    ColorSet next = allowed(e).intersect(s);
    if (next.is_empty()) return false;
    chords_.insert_or_assign(e, std::move(next));
    return true;
}

RingEdge map_edge(int modulus, RingEdge e, int rotation, bool reflect) {
    int u = e.base;
    int v = (e.base + e.len) % modulus;
    auto sigma = [&](int x) {
        int y = reflect ? rotation - x : x + rotation;
        y %= modulus;
        return y < 0 ? y + modulus : y;
    };
    return make_edge(modulus, sigma(u), sigma(v));
}

ColorSet map_colors(const ColorSet& s, int rotation, bool reflect) {
    // Perimeter edge (i, i+1), color i, maps to (sigma(i), sigma(i+1)); under
    // reflection that is the edge (rotation-i-1, rotation-i) with color
    // rotation-1-i, so colors reflect about rotation-1.
    return reflect ? s.reflected(rotation - 1) : s.shifted(rotation);
}

ConstraintStore apply_symmetry(const ConstraintStore& store, int rotation, bool reflect) {
    const int m = store.ring().modulus;
    ConstraintStore out(store.ring());
    for (const auto& [e, s] : store.chords())
        out.install(map_edge(m, e, rotation, reflect), map_colors(s, rotation, reflect));
    return out;
}

Walk apply_symmetry(const Walk& walk, int rotation, bool reflect) {
    std::vector<int> steps = walk.steps();
    if (reflect)
        for (int& s : steps) s = -s;
    int start = walk.vertices().front();
    int new_start = reflect ? rotation - start : start + rotation;
    return Walk::from_steps(walk.modulus(), new_start, steps);
}

}  // namespace rainbow
