#pragma once

#include <map>

#include "rainbow/color_set.hpp"
#include "rainbow/ring.hpp"

namespace rainbow {

// Allowed-color bookkeeping for chords of the ambient ring. Perimeter edges
// (len 1) are fixed to their singleton color and never stored; unconstrained
// chords are implicitly full. Stored sets are always non-empty: an install
// that would empty a set is refused and reported as a contradiction.
class ConstraintStore {
public:
    explicit ConstraintStore(AmbientRing ring) : ring_(ring) {}

    const AmbientRing& ring() const { return ring_; }
    ColorSet allowed(RingEdge e) const;

    // Intersects the stored set with `s`. Returns false if the result would be
    // empty (store left unchanged), true otherwise.
    bool install(RingEdge e, const ColorSet& s);

    const std::map<RingEdge, ColorSet>& chords() const { return chords_; }

    bool operator==(const ConstraintStore&) const = default;

private:
    AmbientRing ring_;
    std::map<RingEdge, ColorSet> chords_;
};

// Vertex relabeling i -> i + rotation (reflect = false) or i -> rotation - i
// (reflect = true), applied consistently to chords and their color sets.
RingEdge map_edge(int modulus, RingEdge e, int rotation, bool reflect);
ColorSet map_colors(const ColorSet& s, int rotation, bool reflect);
ConstraintStore apply_symmetry(const ConstraintStore& store, int rotation, bool reflect);
Walk apply_symmetry(const Walk& walk, int rotation, bool reflect);

}  // namespace rainbow
