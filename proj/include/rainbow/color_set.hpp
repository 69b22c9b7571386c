#pragma once

#include <initializer_list>
#include <string>
#include <vector>

namespace rainbow {

// Arc of consecutive residues mod M: {start, start+1, ..., start+width-1}.
// May wrap past M-1.
struct Arc {
    int start = 0;  // in [0, M)
    int width = 0;  // in [1, M]
    bool operator==(const Arc&) const = default;
};

// Subset of Z_M, kept as disjoint, cyclically non-adjacent arcs sorted by
// start. Normal form is unique: the full set is the single arc (0, M); a set
// touching the 0/M seam is stored as one wrapping arc with its true cyclic
// start (which then sorts last). Equality is set equality.
class ColorSet {
public:
    static ColorSet empty(int modulus);
    static ColorSet full(int modulus);
    static ColorSet singleton(int modulus, int color);
    static ColorSet arc(int modulus, int start, int width);
    static ColorSet of(int modulus, std::initializer_list<int> colors);
    static ColorSet of(int modulus, const std::vector<int>& colors);

    int modulus() const { return m_; }
    bool is_empty() const { return arcs_.empty(); }
    bool is_full() const { return arcs_.size() == 1 && arcs_[0].width == m_; }
    int size() const;
    bool contains(int color) const;

    ColorSet unite(const ColorSet& other) const;
    ColorSet intersect(const ColorSet& other) const;
    ColorSet complement() const;
    ColorSet minus(const ColorSet& other) const;
    bool disjoint_with(const ColorSet& other) const;

    ColorSet shifted(int delta) const;    // x -> x + delta
    ColorSet reflected(int c) const;      // x -> c - x

    const std::vector<Arc>& arcs() const { return arcs_; }
    std::vector<int> values() const;
    std::string str() const;

    bool operator==(const ColorSet&) const = default;

private:
    explicit ColorSet(int modulus) : m_(modulus) {}

    // Half-open linear intervals [lo, hi) within [0, M]; wrapping arcs split.
    std::vector<std::pair<int, int>> pieces() const;
    static ColorSet from_pieces(int m, std::vector<std::pair<int, int>> ps);

    int m_ = 1;
    std::vector<Arc> arcs_;
};

}  // namespace rainbow
