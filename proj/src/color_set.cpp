#include "rainbow/color_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace rainbow {

namespace {

int checked_modulus(int m) {
    if (m < 1) throw std::invalid_argument("ColorSet: modulus must be >= 1");
    return m;
}

int norm(int x, int m) {
    int r = x % m;
    return r < 0 ? r + m : r;
}

}  // namespace

ColorSet ColorSet::empty(int modulus) { return ColorSet(checked_modulus(modulus)); }

ColorSet ColorSet::full(int modulus) {
    ColorSet s(checked_modulus(modulus));
    s.arcs_.push_back({0, modulus});
    return s;
}

ColorSet ColorSet::singleton(int modulus, int color) { return arc(modulus, color, 1); }

ColorSet ColorSet::arc(int modulus, int start, int width) {
    ColorSet s(checked_modulus(modulus));
    if (width < 0) throw std::invalid_argument("ColorSet: negative arc width");
    if (width == 0) return s;
    if (width >= modulus) return full(modulus);
    s.arcs_.push_back({norm(start, modulus), width});
    // Re-normalize so a wrapping arc is recognized as such by the piece logic.
    return from_pieces(modulus, s.pieces());
}

ColorSet ColorSet::of(int modulus, std::initializer_list<int> colors) {
    return of(modulus, std::vector<int>(colors));
}

ColorSet ColorSet::of(int modulus, const std::vector<int>& colors) {
    checked_modulus(modulus);
    std::vector<std::pair<int, int>> ps;
    ps.reserve(colors.size());
    for (int c : colors) {
        int v = norm(c, modulus);
        ps.push_back({v, v + 1});
    }
    return from_pieces(modulus, std::move(ps));
}

int ColorSet::size() const {
    int total = 0;
    for (const Arc& a : arcs_) total += a.width;
    return total;
}

bool ColorSet::contains(int color) const {
    int c = norm(color, m_);
    for (const Arc& a : arcs_) {
        int off = c - a.start;
        if (off < 0) off += m_;
        if (off < a.width) return true;
    }
    return false;
}

std::vector<std::pair<int, int>> ColorSet::pieces() const {
    std::vector<std::pair<int, int>> ps;
    for (const Arc& a : arcs_) {
        int end = a.start + a.width;
        if (end <= m_) {
            ps.push_back({a.start, end});
        } else {
            ps.push_back({a.start, m_});
            ps.push_back({0, end - m_});
        }
    }
    std::sort(ps.begin(), ps.end());
    return ps;
}

ColorSet ColorSet::from_pieces(int m, std::vector<std::pair<int, int>> ps) {
    ColorSet s(m);
    if (ps.empty()) return s;
    std::sort(ps.begin(), ps.end());
    // Merge overlapping or adjacent linear pieces.
    std::vector<std::pair<int, int>> merged;
    for (auto [lo, hi] : ps) {
        if (lo == hi) continue;
        if (!merged.empty() && lo <= merged.back().second) {
            merged.back().second = std::max(merged.back().second, hi);
        } else {
            merged.push_back({lo, hi});
        }
    }
    if (merged.empty()) return s;
    if (merged.size() == 1 && merged[0].first == 0 && merged[0].second == m) return full(m);
    // Stitch across the seam: a piece ending at M is cyclically adjacent to one
    // starting at 0; represent their union as a single wrapping arc.
    bool wraps = merged.size() >= 2 && merged.front().first == 0 && merged.back().second == m;
    if (wraps) {
        Arc w{merged.back().first, (m - merged.back().first) + merged.front().second};
        for (size_t i = 1; i + 1 < merged.size(); ++i)
            s.arcs_.push_back({merged[i].first, merged[i].second - merged[i].first});
        s.arcs_.push_back(w);  // wrap arc has the largest start, so order holds
    } else {
        for (auto [lo, hi] : merged) s.arcs_.push_back({lo, hi - lo});
    }
    return s;
}

ColorSet ColorSet::unite(const ColorSet& other) const {
    if (m_ != other.m_) throw std::invalid_argument("ColorSet: modulus mismatch");
    auto ps = pieces();
    auto qs = other.pieces();
    ps.insert(ps.end(), qs.begin(), qs.end());
    return from_pieces(m_, std::move(ps));
}

ColorSet ColorSet::intersect(const ColorSet& other) const {
    if (m_ != other.m_) throw std::invalid_argument("ColorSet: modulus mismatch");
    auto ps = pieces();
    auto qs = other.pieces();
    std::vector<std::pair<int, int>> out;
    size_t i = 0, j = 0;
    while (i < ps.size() && j < qs.size()) {
        int lo = std::max(ps[i].first, qs[j].first);
        int hi = std::min(ps[i].second, qs[j].second);
        if (lo < hi) out.push_back({lo, hi});
        if (ps[i].second < qs[j].second) ++i; else ++j;
    }
    return from_pieces(m_, std::move(out));
}

ColorSet ColorSet::complement() const {
    std::vector<std::pair<int, int>> out;
    int cursor = 0;
    for (auto [lo, hi] : pieces()) {
        if (cursor < lo) out.push_back({cursor, lo});
        cursor = hi;
    }
    if (cursor < m_) out.push_back({cursor, m_});
    return from_pieces(m_, std::move(out));
}

ColorSet ColorSet::minus(const ColorSet& other) const { return intersect(other.complement()); }

bool ColorSet::disjoint_with(const ColorSet& other) const { return intersect(other).is_empty(); }

ColorSet ColorSet::shifted(int delta) const {
    std::vector<std::pair<int, int>> out;
    for (const Arc& a : arcs_) {
        int s = norm(a.start + delta, m_);
        int end = s + a.width;
        if (end <= m_) {
            out.push_back({s, end});
        } else {
            out.push_back({s, m_});
            out.push_back({0, end - m_});
        }
    }
    return from_pieces(m_, std::move(out));
}

ColorSet ColorSet::reflected(int c) const {
    // {s, ..., s+w-1} maps to {c-s-w+1, ..., c-s}.
    std::vector<std::pair<int, int>> out;
    for (const Arc& a : arcs_) {
        int s = norm(c - a.start - a.width + 1, m_);
        int end = s + a.width;
        if (end <= m_) {
            out.push_back({s, end});
        } else {
            out.push_back({s, m_});
            out.push_back({0, end - m_});
        }
    }
    return from_pieces(m_, std::move(out));
}

std::vector<int> ColorSet::values() const {
    std::vector<int> vs;
    vs.reserve(size());
    for (const Arc& a : arcs_)
        for (int i = 0; i < a.width; ++i) vs.push_back((a.start + i) % m_);
    std::sort(vs.begin(), vs.end());
    return vs;
}

std::string ColorSet::str() const {
    if (is_empty()) return "{}";
    std::string out = "{";
    for (size_t i = 0; i < arcs_.size(); ++i) {
        const Arc& a = arcs_[i];
        if (i) out += ", ";
        if (a.width == 1) {
            out += std::to_string(a.start);
        } else {
            out += std::to_string(a.start) + ".." + std::to_string((a.start + a.width - 1) % m_);
        }
    }
    out += "}";
    return out;
}

}  // namespace rainbow
