#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>

namespace hgr {

// Database units. All geometry is integral; predicates are exact.
using coord_t = std::int64_t;

enum class Orientation : std::uint8_t { Horizontal, Vertical };

inline Orientation perpendicular(Orientation o) {
    return o == Orientation::Horizontal ? Orientation::Vertical : Orientation::Horizontal;
}

struct Point {
    coord_t x = 0;
    coord_t y = 0;

    bool operator==(const Point&) const = default;
    auto operator<=>(const Point&) const = default;
};

inline coord_t manhattan(Point a, Point b) {
    return std::abs(a.x - b.x) + std::abs(a.y - b.y);
}

struct Rect {
    coord_t x_lo = 0;
    coord_t y_lo = 0;
    coord_t x_hi = 0;
    coord_t y_hi = 0;

    bool operator==(const Rect&) const = default;

    coord_t width() const { return x_hi - x_lo; }
    coord_t height() const { return y_hi - y_lo; }
    coord_t area() const { return width() * height(); }
    Point center() const { return {(x_lo + x_hi) / 2, (y_lo + y_hi) / 2}; }
    bool valid() const { return x_lo < x_hi && y_lo < y_hi; }

    bool contains(Point p) const {
        return p.x >= x_lo && p.x <= x_hi && p.y >= y_lo && p.y <= y_hi;
    }
    bool contains_strict(Point p) const {
        return p.x > x_lo && p.x < x_hi && p.y > y_lo && p.y < y_hi;
    }
    bool contains(const Rect& r) const {
        return r.x_lo >= x_lo && r.x_hi <= x_hi && r.y_lo >= y_lo && r.y_hi <= y_hi;
    }
    bool on_border(Point p) const {
        if (!contains(p)) return false;
        return p.x == x_lo || p.x == x_hi || p.y == y_lo || p.y == y_hi;
    }
    // Open-interior overlap; touching rectangles do not overlap.
    bool overlaps_interior(const Rect& r) const {
        return x_lo < r.x_hi && r.x_lo < x_hi && y_lo < r.y_hi && r.y_lo < y_hi;
    }
    // Closed intersection may be degenerate (a segment or point).
    bool intersects_closed(const Rect& r) const {
        return x_lo <= r.x_hi && r.x_lo <= x_hi && y_lo <= r.y_hi && r.y_lo <= y_hi;
    }
};

// Axis-parallel segment. Endpoints need not be ordered.
struct Segment {
    Point a;
    Point b;

    bool operator==(const Segment&) const = default;

    coord_t length() const { return manhattan(a, b); }
    bool horizontal() const { return a.y == b.y; }
    Orientation orientation() const {
        return horizontal() ? Orientation::Horizontal : Orientation::Vertical;
    }
    Rect bounds() const {
        return {std::min(a.x, b.x), std::min(a.y, b.y), std::max(a.x, b.x), std::max(a.y, b.y)};
    }
    bool contains(Point p) const {
        Rect r = bounds();
        return r.contains(p) && (horizontal() ? p.y == a.y : p.x == a.x);
    }
    // Closed intersection with a rectangle is nonempty (a point counts).
    bool touches(const Rect& r) const { return bounds().intersects_closed(r); }
    // Length of the overlap between this segment and the closed rectangle.
    coord_t overlap_length(const Rect& r) const {
        Rect bb = bounds();
        if (horizontal()) {
            if (a.y < r.y_lo || a.y > r.y_hi) return 0;
            return std::max<coord_t>(0, std::min(bb.x_hi, r.x_hi) - std::max(bb.x_lo, r.x_lo));
        }
        if (a.x < r.x_lo || a.x > r.x_hi) return 0;
        return std::max<coord_t>(0, std::min(bb.y_hi, r.y_hi) - std::max(bb.y_lo, r.y_lo));
    }
};

struct PointHash {
    std::size_t operator()(const Point& p) const {
        std::size_t h = std::hash<coord_t>{}(p.x);
        return h ^ (std::hash<coord_t>{}(p.y) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
    }
};

}  // namespace hgr
