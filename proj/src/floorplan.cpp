#include "hgr/floorplan.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "hgr/errors.hpp"

namespace hgr {

int TJunction::arm_count() const { return std::popcount(arms); }

namespace {

// Incident wall directions at p, derived from all block edges. A direction is
// incident when some block edge leaves p that way.
std::uint8_t wall_arms_at(const Floorplan& fp, Point p) {
    std::uint8_t arms = 0;
    for (const Block& b : fp.blocks) {
        const Rect& r = b.outline;
        bool on_h = (p.y == r.y_lo || p.y == r.y_hi) && p.x >= r.x_lo && p.x <= r.x_hi;
        bool on_v = (p.x == r.x_lo || p.x == r.x_hi) && p.y >= r.y_lo && p.y <= r.y_hi;
        if (on_h) {
            if (p.x > r.x_lo) arms |= ArmWest;
            if (p.x < r.x_hi) arms |= ArmEast;
        }
        if (on_v) {
            if (p.y > r.y_lo) arms |= ArmSouth;
            if (p.y < r.y_hi) arms |= ArmNorth;
        }
        if (arms == (ArmWest | ArmEast | ArmSouth | ArmNorth)) break;
    }
    return arms;
}

}  // namespace

MosaicReport validate_mosaic(const Floorplan& fp) {
    MosaicReport rep;
    coord_t covered = 0;
    for (const Block& b : fp.blocks) {
        if (!fp.die.contains(b.outline)) rep.blocks_outside_die.push_back(b.index);
        covered += b.outline.area();
    }
    rep.coverage_gap = fp.die.area() - covered;

    const int n = fp.block_count();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (fp.blocks[i].outline.overlaps_interior(fp.blocks[j].outline))
                rep.overlaps.emplace_back(i, j);

    // Any 4-armed corner point is a degenerate "+" crossing.
    std::unordered_set<Point, PointHash> seen;
    for (const Block& b : fp.blocks) {
        const Rect& r = b.outline;
        for (Point c : {Point{r.x_lo, r.y_lo}, Point{r.x_hi, r.y_lo}, Point{r.x_lo, r.y_hi},
                        Point{r.x_hi, r.y_hi}}) {
            if (!seen.insert(c).second) continue;
            if (wall_arms_at(fp, c) == (ArmWest | ArmEast | ArmSouth | ArmNorth))
                rep.cross_points.push_back(c);
        }
    }
    std::sort(rep.cross_points.begin(), rep.cross_points.end());

    for (const Net& net : fp.nets) {
        for (std::size_t k = 0; k < net.pins.size(); ++k) {
            const Pin& pin = net.pins[k];
            if (pin.block < 0 || pin.block >= n ||
                !fp.blocks[pin.block].outline.contains(pin.loc))
                rep.pin_violations.emplace_back(net.index, static_cast<int>(k));
        }
    }
    return rep;
}

std::string MosaicReport::summary() const {
    std::ostringstream os;
    if (ok()) return "mosaic ok";
    if (coverage_gap != 0) os << "coverage gap " << coverage_gap << "; ";
    if (!blocks_outside_die.empty()) os << blocks_outside_die.size() << " block(s) outside die; ";
    if (!overlaps.empty()) {
        os << overlaps.size() << " overlap(s):";
        for (auto [i, j] : overlaps) os << " (" << i << "," << j << ")";
        os << "; ";
    }
    if (!cross_points.empty()) {
        os << cross_points.size() << " 4-way crossing(s):";
        for (const Point& p : cross_points) os << " (" << p.x << "," << p.y << ")";
        os << "; ";
    }
    if (!pin_violations.empty()) os << pin_violations.size() << " pin(s) outside owner";
    return os.str();
}

std::vector<TJunction> extract_junctions(const Floorplan& fp) {
    MosaicReport rep = validate_mosaic(fp);
    if (!rep.cross_points.empty())
        throw DegenerateCross("degenerate 4-way crossing: " + rep.summary());
    if (!rep.ok()) throw NonMosaicFloorplan("floorplan is not a mosaic: " + rep.summary());

    std::unordered_set<Point, PointHash> corners;
    for (const Block& b : fp.blocks) {
        const Rect& r = b.outline;
        corners.insert({r.x_lo, r.y_lo});
        corners.insert({r.x_hi, r.y_lo});
        corners.insert({r.x_lo, r.y_hi});
        corners.insert({r.x_hi, r.y_hi});
    }

    std::vector<TJunction> out;
    for (const Point& p : corners) {
        std::uint8_t arms = wall_arms_at(fp, p);
        if (std::popcount(arms) == 3) out.push_back({-1, p, arms});
    }
    std::sort(out.begin(), out.end(),
              [](const TJunction& a, const TJunction& b) { return a.loc < b.loc; });
    for (std::size_t i = 0; i < out.size(); ++i) out[i].index = static_cast<int>(i);
    return out;
}

coord_t hpwl(const Net& net) {
    if (net.pins.empty()) return 0;
    coord_t x_lo = net.pins[0].loc.x, x_hi = x_lo;
    coord_t y_lo = net.pins[0].loc.y, y_hi = y_lo;
    for (const Pin& p : net.pins) {
        x_lo = std::min(x_lo, p.loc.x);
        x_hi = std::max(x_hi, p.loc.x);
        y_lo = std::min(y_lo, p.loc.y);
        y_hi = std::max(y_hi, p.loc.y);
    }
    return (x_hi - x_lo) + (y_hi - y_lo);
}

std::vector<int> order_nets(const std::vector<Net>& nets, NetOrder order) {
    std::vector<int> idx(nets.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<coord_t> lengths(nets.size());
    for (std::size_t i = 0; i < nets.size(); ++i) lengths[i] = hpwl(nets[i]);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
        auto key_a = std::make_pair(nets[a].degree(), lengths[a]);
        auto key_b = std::make_pair(nets[b].degree(), lengths[b]);
        return order == NetOrder::Ascending ? key_a < key_b : key_b < key_a;
    });
    return idx;
}

}  // namespace hgr
