#include "hgr/junction_graph.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <sstream>
#include <unordered_map>

#include "hgr/errors.hpp"

namespace hgr {

double segment_capacity(coord_t length, coord_t pitch) {
    if (pitch <= 0) throw ZeroPitch("track pitch must be positive");
    return static_cast<double>(length / pitch);
}

double edge_weight(coord_t length, const EdgeState& state, int layer) {
    double p = state.congestion(layer);
    if (p >= 1.0) throw EdgeSaturated("edge saturated on layer " + std::to_string(layer));
    return static_cast<double>(length) / (1.0 - p);
}

namespace {

struct Interval {
    coord_t lo, hi;
};

// Merge abutting/overlapping intervals into maximal ones.
std::vector<Interval> merge_intervals(std::vector<Interval> v) {
    std::sort(v.begin(), v.end(), [](const Interval& a, const Interval& b) {
        return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
    });
    std::vector<Interval> out;
    for (const Interval& it : v) {
        if (!out.empty() && it.lo <= out.back().hi)
            out.back().hi = std::max(out.back().hi, it.hi);
        else
            out.push_back(it);
    }
    return out;
}

// Shared interior wall intervals keyed by the wall line coordinate.
// Vertical walls: key = x, interval in y. Horizontal: key = y, interval in x.
std::map<coord_t, std::vector<Interval>> shared_walls(const Floorplan& fp, Orientation o) {
    std::map<coord_t, std::vector<Interval>> lo_side, hi_side;  // block sides per line
    for (const Block& b : fp.blocks) {
        const Rect& r = b.outline;
        if (o == Orientation::Vertical) {
            lo_side[r.x_lo].push_back({r.y_lo, r.y_hi});   // block to the right of the line
            hi_side[r.x_hi].push_back({r.y_lo, r.y_hi});   // block to the left
        } else {
            lo_side[r.y_lo].push_back({r.x_lo, r.x_hi});
            hi_side[r.y_hi].push_back({r.x_lo, r.x_hi});
        }
    }
    std::map<coord_t, std::vector<Interval>> walls;
    for (auto& [line, his] : hi_side) {
        auto it = lo_side.find(line);
        if (it == lo_side.end()) continue;
        std::vector<Interval> pieces;
        for (const Interval& a : his)
            for (const Interval& b : it->second) {
                coord_t lo = std::max(a.lo, b.lo), hi = std::min(a.hi, b.hi);
                if (lo < hi) pieces.push_back({lo, hi});
            }
        if (!pieces.empty()) walls[line] = merge_intervals(std::move(pieces));
    }
    return walls;
}

}  // namespace

JunctionGraph build_junction_graph(const Floorplan& fp,
                                   const std::vector<TJunction>& junctions,
                                   coord_t pitch, const LayerConfig& layers) {
    if (pitch <= 0) throw ZeroPitch("track pitch must be positive");

    JunctionGraph g;
    g.junctions = junctions;
    g.incident.resize(junctions.size());

    std::unordered_map<Point, int, PointHash> at;
    for (const TJunction& j : junctions) at[j.loc] = j.index;

    auto add_edges_on_line = [&](Orientation o, coord_t line, Interval span) {
        // Junction coordinates along this wall piece, endpoints included.
        std::vector<std::pair<coord_t, int>> stops;
        for (const TJunction& j : junctions) {
            coord_t along = o == Orientation::Vertical ? j.loc.y : j.loc.x;
            coord_t across = o == Orientation::Vertical ? j.loc.x : j.loc.y;
            if (across == line && along >= span.lo && along <= span.hi)
                stops.emplace_back(along, j.index);
        }
        std::sort(stops.begin(), stops.end());
        if (stops.empty() || stops.front().first != span.lo || stops.back().first != span.hi)
            throw NonMosaicFloorplan("interior wall does not terminate at junctions");
        for (std::size_t i = 0; i + 1 < stops.size(); ++i) {
            StairEdge e;
            e.index = static_cast<int>(g.edges.size());
            e.j_a = stops[i].second;
            e.j_b = stops[i + 1].second;
            e.orient = o;  // a wall on a vertical line is a vertical segment
            if (o == Orientation::Vertical)
                e.seg = {{line, stops[i].first}, {line, stops[i + 1].first}};
            else
                e.seg = {{stops[i].first, line}, {stops[i + 1].first, line}};
            e.state = EdgeState(layers.max_layers);
            double cap = segment_capacity(e.length(), pitch);
            for (int l = 1; l <= layers.split; ++l)
                if (LayerConfig::compatible(l, e.orient)) e.state.set_capacity(l, cap);
            g.incident[e.j_a].push_back(e.index);
            g.incident[e.j_b].push_back(e.index);
            g.edges.push_back(std::move(e));
        }
    };

    for (Orientation o : {Orientation::Vertical, Orientation::Horizontal})
        for (const auto& [line, intervals] : shared_walls(fp, o))
            for (const Interval& span : intervals) add_edges_on_line(o, line, span);

    return g;
}

std::vector<CapacityOverride> parse_capacity_overrides(std::istream& in) {
    std::vector<CapacityOverride> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        CapacityOverride ov;
        if (!(ls >> ov.edge)) continue;  // blank line
        if (!(ls >> ov.layer >> ov.capacity))
            throw ParseError("expected 'edge_id layer capacity'", lineno);
        out.push_back(ov);
    }
    return out;
}

void apply_capacity_overrides(JunctionGraph& graph,
                              const std::vector<CapacityOverride>& overrides) {
    for (const CapacityOverride& ov : overrides) {
        if (ov.edge < 0 || ov.edge >= graph.edge_count())
            throw ValidationError("capacity override names unknown edge " +
                                  std::to_string(ov.edge));
        StairEdge& e = graph.edges[ov.edge];
        if (ov.layer < 1 || ov.layer > e.state.max_layer())
            throw ValidationError("capacity override layer out of range");
        e.state.set_capacity(ov.layer, ov.capacity);
    }
}

}  // namespace hgr
