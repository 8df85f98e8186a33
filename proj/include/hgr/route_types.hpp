#pragma once

#include <vector>

#include "hgr/geom.hpp"

namespace hgr {

enum class SegmentKind : std::uint8_t { Staircase, Grid, Connector, Local };

// One axis-parallel wire piece on an assigned layer. Direction of geom
// follows path traversal order. Segment orientation always matches the
// layer's preferred direction.
struct RouteSegment {
    Segment geom;
    int layer = 0;
    SegmentKind kind = SegmentKind::Staircase;

    coord_t length() const { return geom.length(); }
};

struct Route {
    int net = -1;
    std::vector<RouteSegment> segments;
    int via_count = 0;    // adjacent-segment layer changes, pin layers anchored
    coord_t length = 0;   // overlapping same-layer geometry counted once
    double search_cost = 0.0;
};

// Merged multi-terminal route: per-pair routes unioned, shared geometry
// deduplicated, cycles broken, netlength and vias recomputed.
struct SteinerTree {
    std::vector<Point> terminals;
    std::vector<Point> steiner_points;  // non-terminal branch points, degree >= 3
    std::vector<RouteSegment> segments;
    coord_t length = 0;
    int via_count = 0;
};

struct NetResult {
    int net = -1;
    bool routed = false;
    std::vector<Route> pair_routes;
    SteinerTree tree;
};

struct CongestionEntry {
    bool on_grid = false;  // false: junction-graph edge, true: grid edge
    int edge = -1;
    int layer = 0;
    double congestion = 0.0;  // p = u/r
};

struct CongestionSnapshot {
    std::vector<CongestionEntry> entries;

    bool empty() const { return entries.empty(); }
};

struct RoutingResult {
    std::vector<NetResult> nets;  // one per net, input order
    int routed = 0;
    int unrouted = 0;
    double completion = 1.0;  // routed / |nets|, vacuously 1
    long long total_length = 0;
    long long total_vias = 0;
    int layers_used = 0;  // highest layer any committed route touches
    CongestionSnapshot snapshot;
    double cpu_seconds = 0.0;
};

}  // namespace hgr
