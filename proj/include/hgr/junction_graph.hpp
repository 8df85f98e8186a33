#pragma once

#include <iosfwd>
#include <vector>

#include "hgr/edge_state.hpp"
#include "hgr/floorplan.hpp"
#include "hgr/geom.hpp"
#include "hgr/layers.hpp"

namespace hgr {

// One maximal block-boundary wall piece between two adjacent junctions.
struct StairEdge {
    int index = -1;
    int j_a = -1;  // endpoint junction indices, j_a < j_b by location order
    int j_b = -1;
    Segment seg;
    Orientation orient = Orientation::Horizontal;
    EdgeState state;

    coord_t length() const { return seg.length(); }
};

// Graph over T-junctions; edges are the interior wall segments between
// adjacent junctions. Carries routing on the boundary layer group. Walls on
// the die outline are not routing edges.
struct JunctionGraph {
    std::vector<TJunction> junctions;
    std::vector<StairEdge> edges;
    std::vector<std::vector<int>> incident;  // junction -> edge indices

    int vertex_count() const { return static_cast<int>(junctions.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }
    int other_end(int edge, int junction) const {
        const StairEdge& e = edges[edge];
        return e.j_a == junction ? e.j_b : e.j_a;
    }
};

// Tracks that fit along a wall of the given length.
double segment_capacity(coord_t length, coord_t pitch);

JunctionGraph build_junction_graph(const Floorplan& fp,
                                   const std::vector<TJunction>& junctions,
                                   coord_t pitch, const LayerConfig& layers);

struct CapacityOverride {
    int edge = -1;
    int layer = 0;
    double capacity = 0.0;
};

// Lines of "edge_id layer capacity"; '#' starts a comment.
std::vector<CapacityOverride> parse_capacity_overrides(std::istream& in);
void apply_capacity_overrides(JunctionGraph& graph,
                              const std::vector<CapacityOverride>& overrides);

}  // namespace hgr
