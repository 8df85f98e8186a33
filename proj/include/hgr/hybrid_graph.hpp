#pragma once

#include <vector>

#include "hgr/floorplan.hpp"
#include "hgr/grid_graph.hpp"
#include "hgr/junction_graph.hpp"

namespace hgr {

enum class ConnectorKind : std::uint8_t { PinJunction, PinBin, JunctionBin };

// Capacity-free access edge of the per-net overlay. Bin connectors cross
// between the boundary and over-the-block layer groups; their cost carries
// the via overhead of that crossing.
struct Connector {
    ConnectorKind kind;
    int pin = -1;       // position within the net's pin list, when applicable
    int junction = -1;
    int bin = -1;
    Point from;         // entity location (pin or junction)
    Point to;           // junction location or bin center
    coord_t length = 0; // planar Manhattan distance
    int group_crossings = 0;
};

// Per-floorplan connector data shared by every net: each junction attaches to
// the unique bin containing it (border ties resolve to the lower (row, col)
// bin, matching GridGraph::bin_at).
struct OverlayBase {
    std::vector<int> junction_bin;               // junction -> bin
    std::vector<std::vector<int>> bin_junctions; // bin -> junctions inside it
    std::vector<std::vector<int>> block_junctions;  // block -> junctions on its outline
};

OverlayBase build_overlay_base(const Floorplan& fp, const JunctionGraph& jg,
                               const GridGraph& gg);

// Connectors from one pin to every junction on its owner block's boundary.
// Throws IsolatedPin when the owner has no boundary junction (n = 1).
std::vector<Connector> pin_junction_edges(const Pin& pin, int pin_pos, const Floorplan& fp,
                                          const JunctionGraph& jg, const OverlayBase& base);

// Per-net overlay over the shared junction and grid graphs. Vertices are
// indexed junctions, then bins, then this net's pins; base graphs are
// referenced, never copied.
struct NetGraph {
    const Floorplan* fp = nullptr;
    const JunctionGraph* jg = nullptr;
    const GridGraph* gg = nullptr;
    const OverlayBase* base = nullptr;
    const Net* net = nullptr;

    std::vector<std::vector<Connector>> pin_to_junction;  // per pin
    std::vector<Connector> pin_to_bin;                    // per pin

    int junction_count() const { return jg->vertex_count(); }
    int bin_count() const { return gg->vertex_count(); }
    int pin_count() const { return net->degree(); }
    int vertex_count() const { return junction_count() + bin_count() + pin_count(); }

    int junction_vertex(int j) const { return j; }
    int bin_vertex(int b) const { return junction_count() + b; }
    int pin_vertex(int p) const { return junction_count() + bin_count() + p; }

    bool is_junction(int v) const { return v < junction_count(); }
    bool is_bin(int v) const { return v >= junction_count() && v < junction_count() + bin_count(); }
    int as_junction(int v) const { return v; }
    int as_bin(int v) const { return v - junction_count(); }
    int as_pin(int v) const { return v - junction_count() - bin_count(); }

    Point vertex_point(int v) const {
        if (is_junction(v)) return jg->junctions[as_junction(v)].loc;
        if (is_bin(v)) return gg->bins[as_bin(v)].center;
        return net->pins[as_pin(v)].loc;
    }

    Connector junction_bin_connector(int junction) const;

    // Total connector count: pin-junction + pin-bin + junction-bin families.
    std::size_t connector_count() const;
};

NetGraph build_net_graph(const Net& net, const Floorplan& fp, const JunctionGraph& jg,
                         const GridGraph& gg, const OverlayBase& base);

}  // namespace hgr
