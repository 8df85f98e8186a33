#include "hgr/grid_graph.hpp"

#include <cassert>
#include <cmath>

namespace hgr {

int grid_dimension(int block_count) {
    assert(block_count >= 1);
    long long junctions = 2LL * block_count - 2;
    int m = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(junctions))));
    while (static_cast<long long>(m) * m < junctions) ++m;  // guard fp rounding
    return std::max(m, 1);
}

int GridGraph::bin_at(Point p) const {
    coord_t bw = die.width() / m, bh = die.height() / m;
    auto axis = [&](coord_t v, coord_t lo, coord_t step) {
        coord_t off = v - lo;
        coord_t idx = off / step;
        if (off > 0 && off % step == 0) --idx;  // border belongs to the lower bin
        return static_cast<int>(std::min<coord_t>(idx, m - 1));
    };
    return bin_index(axis(p.y, die.y_lo, bh), axis(p.x, die.x_lo, bw));
}

int GridGraph::edge_at(int bin, GridSide side) const {
    const Bin& b = bins[bin];
    int r = b.row, c = b.col;
    switch (side) {
        case GridSide::West: c -= 1; break;
        case GridSide::East: break;
        case GridSide::South: r -= 1; break;
        case GridSide::North: break;
    }
    bool horizontal = side == GridSide::West || side == GridSide::East;
    if (horizontal) {
        if (c < 0 || c + 1 >= m) return -1;
        return r * (m - 1) + c;  // horizontal edges come first, row-major
    }
    if (r < 0 || r + 1 >= m) return -1;
    return m * (m - 1) + r * m + b.col;
}

GridGraph build_grid_graph(int m, const Rect& die, const LayerConfig& layers) {
    assert(m >= 1);
    GridGraph g;
    g.m = m;
    g.die = die;
    g.bins.reserve(static_cast<std::size_t>(m) * m);

    coord_t bw = die.width() / m, bh = die.height() / m;
    assert(bw >= 1 && bh >= 1 && "die too small for the bin grid");
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c < m; ++c) {
            Bin b;
            b.index = g.bin_index(r, c);
            b.row = r;
            b.col = c;
            // Last row/column absorb the integer remainder.
            b.rect = {die.x_lo + c * bw, die.y_lo + r * bh,
                      c + 1 == m ? die.x_hi : die.x_lo + (c + 1) * bw,
                      r + 1 == m ? die.y_hi : die.y_lo + (r + 1) * bh};
            b.center = b.rect.center();
            g.bins.push_back(b);
        }
    }

    g.incident.resize(g.bins.size());
    auto add_edge = [&](int a, int b, Orientation o) {
        GridEdge e;
        e.index = static_cast<int>(g.edges.size());
        e.bin_a = a;
        e.bin_b = b;
        e.orient = o;
        const Rect& ra = g.bins[a].rect;
        const Rect& rb = g.bins[b].rect;
        if (o == Orientation::Horizontal)
            e.boundary = {{ra.x_hi, ra.y_lo}, {ra.x_hi, ra.y_hi}};
        else
            e.boundary = {{ra.x_lo, ra.y_hi}, {ra.x_hi, ra.y_hi}};
        e.length = manhattan(g.bins[a].center, g.bins[b].center);
        e.state = EdgeState(layers.max_layers);
        g.incident[a].push_back(e.index);
        g.incident[b].push_back(e.index);
        g.edges.push_back(std::move(e));
        (void)rb;
    };
    for (int r = 0; r < m; ++r)
        for (int c = 0; c + 1 < m; ++c)
            add_edge(g.bin_index(r, c), g.bin_index(r, c + 1), Orientation::Horizontal);
    for (int r = 0; r + 1 < m; ++r)
        for (int c = 0; c < m; ++c)
            add_edge(g.bin_index(r, c), g.bin_index(r + 1, c), Orientation::Vertical);
    assert(g.edge_count() == 2 * m * (m - 1));
    return g;
}

void compute_grid_capacities(GridGraph& g, const Floorplan& fp, const LayerConfig& layers,
                             GridCapMode mode) {
    std::vector<Rect> bboxes;
    bboxes.reserve(fp.nets.size());
    for (const Net& net : fp.nets) {
        if (net.pins.empty()) continue;
        Rect bb{net.pins[0].loc.x, net.pins[0].loc.y, net.pins[0].loc.x, net.pins[0].loc.y};
        for (const Pin& p : net.pins) {
            bb.x_lo = std::min(bb.x_lo, p.loc.x);
            bb.x_hi = std::max(bb.x_hi, p.loc.x);
            bb.y_lo = std::min(bb.y_lo, p.loc.y);
            bb.y_hi = std::max(bb.y_hi, p.loc.y);
        }
        bboxes.push_back(bb);
    }

    for (GridEdge& e : g.edges) {
        double count = 0.0;
        for (const Rect& bb : bboxes)
            if (e.boundary.touches(bb)) count += 1.0;
        e.base_capacity = count;

        e.max_reserved = 0;
        for (const Block& b : fp.blocks)
            if (e.boundary.overlap_length(b.outline) > 0)
                e.max_reserved = std::max(e.max_reserved, b.reserved_up_to);

        int compatible = 0;
        for (int l = layers.split + 1; l <= layers.max_layers; ++l)
            if (LayerConfig::compatible(l, e.orient) && l > e.max_reserved) ++compatible;
        for (int l = layers.split + 1; l <= layers.max_layers; ++l) {
            bool usable = LayerConfig::compatible(l, e.orient) && l > e.max_reserved;
            double cap = 0.0;
            if (usable)
                cap = mode == GridCapMode::Replicate ? count
                                                     : count / static_cast<double>(compatible);
            e.state.set_capacity(l, cap);
        }
    }
}

}  // namespace hgr
