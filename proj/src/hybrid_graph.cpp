#include "hgr/hybrid_graph.hpp"

#include "hgr/errors.hpp"

namespace hgr {

OverlayBase build_overlay_base(const Floorplan& fp, const JunctionGraph& jg,
                               const GridGraph& gg) {
    OverlayBase base;
    base.junction_bin.resize(jg.vertex_count());
    base.bin_junctions.resize(gg.vertex_count());
    for (const TJunction& j : jg.junctions) {
        int bin = gg.bin_at(j.loc);
        base.junction_bin[j.index] = bin;
        base.bin_junctions[bin].push_back(j.index);
    }
    base.block_junctions.resize(fp.blocks.size());
    for (const Block& b : fp.blocks)
        for (const TJunction& j : jg.junctions)
            if (b.outline.on_border(j.loc)) base.block_junctions[b.index].push_back(j.index);
    return base;
}

std::vector<Connector> pin_junction_edges(const Pin& pin, int pin_pos, const Floorplan& fp,
                                          const JunctionGraph& jg, const OverlayBase& base) {
    (void)fp;
    const std::vector<int>& boundary = base.block_junctions[pin.block];
    if (boundary.empty())
        throw IsolatedPin("pin's owner block has no boundary junction");
    std::vector<Connector> out;
    out.reserve(boundary.size());
    for (int j : boundary) {
        Connector c;
        c.kind = ConnectorKind::PinJunction;
        c.pin = pin_pos;
        c.junction = j;
        c.from = pin.loc;
        c.to = jg.junctions[j].loc;
        c.length = manhattan(c.from, c.to);
        c.group_crossings = 0;
        out.push_back(c);
    }
    return out;
}

Connector NetGraph::junction_bin_connector(int junction) const {
    Connector c;
    c.kind = ConnectorKind::JunctionBin;
    c.junction = junction;
    c.bin = base->junction_bin[junction];
    c.from = jg->junctions[junction].loc;
    c.to = gg->bins[c.bin].center;
    c.length = manhattan(c.from, c.to);
    c.group_crossings = 1;
    return c;
}

std::size_t NetGraph::connector_count() const {
    std::size_t total = pin_to_bin.size() + base->junction_bin.size();
    for (const auto& v : pin_to_junction) total += v.size();
    return total;
}

NetGraph build_net_graph(const Net& net, const Floorplan& fp, const JunctionGraph& jg,
                         const GridGraph& gg, const OverlayBase& base) {
    NetGraph g;
    g.fp = &fp;
    g.jg = &jg;
    g.gg = &gg;
    g.base = &base;
    g.net = &net;
    g.pin_to_junction.reserve(net.pins.size());
    g.pin_to_bin.reserve(net.pins.size());
    for (int p = 0; p < net.degree(); ++p) {
        const Pin& pin = net.pins[p];
        g.pin_to_junction.push_back(pin_junction_edges(pin, p, fp, jg, base));
        Connector c;
        c.kind = ConnectorKind::PinBin;
        c.pin = p;
        c.bin = gg.bin_at(pin.loc);
        c.from = pin.loc;
        c.to = gg.bins[c.bin].center;
        c.length = manhattan(c.from, c.to);
        c.group_crossings = 1;
        g.pin_to_bin.push_back(c);
    }
    return g;
}

}  // namespace hgr
