#pragma once

#include <vector>

#include "hgr/errors.hpp"
#include "hgr/layers.hpp"

namespace hgr {

// Per-layer routing capacity and accumulated demand of one routing edge.
// Demand never exceeds capacity: admission is checked before any commit and
// commits are rejected rather than overflowed.
class EdgeState {
public:
    explicit EdgeState(int max_layers = 0) : capacity_(max_layers + 1, 0.0), demand_(max_layers + 1, 0.0) {}

    int max_layer() const { return static_cast<int>(capacity_.size()) - 1; }

    double capacity(int layer) const { return capacity_[layer]; }
    double demand(int layer) const { return demand_[layer]; }

    void set_capacity(int layer, double cap) { capacity_[layer] = cap; }

    bool has_capacity(int layer) const { return capacity_[layer] > 0.0; }

    // Congestion ratio p = u/r. Only meaningful where capacity exists.
    double congestion(int layer) const { return demand_[layer] / capacity_[layer]; }

    bool admits(int layer, double inc) const {
        return capacity_[layer] > 0.0 && demand_[layer] + inc <= capacity_[layer];
    }

    void commit(int layer, double inc) {
        if (!admits(layer, inc))
            throw OverflowRejected("demand increment would exceed capacity on layer " +
                                   std::to_string(layer));
        demand_[layer] += inc;
    }

    void release(int layer, double inc) { demand_[layer] -= inc; }

private:
    std::vector<double> capacity_;
    std::vector<double> demand_;
};

// Congestion-penalized edge weight, length/(1 - p). Excluding saturated edges
// from the search keeps every weight finite.
double edge_weight(coord_t length, const EdgeState& state, int layer);

// Demand increment per routed net: 1.0 normally, 1.5 when edge placement
// error widening is modeled.
inline double demand_increment(bool epe_mode) { return epe_mode ? 1.5 : 1.0; }

}  // namespace hgr
