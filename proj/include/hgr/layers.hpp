#pragma once

#include <cassert>

#include "hgr/geom.hpp"

namespace hgr {

// Reserved layer model: horizontal wires on odd layers, vertical on even.
// Layers 1..split form the boundary (staircase) group, split+1..max_layers the
// over-the-block (grid) group. split == max_layers disables the grid group
// entirely, which is the staircase-only operating mode.
struct LayerConfig {
    int max_layers = 8;
    int split = 2;

    bool valid() const {
        return max_layers >= 2 && max_layers % 2 == 0 && split >= 2 && split <= max_layers;
    }

    static bool is_horizontal(int layer) { return layer % 2 == 1; }
    static Orientation direction(int layer) {
        return is_horizontal(layer) ? Orientation::Horizontal : Orientation::Vertical;
    }
    static bool compatible(int layer, Orientation o) { return direction(layer) == o; }

    bool in_stair_group(int layer) const { return layer >= 1 && layer <= split; }
    bool in_grid_group(int layer) const { return layer > split && layer <= max_layers; }
    bool grid_group_empty() const { return split == max_layers; }

    // Lowest layer of the given group whose preferred direction matches,
    // or 0 when the group has no layer of that direction.
    int lowest_stair_layer(Orientation o) const {
        int l = o == Orientation::Horizontal ? 1 : 2;
        return l <= split ? l : 0;
    }
    int lowest_grid_layer(Orientation o) const {
        if (grid_group_empty()) return 0;
        int l = split + 1;
        if (!compatible(l, o)) ++l;
        return l <= max_layers ? l : 0;
    }
};

}  // namespace hgr
