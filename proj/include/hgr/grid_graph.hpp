#pragma once

#include <vector>

#include "hgr/edge_state.hpp"
#include "hgr/floorplan.hpp"
#include "hgr/geom.hpp"
#include "hgr/layers.hpp"

namespace hgr {

struct Bin {
    int index = -1;
    int row = -1;
    int col = -1;
    Rect rect;
    Point center;
};

enum class GridSide : std::uint8_t { West = 0, East = 1, South = 2, North = 3 };

struct GridEdge {
    int index = -1;
    int bin_a = -1;  // lower (row, col) bin
    int bin_b = -1;
    Orientation orient = Orientation::Horizontal;  // direction of travel
    Segment boundary;                              // shared side of the two bins
    coord_t length = 0;                            // center-to-center distance
    double base_capacity = 0.0;                    // bounding-box crossing count
    int max_reserved = 0;  // highest reserved_up_to among blocks under the boundary
    EdgeState state;
};

// m-by-m bin graph for over-the-block routing. The bin count depends only on
// the number of blocks, never on the floorplan topology.
struct GridGraph {
    int m = 0;
    Rect die;
    std::vector<Bin> bins;
    std::vector<GridEdge> edges;

    int vertex_count() const { return static_cast<int>(bins.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }

    int bin_index(int row, int col) const { return row * m + col; }
    const Bin& bin(int row, int col) const { return bins[bin_index(row, col)]; }

    // Containing bin; points on a shared border resolve to the lower
    // (row, col) bin.
    int bin_at(Point p) const;

    // Edge on the given side of a bin, or -1 on the die boundary.
    int edge_at(int bin, GridSide side) const;
    int other_bin(int edge, int bin) const {
        const GridEdge& e = edges[edge];
        return e.bin_a == bin ? e.bin_b : e.bin_a;
    }

    std::vector<std::vector<int>> incident;  // bin -> edge indices
};

// m = ceil(sqrt(2n - 2)), at least 1.
int grid_dimension(int block_count);

GridGraph build_grid_graph(int m, const Rect& die, const LayerConfig& layers);

enum class GridCapMode : std::uint8_t { Replicate, Divide };

// Base capacity per edge = number of nets whose bounding box touches the
// edge's shared boundary, distributed over the direction-compatible
// over-the-block layers that clear every block below the boundary.
void compute_grid_capacities(GridGraph& g, const Floorplan& fp, const LayerConfig& layers,
                             GridCapMode mode = GridCapMode::Replicate);

}  // namespace hgr
