#pragma once

#include <string>
#include <vector>

#include "hgr/geom.hpp"

namespace hgr {

enum class BlockKind : std::uint8_t { HardMacro, SoftBlock };

struct Block {
    int index = -1;
    std::string name;
    Rect outline;
    BlockKind kind = BlockKind::SoftBlock;
    // Layers 1..reserved_up_to are occupied by the block's internal routing;
    // over-the-block wires must sit strictly above it.
    int reserved_up_to = 2;
};

struct Pin {
    int net = -1;
    int block = -1;
    Point loc;
    int layer = 1;  // pins live on layer 1 or 2
};

struct Net {
    int index = -1;
    std::string name;
    std::vector<Pin> pins;

    int degree() const { return static_cast<int>(pins.size()); }
};

struct Floorplan {
    Rect die;
    std::vector<Block> blocks;
    std::vector<Net> nets;

    int block_count() const { return static_cast<int>(blocks.size()); }
};

// Arm directions of a junction, as a bitmask.
enum ArmDir : std::uint8_t {
    ArmWest = 1,
    ArmEast = 2,
    ArmSouth = 4,
    ArmNorth = 8,
};

struct TJunction {
    int index = -1;
    Point loc;
    std::uint8_t arms = 0;  // exactly 3 bits set

    int arm_count() const;
};

struct MosaicReport {
    coord_t coverage_gap = 0;                      // die area minus summed block area
    std::vector<std::pair<int, int>> overlaps;     // block index pairs
    std::vector<Point> cross_points;               // 4-way wall crossings
    std::vector<int> blocks_outside_die;           // block indices
    std::vector<std::pair<int, int>> pin_violations;  // (net, pin position in net)

    bool ok() const {
        return coverage_gap == 0 && overlaps.empty() && cross_points.empty() &&
               blocks_outside_die.empty() && pin_violations.empty();
    }
    std::string summary() const;
};

MosaicReport validate_mosaic(const Floorplan& fp);

// All interior points where exactly three wall segments meet, sorted by
// (x, y). A valid mosaic with n blocks has exactly 2n-2 of them.
// Throws NonMosaicFloorplan / DegenerateCross when validation fails.
std::vector<TJunction> extract_junctions(const Floorplan& fp);

coord_t hpwl(const Net& net);

enum class NetOrder : std::uint8_t { Ascending, Descending };

// Permutation of net indices, stably sorted by (degree, hpwl), ties kept in
// input order.
std::vector<int> order_nets(const std::vector<Net>& nets,
                            NetOrder order = NetOrder::Ascending);

}  // namespace hgr
