#pragma once

// Set partitions of [n] in canonical order: blocks sorted by minimum
// element, values ascending within each block.

#include <vector>

namespace flatpart {

struct SetPartition {
    std::vector<std::vector<int>> blocks;

    int block_count() const { return static_cast<int>(blocks.size()); }
    int ground_size() const;

    // Sorts blocks ascending and orders them by minimum; throws
    // std::invalid_argument unless the blocks are disjoint, nonempty and
    // cover [n] exactly.
    static SetPartition from_blocks(std::vector<std::vector<int>> blocks);

    friend bool operator==(const SetPartition&, const SetPartition&) = default;
    friend auto operator<=>(const SetPartition& a, const SetPartition& b) {
        return a.blocks <=> b.blocks;
    }
};

// Number of blocks with at least two elements.
int blocks_gt1(const SetPartition& p);

}  // namespace flatpart
