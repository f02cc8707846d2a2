#include "flatpart/set_partition.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace flatpart {

int SetPartition::ground_size() const {
    int n = 0;
    for (const auto& b : blocks) n += static_cast<int>(b.size());
    return n;
}

SetPartition SetPartition::from_blocks(std::vector<std::vector<int>> blocks) {
    int n = 0;
    for (auto& b : blocks) {
        if (b.empty()) throw std::invalid_argument("set partition: empty block");
        std::sort(b.begin(), b.end());
        n += static_cast<int>(b.size());
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    std::vector<char> seen(n + 1, 0);
    for (const auto& b : blocks)
        for (int v : b) {
            if (v < 1 || v > n || seen[v])
                throw std::invalid_argument("set partition: blocks must cover 1.." +
                                            std::to_string(n) + " exactly once");
            seen[v] = 1;
        }
    SetPartition p;
    p.blocks = std::move(blocks);
    return p;
}

int blocks_gt1(const SetPartition& p) {
    int count = 0;
    for (const auto& b : p.blocks)
        if (b.size() > 1) ++count;
    return count;
}

}  // namespace flatpart
