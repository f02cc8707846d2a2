#include "flatpart/triangle.hpp"

#include <algorithm>
#include <stdexcept>

namespace flatpart {

const Integer CountTriangle::zero_ = 0;

void CountTriangle::set(int n, int k, Integer v) {
    if (k < 1) throw std::invalid_argument("triangle: k must be >= 1");
    auto& row = rows_[n];
    if (static_cast<int>(row.size()) < k) row.resize(k);
    row[k - 1] = std::move(v);
}

const Integer& CountTriangle::value(int n, int k) const {
    auto it = rows_.find(n);
    if (it == rows_.end() || k < 1 || k > static_cast<int>(it->second.size())) return zero_;
    return it->second[k - 1];
}

int CountTriangle::row_length(int n) const {
    auto it = rows_.find(n);
    return it == rows_.end() ? 0 : static_cast<int>(it->second.size());
}

int CountTriangle::max_nonzero_k(int n) const {
    auto it = rows_.find(n);
    if (it == rows_.end()) return 0;
    for (int k = static_cast<int>(it->second.size()); k >= 1; --k)
        if (it->second[k - 1] != 0) return k;
    return 0;
}

std::vector<int> CountTriangle::row_indices() const {
    std::vector<int> out;
    out.reserve(rows_.size());
    for (const auto& [n, row] : rows_) out.push_back(n);
    return out;
}

Integer CountTriangle::row_sum(int n) const {
    Integer sum = 0;
    auto it = rows_.find(n);
    if (it != rows_.end())
        for (const Integer& v : it->second) sum += v;
    return sum;
}

void CountTriangle::trim() {
    for (auto& [n, row] : rows_)
        while (!row.empty() && row.back() == 0) row.pop_back();
}

bool triangles_agree(const CountTriangle& a, const CountTriangle& b) {
    for (int n : a.row_indices()) {
        if (!b.covers(n)) continue;
        const int len = std::max(a.row_length(n), b.row_length(n));
        for (int k = 1; k <= len; ++k)
            if (a.value(n, k) != b.value(n, k)) return false;
    }
    return true;
}

}  // namespace flatpart
