#pragma once

// Exact integer triangles T[n][k]. A row present in the map means the
// producing method covers that n, even if every entry is zero; absent
// cells inside a covered row read as zero. Keeping coverage explicit lets
// the discrepancy report compare sources only where both actually speak.

#include <map>
#include <string>
#include <vector>

#include "flatpart/integers.hpp"

namespace flatpart {

class CountTriangle {
public:
    CountTriangle() = default;
    CountTriangle(std::string method, int s) : method_(std::move(method)), s_(s) {}

    const std::string& method() const { return method_; }
    void set_method(std::string m) { method_ = std::move(m); }
    int s() const { return s_; }
    void set_s(int s) { s_ = s; }

    void ensure_row(int n) { rows_[n]; }
    void set(int n, int k, Integer v);
    const Integer& value(int n, int k) const;  // 0 outside stored cells
    bool covers(int n) const { return rows_.count(n) != 0; }
    int row_length(int n) const;  // stored length after trim, 0 if uncovered

    // Largest k with a nonzero entry in row n; 0 for an all-zero row.
    int max_nonzero_k(int n) const;

    std::vector<int> row_indices() const;
    Integer row_sum(int n) const;

    // Drops trailing zero entries of every row (canonical form).
    void trim();

    bool empty() const { return rows_.empty(); }

private:
    std::map<int, std::vector<Integer>> rows_;
    std::string method_;
    int s_ = 1;
    static const Integer zero_;
};

// Entrywise equality over the rows both triangles cover (missing = 0).
// Rows covered by only one side are ignored.
bool triangles_agree(const CountTriangle& a, const CountTriangle& b);

}  // namespace flatpart
