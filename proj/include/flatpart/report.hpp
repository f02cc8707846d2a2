#pragma once

// Cross-source discrepancy reporting: every cell where two sources with
// the same refinement level disagree, with all values and labels, in
// deterministic order. An empty report means full agreement.

#include <iosfwd>
#include <string>
#include <vector>

#include "flatpart/triangle.hpp"

namespace flatpart {

struct TriangleSource {
    std::string label;
    CountTriangle triangle;  // triangle.s() selects the comparison group
};

struct Finding {
    int s = 1;
    int n = 0;
    int k = 0;
    // One entry per source covering row n, in input order.
    std::vector<std::pair<std::string, Integer>> values;

    bool all_equal() const;
};

struct DiscrepancyReport {
    std::vector<Finding> findings;  // sorted by (s, n, k)
    bool empty() const { return findings.empty(); }
};

// Compares sources pairwise per refinement group. A cell is examined when
// at least two sources cover its row; values default to zero inside a
// covered row. Rows a source does not cover are never held against it.
DiscrepancyReport discrepancy_report(const std::vector<TriangleSource>& sources);

std::string render_report_text(const DiscrepancyReport& report);
void write_report_csv(std::ostream& out, const DiscrepancyReport& report);
void write_report_jsonl(std::ostream& out, const DiscrepancyReport& report);

}  // namespace flatpart
