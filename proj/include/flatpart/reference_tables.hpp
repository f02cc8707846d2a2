#pragma once

// Published reference values for the run-count triangles, stored exactly
// as printed in the source tables. They are data under test: the
// discrepancy report compares them against computed values and lists the
// deltas; the stored numbers are never edited to match.

#include <string>

#include "flatpart/triangle.hpp"

namespace flatpart {

struct ReferenceTable {
    std::string id;          // stable label used in reports ("table1", ...)
    std::string provenance;  // version marker for the stored data
    CountTriangle values;
};

const ReferenceTable& reference_table1();  // run counts, rows 1..6
const ReferenceTable& reference_table2();  // two-start refinement, rows 2..7
const ReferenceTable& reference_table3();  // three-start refinement, rows 4..8

}  // namespace flatpart
