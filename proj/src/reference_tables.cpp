#include "flatpart/reference_tables.hpp"

namespace flatpart {

namespace {

// first_k gives the column the printed table starts at; earlier columns
// are zero by definition of the refinement and are stored as such.
CountTriangle make(int s, int first_n, int first_k,
                   const std::vector<std::vector<long long>>& rows) {
    CountTriangle t("reference", s);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const int n = first_n + static_cast<int>(i);
        t.ensure_row(n);
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            if (rows[i][j] != 0) t.set(n, first_k + static_cast<int>(j), rows[i][j]);
    }
    return t;
}

}  // namespace

const ReferenceTable& reference_table1() {
    static const ReferenceTable table = {
        "table1",
        "printed run-count triangle, rows 1..6, v1",
        make(1, 1, 1,
             {{1}, {1}, {1, 1}, {1, 4, 0}, {1, 11, 3, 0}, {1, 26, 25, 0, 0}}),
    };
    return table;
}

const ReferenceTable& reference_table2() {
    static const ReferenceTable table = {
        "table2",
        "printed two-start refinement, rows 2..7, v1",
        make(2, 2, 2,
             {{0}, {1, 0}, {3, 0}, {7, 3, 0}, {15, 22, 0}, {31, 106, 14, 0}}),
    };
    return table;
}

const ReferenceTable& reference_table3() {
    static const ReferenceTable table = {
        "table3",
        "printed three-start refinement, rows 4..8, v1",
        make(3, 4, 3, {{0}, {2, 0}, {12, 0}, {50, 12, 0}, {180, 139, 0}}),
    };
    return table;
}

}  // namespace flatpart
