#pragma once

// The full cross-validation battery. Structural invariants (recurrence
// agreement, row sums, bijection round trips, cardinality theorems,
// series extraction) must all hold; disagreements with the stored
// reference tables are findings reported alongside, never failures. The
// report is a pure function of the options: two runs produce identical
// bytes.

#include <iosfwd>

namespace flatpart {

struct VerifyOptions {
    int n_tri = 15;        // recurrence / series agreement depth
    int n_brute = 12;      // partition-image counting depth
    int oracle_bound = 9;  // filter-oracle depth
    int n_bij = 10;        // partition bijection depth
    int n_ckl = 9;         // exhaustive classification depth
    int s_max = 3;

    static VerifyOptions quick();
};

struct VerifyResult {
    int passed = 0;
    int failed = 0;
    bool ok() const { return failed == 0; }
};

VerifyResult run_verify(const VerifyOptions& opt, std::ostream& out);

}  // namespace flatpart
