#pragma once

// The run-count triangle by each of its recurrences, the maximal-run
// sequence, and the two s-run computations. The as-printed s-run relation
// and the layered variant are deliberately separate operations: when they
// disagree the difference is surfaced, never patched.

#include <vector>

#include "flatpart/integers.hpp"
#include "flatpart/triangle.hpp"

namespace flatpart {

// Base cases shared by all methods: T[n][1] = 1 for n >= 1, T[n][k] = 0
// for k >= n >= 2. Conventions at the triangle's edge, needed to evaluate
// the printed s-run relation when k = s: T[0][0] = 1, T[m][0] = 0 for
// m >= 1 (the source never defines the n = 0 row).

// T[n][k] = sum over m of (C(n-1, m) - 1) * T[m][k-1], m = 1..n-2.
CountTriangle f_by_eq1(int n_max);

// T[n][k] = k*T[n-1][k] + (n-2)*T[n-2][k-1].
CountTriangle f_by_two_term(int n_max);

// T[n+2][k] = T[n+1][k] + sum over i of C(n, i) * T[n+1-i][k-1], i = 1..n;
// splits on whether 1 and 2 share a run.
CountTriangle f_by_split(int n_max);

struct CorollaryViolation {
    int n, k;
    Integer lhs, rhs;
};

// Evaluates k*T[n][k] = sum over m of (C(n, m) - 1) * T[m][k-1] verbatim
// over the printed range 1 <= k < n <= n_max, with T[m][0] = 0. The k = 1
// instances fail by arithmetic (lhs 1, rhs an empty/zero sum) — a defect
// of the printed range, reported rather than silently skipped. The
// identity proper holds for every 2 <= k < n.
std::vector<CorollaryViolation> check_corollary_identity(const CountTriangle& f, int n_max);

// a_0..a_n computed three ways and required to agree:
//   recurrence  a_n = a_{n-2} + 1, a_0 = 0, a_1 = 1;
//   closed form (2n + (-1)^{n+1} + 1) / 4, division checked exact;
//   series expansion of 1/((1-x)^2(1+x)), whose coefficient n equals
//   a_{n+1} (the published form is offset by one; see ogf_matches_shifted).
struct MaxRunSequence {
    std::vector<int> values;

    int at(int n) const { return values[n]; }
    int max_n() const { return static_cast<int>(values.size()) - 1; }

    // True when the series coefficients matched a_{n+1} rather than a_n.
    bool ogf_matches_shifted = false;
};

MaxRunSequence max_runs(int n_max);

// Value of the printed s-run relation for T^(s)[n][k], verbatim:
//   T^(s)[n+s][k] = sum over i_1..i_s >= 1 of
//       C(n,i_1) C(n-i_1,i_2) ... C(n-sum_{j<s} i_j, i_s) * T[n-sum i_j][k-s].
// No correction is applied; `f` must cover rows up to n-s.
Integer f_s_paper_formula(int n, int k, int s, const CountTriangle& f);

// Triangle of printed-relation values, rows s+1..n_max (the relation only
// speaks for n > s; for s >= 2 an explicit all-zero row at n = s is kept
// since no word of length s can place 1..s in s distinct runs).
CountTriangle f_s_paper_triangle(int n_max, int s);

// Oracle-consistent layered variant: T^(1) = T, and for s >= 2
//   T^(s)[m][k] = sum over i >= 1 of C(m-s, i) * T^(s-1)[m-1-i][k-1]
// (the first run takes 1 plus i values above s; the rest standardizes to
// a word with the (s-1)-run property). Must be validated against the
// brute-force count before being trusted.
CountTriangle f_s_layered(int n_max, int s);

}  // namespace flatpart
