#pragma once

// Exact arithmetic helpers. All counting paths use arbitrary-precision
// integers; nothing here is allowed to overflow or round.

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace flatpart {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// C(n, k); 0 when k > n or either argument is negative.
Integer binomial(long long n, long long k);

// Pascal triangle rows 0..n_max, for the recurrence fills that need many
// coefficients of the same row.
class BinomialTable {
public:
    explicit BinomialTable(int n_max);
    const Integer& at(int n, int k) const;  // 0 outside the triangle
    int max_n() const { return static_cast<int>(rows_.size()) - 1; }

private:
    std::vector<std::vector<Integer>> rows_;
    static const Integer zero_;
};

Integer factorial(int n);

// Bell numbers B_0..B_n via the Bell triangle. Independent of any
// flattened-partition code so row-sum checks against it are not circular.
std::vector<Integer> bell_numbers(int n);
Integer bell(int n);

}  // namespace flatpart
