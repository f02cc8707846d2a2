#include "flatpart/integers.hpp"

namespace flatpart {

const Integer BinomialTable::zero_ = 0;

Integer binomial(long long n, long long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Integer result = 1;
    for (long long i = 0; i < k; ++i) {
        result *= n - i;
        result /= i + 1;  // exact: result is C(n, i+1) after this step
    }
    return result;
}

BinomialTable::BinomialTable(int n_max) {
    if (n_max < 0) n_max = 0;
    rows_.resize(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        rows_[n].resize(n + 1);
        rows_[n][0] = rows_[n][n] = 1;
        for (int k = 1; k < n; ++k) rows_[n][k] = rows_[n - 1][k - 1] + rows_[n - 1][k];
    }
}

const Integer& BinomialTable::at(int n, int k) const {
    if (n < 0 || n >= static_cast<int>(rows_.size()) || k < 0 || k > n) return zero_;
    return rows_[n][k];
}

Integer factorial(int n) {
    Integer result = 1;
    for (int i = 2; i <= n; ++i) result *= i;
    return result;
}

std::vector<Integer> bell_numbers(int n) {
    if (n < 0) return {};
    std::vector<Integer> bells;
    bells.reserve(n + 1);
    std::vector<Integer> row = {1};
    bells.push_back(1);
    for (int i = 1; i <= n; ++i) {
        std::vector<Integer> next;
        next.reserve(row.size() + 1);
        next.push_back(row.back());
        for (const Integer& v : row) next.push_back(next.back() + v);
        row = std::move(next);
        bells.push_back(row.front());
    }
    return bells;
}

Integer bell(int n) { return bell_numbers(n).back(); }

}  // namespace flatpart
