#include "flatpart/bijections.hpp"

#include <algorithm>
#include <stdexcept>

namespace flatpart {

namespace {

// Positions 0..n-1 of `p` excluding `skip0` and `skip1`, standardized.
std::vector<int> standardized_remainder(const Permutation& p, int skip0, int skip1) {
    std::vector<int> rest;
    rest.reserve(p.size() - 2);
    for (int i = 0; i < p.size(); ++i)
        if (i != skip0 && i != skip1) rest.push_back(p[i]);
    return standardize(rest).word();
}

}  // namespace

Permutation cl_forward(const Permutation& p) {
    const int n = p.size();
    if (!is_flattened(p)) throw std::invalid_argument("cl_forward: input is not flattened");
    if (n < 3 || p[0] != 1 || p[1] <= p[2])
        throw std::invalid_argument("cl_forward: first run must have exactly two elements");
    const int x = p[1];

    std::vector<int> tau = standardized_remainder(p, 0, 1);
    // Values of the image other than the inserted pair live in [n-1]\{x-1}.
    for (int& t : tau)
        if (t >= x - 1) ++t;

    int insert_after = -1;  // front if no element smaller than x-1 exists
    for (int i = 0; i < static_cast<int>(tau.size()); ++i)
        if (tau[i] < x - 1) insert_after = i;

    std::vector<int> out;
    out.reserve(n);
    out.insert(out.end(), tau.begin(), tau.begin() + (insert_after + 1));
    out.push_back(n);
    out.push_back(x - 1);
    out.insert(out.end(), tau.begin() + (insert_after + 1), tau.end());
    return Permutation::unchecked(std::move(out));
}

Permutation cl_inverse(const Permutation& q) {
    const int n = q.size();
    if (!is_flattened(q)) throw std::invalid_argument("cl_inverse: input is not flattened");
    int pos = -1;
    for (int i = 0; i < n; ++i)
        if (q[i] == n) pos = i;
    if (pos < 1 || pos + 1 >= n || q[pos - 1] >= q[pos + 1])
        throw std::invalid_argument(
            "cl_inverse: maximal value must sit between ascending neighbors");
    const int x = q[pos + 1];

    std::vector<int> tau = standardized_remainder(q, pos, pos + 1);
    // Remaining values of the preimage live in [n] minus {1, x+1}.
    for (int& t : tau) t = (t + 1 < x + 1) ? t + 1 : t + 2;

    std::vector<int> out;
    out.reserve(n);
    out.push_back(1);
    out.push_back(x + 1);
    out.insert(out.end(), tau.begin(), tau.end());
    return Permutation::unchecked(std::move(out));
}

Permutation partition_to_flattened(const SetPartition& p) {
    std::vector<int> word;
    word.reserve(p.ground_size() + 1);
    word.push_back(1);
    for (const auto& block : p.blocks) {
        for (std::size_t i = 1; i < block.size(); ++i) word.push_back(block[i] + 1);
        word.push_back(block.front() + 1);
    }
    return Permutation::unchecked(std::move(word));
}

SetPartition flattened_to_partition(const Permutation& s) {
    if (!is_flattened(s))
        throw std::invalid_argument("flattened_to_partition: input is not flattened");
    SetPartition p;
    if (s.empty()) return p;

    // A mark goes after every right-to-left minimum; the first segment is
    // always the single value 1 and is dropped.
    const int n = s.size();
    std::vector<char> is_min(n, 0);
    int running_min = n + 1;
    for (int i = n - 1; i >= 0; --i)
        if (s[i] < running_min) {
            running_min = s[i];
            is_min[i] = 1;
        }

    std::vector<int> block;
    for (int i = 1; i < n; ++i) {
        block.push_back(s[i] - 1);
        if (is_min[i]) {
            std::sort(block.begin(), block.end());
            p.blocks.push_back(std::move(block));
            block.clear();
        }
    }
    // Blocks emerge ordered by minimum: each right-to-left minimum is
    // smaller than everything after it.
    return p;
}

std::vector<Permutation> k_set_construction(const Permutation& p) {
    const RunDecomposition rd = run_decompose(p);
    const int n = p.size() + 1;
    std::vector<Permutation> out;
    out.reserve(rd.count());
    int end = 0;  // position one past the current run
    for (const auto& run : rd.runs) {
        end += static_cast<int>(run.size());
        std::vector<int> word = p.word();
        word.insert(word.begin() + end, n);
        out.push_back(Permutation::unchecked(std::move(word)));
    }
    return out;
}

}  // namespace flatpart
