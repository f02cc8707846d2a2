#include "flatpart/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace flatpart {

Permutation Permutation::from_word(std::vector<int> word) {
    const int n = static_cast<int>(word.size());
    std::vector<char> seen(n + 1, 0);
    for (int v : word) {
        if (v < 1 || v > n || seen[v])
            throw std::invalid_argument("permutation word is not a rearrangement of 1.." +
                                        std::to_string(n));
        seen[v] = 1;
    }
    Permutation p;
    p.word_ = std::move(word);
    return p;
}

Permutation Permutation::unchecked(std::vector<int> word) {
    Permutation p;
    p.word_ = std::move(word);
    return p;
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return unchecked(std::move(w));
}

std::vector<int> RunDecomposition::starts() const {
    std::vector<int> out;
    out.reserve(runs.size());
    for (const auto& r : runs) out.push_back(r.front());
    return out;
}

RunDecomposition run_decompose(const Permutation& p) {
    RunDecomposition rd;
    if (p.empty()) return rd;
    std::vector<int> cur = {p[0]};
    for (int i = 1; i < p.size(); ++i) {
        if (p[i] > p[i - 1]) {
            cur.push_back(p[i]);
        } else {
            rd.runs.push_back(std::move(cur));
            cur = {p[i]};
        }
    }
    rd.runs.push_back(std::move(cur));
    return rd;
}

int descent_count(const Permutation& p) {
    int d = 0;
    for (int i = 1; i < p.size(); ++i)
        if (p[i - 1] > p[i]) ++d;
    return d;
}

int run_count(const Permutation& p) { return p.empty() ? 0 : 1 + descent_count(p); }

bool is_flattened_word(const std::vector<int>& word) {
    if (word.empty()) return true;
    int last_start = word[0];
    for (std::size_t i = 1; i < word.size(); ++i) {
        if (word[i] < word[i - 1]) {  // descent: a new run starts here
            if (word[i] <= last_start) return false;
            last_start = word[i];
        }
    }
    return true;
}

bool is_flattened(const Permutation& p) { return is_flattened_word(p.word()); }

std::vector<int> right_to_left_minima(const Permutation& p) {
    std::vector<int> out;
    int running_min = p.size() + 1;
    for (int i = p.size() - 1; i >= 0; --i) {
        if (p[i] < running_min) {
            running_min = p[i];
            out.push_back(p[i]);
        }
    }
    std::reverse(out.begin(), out.end());
    return out;
}

Permutation standardize(const std::vector<int>& w) {
    const int n = static_cast<int>(w.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return w[a] < w[b]; });
    for (int i = 1; i < n; ++i)
        if (w[order[i]] == w[order[i - 1]])
            throw std::invalid_argument("standardize: duplicate entries");
    std::vector<int> out(n);
    for (int rank = 0; rank < n; ++rank) out[order[rank]] = rank + 1;
    return Permutation::unchecked(std::move(out));
}

}  // namespace flatpart
