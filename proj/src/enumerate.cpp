#include "flatpart/enumerate.hpp"

#include <stdexcept>
#include <string>

namespace flatpart {

std::vector<SetPartition> gen_set_partitions(int n) {
    std::vector<SetPartition> out;
    for_each_set_partition(n, [&](const SetPartition& p) { out.push_back(p); });
    return out;
}

std::vector<Permutation> gen_flattened_filter(int n, int oracle_bound, bool force) {
    if (n < 1) throw std::invalid_argument("gen_flattened_filter: n must be >= 1");
    if (n > kMaxOracleBound)
        throw ResourceLimitError("filter oracle cannot scan " + std::to_string(n) +
                                 "! words (hard cap n = " + std::to_string(kMaxOracleBound) + ")");
    if (n > oracle_bound && !force)
        throw InfeasibleError("filter oracle refuses n = " + std::to_string(n) +
                              " above its bound " + std::to_string(oracle_bound) +
                              " (use force to override)");
    std::vector<Permutation> out;
    for_each_flattened_filter(n, [&](const std::vector<int>& w) {
        out.push_back(Permutation::unchecked(w));
    });
    return out;
}

std::vector<Permutation> gen_flattened_bijective(int n) {
    if (n < 1) throw std::invalid_argument("gen_flattened_bijective: n must be >= 1");
    if (n > kMaxBijectiveBound)
        throw ResourceLimitError("partition-image generator capped at n = " +
                                 std::to_string(kMaxBijectiveBound));
    std::vector<Permutation> out;
    for_each_flattened_bijective(n, [&](const std::vector<int>& w) {
        out.push_back(Permutation::unchecked(w));
    });
    return out;
}

namespace {

int word_run_count(const std::vector<int>& w) {
    int runs = 1;
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i] < w[i - 1]) ++runs;
    return runs;
}

CountTriangle count_by_runs(int n_max, int s, int oracle_bound, const std::string& method) {
    if (n_max < 1) throw std::invalid_argument("triangle: n_max must be >= 1");
    if (n_max > kMaxBijectiveBound)
        throw ResourceLimitError("brute-force triangle capped at n = " +
                                 std::to_string(kMaxBijectiveBound));
    CountTriangle t(method, s);
    for (int n = 1; n <= n_max; ++n) {
        t.ensure_row(n);
        std::vector<Integer> row(n + 1);
        for_each_flattened_bijective(n, [&](const std::vector<int>& w) {
            if (s == 1 || s_run_property(w, s)) row[word_run_count(w) - 1] += 1;
        });
        for (int k = 1; k <= n; ++k)
            if (row[k - 1] != 0) t.set(n, k, row[k - 1]);

        if (n <= oracle_bound && n <= kMaxOracleBound) {
            std::vector<Integer> check(n + 1);
            for_each_flattened_filter(n, [&](const std::vector<int>& w) {
                if (s == 1 || s_run_property(w, s)) check[word_run_count(w) - 1] += 1;
            });
            if (check != row)
                throw IntegrityError("generator cross-check failed at n = " + std::to_string(n));
        }
    }
    t.trim();
    return t;
}

}  // namespace

CountTriangle count_triangle_bruteforce(int n_max, int oracle_bound) {
    return count_by_runs(n_max, 1, oracle_bound, "brute");
}

bool s_run_property(const std::vector<int>& word, int s) {
    if (s < 1) throw std::invalid_argument("s_run_property: s must be >= 1");
    const int n = static_cast<int>(word.size());
    if (n < s) return false;
    if (word[0] != 1) return false;
    if (s == 1) return true;
    std::vector<int> pos(s + 1, -1);
    for (int i = 0; i < n; ++i)
        if (word[i] <= s) pos[word[i]] = i;
    for (int v = 2; v <= s; ++v) {
        const int i = pos[v];
        if (i <= 0 || word[i - 1] < v) return false;  // v must start a run
    }
    return true;
}

CountTriangle count_s_run_bruteforce(int n_max, int s, int oracle_bound) {
    if (s < 1) throw std::invalid_argument("count_s_run_bruteforce: s must be >= 1");
    return count_by_runs(n_max, s, oracle_bound, "brute");
}

FlattenedClass classify_ckl(const Permutation& p) {
    const int n = p.size();
    if (n < 2) throw std::invalid_argument("classify_ckl: need n >= 2");
    if (!is_flattened(p)) throw std::invalid_argument("classify_ckl: input is not flattened");

    int pos = -1;
    for (int i = 0; i < n; ++i)
        if (p[i] == n) pos = i;

    FlattenedClass c{};
    c.kl = (pos == n - 1 || p[pos - 1] > p[pos + 1]) ? KLClass::K : KLClass::L;
    // pos >= 1 always: a flattened word of length >= 2 starts with 1 != n.
    c.in_c = n >= 3 && p[1] > p[2];
    return c;
}

}  // namespace flatpart
