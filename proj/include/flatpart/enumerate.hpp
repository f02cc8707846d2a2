#pragma once

// Brute-force generators and classifiers. The filter generator scans all
// n! words and is the independence oracle; the partition-image generator
// is the scalable path. Both yield deterministically: the filter in
// lexicographic word order, the image generator in lexicographic order of
// the restricted-growth encoding of the source partitions.

#include <algorithm>
#include <utility>
#include <vector>

#include "flatpart/bijections.hpp"
#include "flatpart/errors.hpp"
#include "flatpart/permutation.hpp"
#include "flatpart/set_partition.hpp"
#include "flatpart/triangle.hpp"

namespace flatpart {

inline constexpr int kDefaultOracleBound = 9;
inline constexpr int kMaxOracleBound = 12;      // beyond this the n! scan is hopeless
inline constexpr int kMaxBijectiveBound = 15;   // Bell(n-1) images

namespace detail {

template <typename Visit>
void rgs_rec(std::vector<int>& rgs, int i, int prefix_max, Visit& visit) {
    const int n = static_cast<int>(rgs.size());
    if (i == n) {
        SetPartition p;
        p.blocks.resize(1 + *std::max_element(rgs.begin(), rgs.end()));
        for (int j = 0; j < n; ++j) p.blocks[rgs[j]].push_back(j + 1);
        visit(std::as_const(p));
        return;
    }
    for (int v = 0; v <= prefix_max + 1; ++v) {
        rgs[i] = v;
        rgs_rec(rgs, i + 1, std::max(prefix_max, v), visit);
    }
}

}  // namespace detail

// Every set partition of [n] exactly once, lexicographic restricted-growth
// order. Blocks arrive canonical (first occurrence = block of value j
// starts at its minimum). n = 0 yields the single empty partition.
template <typename Visit>
void for_each_set_partition(int n, Visit&& visit) {
    if (n == 0) {
        SetPartition p;
        visit(std::as_const(p));
        return;
    }
    std::vector<int> rgs(n, 0);
    detail::rgs_rec(rgs, 1, 0, visit);
}

// Flattened partitions over [n] by filtering all n! words, lexicographic.
template <typename Visit>
void for_each_flattened_filter(int n, Visit&& visit) {
    if (n < 1) return;
    std::vector<int> word(n);
    for (int i = 0; i < n; ++i) word[i] = i + 1;
    do {
        if (is_flattened_word(word)) visit(std::as_const(word));
    } while (std::next_permutation(word.begin(), word.end()));
}

// Flattened partitions over [n] as images of the set partitions of [n-1].
template <typename Visit>
void for_each_flattened_bijective(int n, Visit&& visit) {
    if (n < 1) return;
    for_each_set_partition(n - 1, [&](const SetPartition& p) {
        visit(std::as_const(partition_to_flattened(p).word()));
    });
}

std::vector<SetPartition> gen_set_partitions(int n);

// Throws InfeasibleError (naming the bound) when n exceeds `oracle_bound`
// and `force` is unset; the hard cap kMaxOracleBound always applies.
std::vector<Permutation> gen_flattened_filter(int n, int oracle_bound = kDefaultOracleBound,
                                              bool force = false);

std::vector<Permutation> gen_flattened_bijective(int n);

// T[n][k] = number of flattened partitions over [n] with k runs, counted
// from the partition-image generator and recounted with the filter oracle
// for n <= oracle_bound (IntegrityError on any disagreement).
CountTriangle count_triangle_bruteforce(int n_max, int oracle_bound = kDefaultOracleBound);

// True iff the values 1..s each start a run of p (equivalently: the first
// s integers lie in s distinct runs). s = 1 holds for every flattened word.
bool s_run_property(const std::vector<int>& word, int s);

// Same counting as count_triangle_bruteforce restricted to words with the
// s-run property; s = 1 reproduces it exactly.
CountTriangle count_s_run_bruteforce(int n_max, int s, int oracle_bound = kDefaultOracleBound);

enum class KLClass { K, L };

// Two independent coordinates per word: K/L by what removing the maximum
// does to the run count, and a flag for membership in the two-element
// first-run class.
struct FlattenedClass {
    KLClass kl;
    bool in_c;
};

// Requires a flattened word with n >= 2; throws std::invalid_argument
// otherwise. K iff the maximal value n is last or sits between descending
// neighbors, L iff it sits between ascending neighbors; exactly one holds.
// in_c iff n >= 3 and the first run has exactly two elements.
FlattenedClass classify_ckl(const Permutation& p);

}  // namespace flatpart
