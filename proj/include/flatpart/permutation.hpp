#pragma once

// Permutations as words over [n], their run decompositions and the
// statistics the rest of the library is built on.

#include <vector>

namespace flatpart {

// A word sigma(1)..sigma(n) containing each value 1..n exactly once.
// n = 0 is the empty permutation.
class Permutation {
public:
    Permutation() = default;

    // Validates that `word` is a rearrangement of {1..n}; throws
    // std::invalid_argument otherwise.
    static Permutation from_word(std::vector<int> word);

    // Trusts the caller; used by generators that construct valid words.
    static Permutation unchecked(std::vector<int> word);

    static Permutation identity(int n);

    int size() const { return static_cast<int>(word_.size()); }
    bool empty() const { return word_.empty(); }
    int operator[](int pos) const { return word_[pos]; }  // 0-based position
    const std::vector<int>& word() const { return word_; }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation& a, const Permutation& b) {
        return a.word_ <=> b.word_;
    }

private:
    std::vector<int> word_;
};

// Maximal ascending segments. Their concatenation is the source word; a
// final element that is neither ascent nor descent closes the last run.
struct RunDecomposition {
    std::vector<std::vector<int>> runs;

    int count() const { return static_cast<int>(runs.size()); }
    std::vector<int> starts() const;  // first value of each run
};

// Empty input yields the defined error value: a decomposition with no runs.
RunDecomposition run_decompose(const Permutation& p);

int descent_count(const Permutation& p);

// Number of runs = 1 + number of descents, without building segments.
int run_count(const Permutation& p);

// True iff the run start values are strictly increasing. Implies the word
// starts with 1. The empty word is vacuously flattened.
bool is_flattened(const Permutation& p);
bool is_flattened_word(const std::vector<int>& word);

// Values sigma(i) smaller than everything to their right, in position
// order; the last element is always one of them.
std::vector<int> right_to_left_minima(const Permutation& p);

// Order-isomorphic word over [len(w)]: the i-th smallest input value maps
// to i. Throws std::invalid_argument on duplicates.
Permutation standardize(const std::vector<int>& w);

}  // namespace flatpart
