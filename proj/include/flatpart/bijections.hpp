#pragma once

// Constructive bijections: the two-element-first-run class onto the
// ascending-neighbor class (within fixed n and run count), and set
// partitions of [n] onto flattened partitions over [n+1].

#include <vector>

#include "flatpart/permutation.hpp"
#include "flatpart/set_partition.hpp"

namespace flatpart {

// Input: flattened word 1 X 2 ... whose first run is exactly {1, X}.
// Deletes 1 and X, standardizes the rest, re-inflates into [n] minus the
// two values to re-insert, and places the pair (n, X-1) immediately after
// the rightmost element smaller than X-1 (at the front if none exists).
// The image is flattened with the same number of runs and carries n
// between an ascending neighbor pair. Throws std::invalid_argument when
// the first run does not have exactly two elements.
Permutation cl_forward(const Permutation& p);

// Inverse map: requires the maximal value n to sit between ascending
// neighbors; X is the value following n. Deletes n and X, standardizes,
// shifts values >= X+1 up by one and prepends the pair (1, X+1).
Permutation cl_inverse(const Permutation& q);

// Rotates each block so its minimum moves to the end, concatenates blocks
// in order of minima, adds one to every value and prepends 1. The image
// is a flattened partition over [n+1]; the empty partition maps to "1".
Permutation partition_to_flattened(const SetPartition& p);

// Marks after each right-to-left minimum, drops the leading 1, subtracts
// one from every value and re-sorts each recovered block ascending.
// Throws std::invalid_argument on non-flattened input.
SetPartition flattened_to_partition(const Permutation& s);

// All words obtained by appending n = |p|+1 at the end of one run of p;
// one word per run, in run order. Every image keeps the run count of p.
std::vector<Permutation> k_set_construction(const Permutation& p);

}  // namespace flatpart
