#pragma once

#include <vector>

#include "minbound/graph.hpp"

namespace minbound {

enum class AlphaMethod { enumeration, branch_and_bound };

struct AlphaResult {
    int alpha = 0;
    std::vector<int> witness;  // independent, |witness| == alpha, sorted
    AlphaMethod method = AlphaMethod::enumeration;
};

// Transparent oracle: checks all 2^n subsets with bit-parallel adjacency
// masks. Witness is the lexicographically smallest maximum set. n <= 24.
AlphaResult alpha_enumeration(const Graph& g);

// Same scan split across OpenMP threads with a deterministic merge; agrees
// with alpha_enumeration bit for bit. Kept separate so the serial version
// stays the trust anchor.
AlphaResult alpha_enumeration_parallel(const Graph& g);

// Exact alpha for larger graphs: branch on a maximum-degree vertex, prune on
// chosen + remaining <= best, fold in isolated/degree-1 vertices before
// branching. Deterministic witness.
AlphaResult alpha_branch_and_bound(const Graph& g);

// Every independent set of size exactly alpha, lexicographic order. n <= 20.
std::vector<std::vector<int>> all_maximum_independent_sets(const Graph& g);

}  // namespace minbound
