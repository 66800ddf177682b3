#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "minbound/graph.hpp"

namespace minbound {

// How a run picks among the minimum-degree vertices of the remaining graph.
// lowest_index and random(seed) drive single runs; exhaustive is only
// meaningful as the full tie-break search in k_min_exhaustive.
enum class TieBreakKind { lowest_index, random, exhaustive };

struct TieBreakPolicy {
    TieBreakKind kind = TieBreakKind::lowest_index;
    std::uint64_t seed = 0;

    static TieBreakPolicy lowest() { return {TieBreakKind::lowest_index, 0}; }
    static TieBreakPolicy randomized(std::uint64_t seed) {
        return {TieBreakKind::random, seed};
    }
};

struct MinIteration {
    int chosen_vertex = -1;   // original id
    int chosen_degree = 0;    // its degree in the remaining graph = delta(G_j)
    std::vector<int> deleted_vertices;  // sorted original ids, size 1+degree
    std::int64_t edges_removed = 0;

    bool operator==(const MinIteration&) const = default;
};

struct MinTrace {
    std::vector<MinIteration> iterations;
    int k = 0;
    std::vector<int> selected_set;  // chosen vertices in selection order

    bool operator==(const MinTrace&) const = default;
};

// One greedy run: repeatedly pick a minimum-degree vertex per policy and
// delete its closed neighborhood. Bucket-queue implementation, linear-ish in
// n + m. Disconnected and empty inputs are fine.
MinTrace run_min(const Graph& g, const TieBreakPolicy& policy);

// Same contract, built directly on Graph::delete_closed_neighborhood with
// explicit relabeling. Transparent but quadratic; kept as the reference the
// fast runner is tested against.
MinTrace run_min_reference(const Graph& g, const TieBreakPolicy& policy);

struct KMinResult {
    int k = 0;
    MinTrace witness;
};

// Smallest k any tie-break sequence can reach, by branching on every
// minimum-degree choice with memoization on the surviving-vertex bitmask.
// Default budget 14 vertices (state space 2^n).
KMinResult k_min_exhaustive(const Graph& g, int vertex_budget = 14);

// Best k over `restarts` randomized runs; an upper estimate of the true
// minimum. Restart i uses derive_seed(seed, i); ties resolve to the lowest
// restart index, so the result is schedule-independent.
KMinResult k_min_multistart(const Graph& g, int restarts, std::uint64_t seed);

// Deterministic text block: one `j,chosen,degree,deleted,edges_removed` line
// per iteration plus a trailing `k=... selected=...` line.
std::string trace_to_text(const MinTrace& trace);

}  // namespace minbound
