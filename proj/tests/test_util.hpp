#pragma once

#include <algorithm>
#include <climits>
#include <cstdint>
#include <utility>
#include <vector>

#include "minbound/generators.hpp"
#include "minbound/graph.hpp"
#include "minbound/rng.hpp"

// Transparent reimplementations the library is cross-checked against.
// Written for clarity over speed: literal subset scans, plain recursion,
// textbook recurrences.
namespace testutil {

inline minbound::Graph from_edges(int n,
                                  const std::vector<minbound::Edge>& edges) {
    return minbound::Graph::build(n, edges);
}

inline bool independent_pairs(const minbound::Graph& g,
                              const std::vector<int>& set) {
    for (std::size_t a = 0; a < set.size(); ++a)
        for (std::size_t b = a + 1; b < set.size(); ++b)
            if (g.has_edge(set[a], set[b])) return false;
    return true;
}

// independence number by scanning every vertex subset
inline int alpha_brute(const minbound::Graph& g) {
    const int n = g.vertex_count();
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> members;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) members.push_back(v);
        if (independent_pairs(g, members))
            best = std::max(best, static_cast<int>(members.size()));
    }
    return best;
}

// every maximum independent set, in sequence-lexicographic order
inline std::vector<std::vector<int>> max_sets_brute(const minbound::Graph& g) {
    const int n = g.vertex_count();
    const int alpha = alpha_brute(g);
    std::vector<std::vector<int>> sets;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> members;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) members.push_back(v);
        if (static_cast<int>(members.size()) == alpha &&
            independent_pairs(g, members))
            sets.push_back(members);
    }
    std::sort(sets.begin(), sets.end());
    return sets;
}

// smallest iteration count over every tie-break sequence, plain recursion
inline int k_min_brute(const minbound::Graph& g) {
    if (g.vertex_count() == 0) return 0;
    int best = INT_MAX;
    for (int v : g.min_degree_vertices()) {
        auto [rest, info] = g.delete_closed_neighborhood(v);
        (void)info;
        best = std::min(best, 1 + k_min_brute(rest));
    }
    return best;
}

// labeled connected simple graph counts from the subtraction recurrence:
// conn[n] = 2^C(n,2) - sum_k C(n-1,k-1) * conn[k] * 2^C(n-k,2), where k is
// the size of the component containing vertex 0
inline std::vector<long long> connected_counts(int max_n) {
    auto choose = [](int n, int k) {
        long long r = 1;
        for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
        return r;
    };
    auto total = [](int n) { return 1LL << (n * (n - 1) / 2); };
    std::vector<long long> conn(max_n + 1, 0);
    for (int n = 1; n <= max_n; ++n) {
        conn[n] = total(n);
        for (int k = 1; k < n; ++k)
            conn[n] -= choose(n - 1, k - 1) * conn[k] * total(n - k);
    }
    return conn;
}

// connected G(n,m) with n in [2, max_n] and m uniform over the valid range
inline minbound::Graph random_connected(minbound::SplitMix64& rng, int max_n) {
    const int n =
        2 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(max_n - 1)));
    const std::int64_t max_m = static_cast<std::int64_t>(n) * (n - 1) / 2;
    const std::int64_t m =
        (n - 1) + static_cast<std::int64_t>(rng.next_below(max_m - (n - 1) + 1));
    return minbound::gen_gnm_connected(n, m, rng.next());
}

}  // namespace testutil
