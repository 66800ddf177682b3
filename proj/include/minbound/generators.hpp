#pragma once

#include <cstdint>
#include <functional>

#include "minbound/graph.hpp"
#include "minbound/rng.hpp"

namespace minbound {

enum class NamedFamily { path, cycle, complete, complete_bipartite, star };

// Standard fixtures. Vertex numbering: path/cycle consecutive 0..n-1,
// bipartite sides [0,a) and [a,a+b), star center 0 with `leaves` leaves.
// complete_bipartite takes params {a,b}, star takes {leaves}, the rest {n}.
Graph gen_named(NamedFamily family, const std::vector<int>& params);

// Connected G(n,m): a uniform random spanning tree (random-walk
// construction on the complete graph), then m-(n-1) distinct extra edges.
// Requires n-1 <= m <= n(n-1)/2. Deterministic under seed.
Graph gen_gnm_connected(int n, std::int64_t m, std::uint64_t seed);

// G(n,p) resampled until connected, at most max_retries attempts.
Graph gen_gnp_connected(int n, double p, std::uint64_t seed, int max_retries);

// Every labeled simple connected graph on n <= 7 vertices, as bitmasks over
// the C(n,2) vertex pairs in lexicographic order ((0,1),(0,2),...,(n-2,n-1)).
std::vector<std::uint32_t> connected_edge_masks(int n);

Graph graph_from_edge_mask(int n, std::uint32_t mask);

void enumerate_connected_graphs(
    int n, const std::function<void(const Graph&, std::uint32_t mask)>& fn);

}  // namespace minbound
