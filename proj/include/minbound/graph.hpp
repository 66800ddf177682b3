#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "minbound/errors.hpp"

namespace minbound {

using VertexId = int;
using Edge = std::pair<int, int>;

class Graph;

// Result of removing a closed neighborhood. Survivors are relabeled densely
// and order-preservingly; both directions of the relabeling are kept so
// traces can always report original ids.
struct DeletionResult {
    std::vector<int> removed_vertices;  // sorted, original ids
    std::int64_t removed_edges = 0;     // edges with >= 1 endpoint removed
    std::vector<int> new_to_old;        // size = remaining.vertex_count()
    std::vector<int> old_to_new;        // size = old n, -1 for removed
    // remaining graph is returned alongside (see Graph::delete_closed_neighborhood)
};

// Immutable undirected simple graph. Neighbor lists are sorted ascending,
// hold no duplicates and no self-loops, and are symmetric. Safe to share
// across threads once built.
class Graph {
public:
    Graph() = default;

    // Collapses duplicate input edges; rejects self-loops and out-of-range
    // endpoints.
    static Graph build(int n, const std::vector<Edge>& edges);

    int vertex_count() const { return n_; }
    std::int64_t edge_count() const { return m_; }

    int degree(int v) const {
        check_vertex(v);
        return static_cast<int>(adj_[v].size());
    }

    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    bool has_edge(int u, int v) const;

    int min_degree() const;                      // throws EmptyGraphError on n=0
    std::vector<int> min_degree_vertices() const;  // ascending

    // Induced subgraph on V \ ({v} u N(v)) plus the removal bookkeeping.
    std::pair<Graph, DeletionResult> delete_closed_neighborhood(int v) const;

    // True iff n <= 1 or a traversal from vertex 0 reaches everything.
    // The empty graph counts as connected by convention.
    bool is_connected() const;

    // All edges as (u,v) with u < v, ascending.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.m_ == b.m_ && a.adj_ == b.adj_;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw VertexOutOfRangeError(v, n_);
    }

    int n_ = 0;
    std::int64_t m_ = 0;
    std::vector<std::vector<int>> adj_;
};

// No two vertices of `set` are adjacent in g.
bool is_independent_set(const Graph& g, const std::vector<int>& set);

}  // namespace minbound
