#include "minbound/graph.hpp"

#include <algorithm>

namespace minbound {

Graph Graph::build(int n, const std::vector<Edge>& edges) {
    if (n < 0) throw BadParamsError("vertex count must be nonnegative");
    std::vector<Edge> norm;
    norm.reserve(edges.size());
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n) throw VertexOutOfRangeError(u, n);
        if (v < 0 || v >= n) throw VertexOutOfRangeError(v, n);
        if (u == v) throw SelfLoopError(u);
        norm.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(norm.begin(), norm.end());
    norm.erase(std::unique(norm.begin(), norm.end()), norm.end());

    Graph g;
    g.n_ = n;
    g.m_ = static_cast<std::int64_t>(norm.size());
    g.adj_.resize(n);
    std::vector<int> deg(n, 0);
    for (const auto& [u, v] : norm) {
        ++deg[u];
        ++deg[v];
    }
    for (int v = 0; v < n; ++v) g.adj_[v].reserve(deg[v]);
    for (const auto& [u, v] : norm) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    // norm is sorted by (u,v), so adj_[u] is filled ascending for the u side;
    // the v side gets its entries in ascending u order as well.
    for (auto& list : g.adj_) std::sort(list.begin(), list.end());
    return g;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& list = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    int target = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(list.begin(), list.end(), target);
}

int Graph::min_degree() const {
    if (n_ == 0) throw EmptyGraphError();
    int best = n_;
    for (const auto& list : adj_)
        best = std::min(best, static_cast<int>(list.size()));
    return best;
}

std::vector<int> Graph::min_degree_vertices() const {
    int d = min_degree();
    std::vector<int> out;
    for (int v = 0; v < n_; ++v)
        if (static_cast<int>(adj_[v].size()) == d) out.push_back(v);
    return out;
}

std::pair<Graph, DeletionResult> Graph::delete_closed_neighborhood(int v) const {
    check_vertex(v);

    std::vector<char> removed(n_, 0);
    removed[v] = 1;
    for (int w : adj_[v]) removed[w] = 1;

    DeletionResult res;
    res.old_to_new.assign(n_, -1);
    for (int u = 0; u < n_; ++u) {
        if (removed[u]) {
            res.removed_vertices.push_back(u);
        } else {
            res.old_to_new[u] = static_cast<int>(res.new_to_old.size());
            res.new_to_old.push_back(u);
        }
    }

    Graph rest;
    rest.n_ = static_cast<int>(res.new_to_old.size());
    rest.adj_.resize(rest.n_);
    std::int64_t kept = 0;
    for (int nu = 0; nu < rest.n_; ++nu) {
        int old = res.new_to_old[nu];
        for (int w : adj_[old])
            if (!removed[w]) rest.adj_[nu].push_back(res.old_to_new[w]);
        kept += static_cast<std::int64_t>(rest.adj_[nu].size());
        // order-preserving relabel keeps each list sorted
    }
    rest.m_ = kept / 2;
    res.removed_edges = m_ - rest.m_;
    return {std::move(rest), std::move(res)};
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : adj_[u]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n_;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int w : adj_[u])
            if (u < w) out.emplace_back(u, w);
    return out;
}

bool is_independent_set(const Graph& g, const std::vector<int>& set) {
    for (std::size_t i = 0; i < set.size(); ++i)
        for (std::size_t j = i + 1; j < set.size(); ++j)
            if (set[i] == set[j] || g.has_edge(set[i], set[j])) return false;
    return true;
}

}  // namespace minbound
