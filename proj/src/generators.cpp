#include "minbound/generators.hpp"

#include <algorithm>
#include <unordered_set>

namespace minbound {
namespace {

std::uint64_t pack_edge(int u, int v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

std::int64_t max_edges(int n) {
    return static_cast<std::int64_t>(n) * (n - 1) / 2;
}

}  // namespace

Graph gen_named(NamedFamily family, const std::vector<int>& params) {
    auto need = [&](std::size_t count) {
        if (params.size() != count)
            throw BadParamsError("wrong parameter count for named family");
    };
    std::vector<Edge> edges;
    switch (family) {
        case NamedFamily::path: {
            need(1);
            int n = params[0];
            if (n < 1) throw BadParamsError("path needs n >= 1");
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            return Graph::build(n, edges);
        }
        case NamedFamily::cycle: {
            need(1);
            int n = params[0];
            if (n < 3) throw BadParamsError("cycle needs n >= 3");
            for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
            edges.emplace_back(n - 1, 0);
            return Graph::build(n, edges);
        }
        case NamedFamily::complete: {
            need(1);
            int n = params[0];
            if (n < 1) throw BadParamsError("complete needs n >= 1");
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
            return Graph::build(n, edges);
        }
        case NamedFamily::complete_bipartite: {
            need(2);
            int a = params[0], b = params[1];
            if (a < 1 || b < 1) throw BadParamsError("bipartite needs a,b >= 1");
            for (int u = 0; u < a; ++u)
                for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
            return Graph::build(a + b, edges);
        }
        case NamedFamily::star: {
            need(1);
            int leaves = params[0];
            if (leaves < 0) throw BadParamsError("star needs leaves >= 0");
            for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
            return Graph::build(leaves + 1, edges);
        }
    }
    throw BadParamsError("unknown named family");
}

Graph gen_gnm_connected(int n, std::int64_t m, std::uint64_t seed) {
    if (n < 1) throw BadParamsError("gnm needs n >= 1");
    if (m < n - 1 || m > max_edges(n))
        throw BadParamsError("gnm needs n-1 <= m <= n(n-1)/2");

    SplitMix64 rng(seed);
    std::vector<Edge> edges;
    std::unordered_set<std::uint64_t> present;
    edges.reserve(static_cast<std::size_t>(m));

    // Aldous-Broder walk on the complete graph: first-entry edges form a
    // uniform spanning tree.
    if (n > 1) {
        std::vector<char> visited(n, 0);
        visited[0] = 1;
        int cur = 0, left = n - 1;
        while (left > 0) {
            int nxt = static_cast<int>(rng.next_below(n - 1));
            if (nxt >= cur) ++nxt;
            if (!visited[nxt]) {
                visited[nxt] = 1;
                --left;
                edges.emplace_back(cur, nxt);
                present.insert(pack_edge(cur, nxt));
            }
            cur = nxt;
        }
    }

    std::int64_t extra = m - (n - 1);
    if (extra > 0) {
        if (n <= 1024) {
            // Dense requests: pick a prefix of a partial Fisher-Yates shuffle
            // over the explicit non-tree pairs, so high densities never stall.
            std::vector<Edge> pool;
            pool.reserve(static_cast<std::size_t>(max_edges(n)));
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (!present.count(pack_edge(u, v))) pool.emplace_back(u, v);
            for (std::int64_t i = 0; i < extra; ++i) {
                std::size_t j = static_cast<std::size_t>(i) +
                                static_cast<std::size_t>(
                                    rng.next_below(pool.size() - i));
                std::swap(pool[i], pool[j]);
                edges.push_back(pool[i]);
            }
        } else {
            // Sparse at scale: rejection sampling, collisions are rare.
            std::int64_t added = 0;
            while (added < extra) {
                int u = static_cast<int>(rng.next_below(n));
                int v = static_cast<int>(rng.next_below(n));
                if (u == v) continue;
                auto key = pack_edge(u, v);
                if (present.count(key)) continue;
                present.insert(key);
                edges.emplace_back(u, v);
                ++added;
            }
        }
    }
    return Graph::build(n, edges);
}

Graph gen_gnp_connected(int n, double p, std::uint64_t seed, int max_retries) {
    if (n < 1) throw BadParamsError("gnp needs n >= 1");
    if (!(p >= 0.0 && p <= 1.0)) throw BadParamsError("gnp needs 0 <= p <= 1");
    if (max_retries < 1) throw BadParamsError("gnp needs max_retries >= 1");

    SplitMix64 rng(seed);
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        std::vector<Edge> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.next_unit() < p) edges.emplace_back(u, v);
        Graph g = Graph::build(n, edges);
        if (g.is_connected()) return g;
    }
    throw NotConnectedAfterRetriesError(max_retries);
}

std::vector<std::uint32_t> connected_edge_masks(int n) {
    if (n < 1 || n > 7) throw BadParamsError("exhaustive enumeration needs 1 <= n <= 7");
    int pairs = n * (n - 1) / 2;

    // Pair bit p covers (pu[p], pv[p]) in lexicographic order.
    std::vector<int> pu(pairs), pv(pairs);
    int p = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++p) {
            pu[p] = u;
            pv[p] = v;
        }

    std::vector<std::uint32_t> out;
    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
        unsigned adj[7] = {0, 0, 0, 0, 0, 0, 0};
        for (int b = 0; b < pairs; ++b)
            if (mask & (1u << b)) {
                adj[pu[b]] |= 1u << pv[b];
                adj[pv[b]] |= 1u << pu[b];
            }
        unsigned seen = 1u, frontier = 1u;
        while (frontier) {
            unsigned next = 0;
            for (unsigned f = frontier; f; f &= f - 1)
                next |= adj[__builtin_ctz(f)];
            frontier = next & ~seen;
            seen |= next;
        }
        if (seen == (1u << n) - 1u) out.push_back(mask);
    }
    return out;
}

Graph graph_from_edge_mask(int n, std::uint32_t mask) {
    if (n < 1 || n > 7) throw BadParamsError("edge masks cover 1 <= n <= 7");
    std::vector<Edge> edges;
    int b = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++b)
            if (mask & (1u << b)) edges.emplace_back(u, v);
    return Graph::build(n, edges);
}

void enumerate_connected_graphs(
    int n, const std::function<void(const Graph&, std::uint32_t)>& fn) {
    for (std::uint32_t mask : connected_edge_masks(n))
        fn(graph_from_edge_mask(n, mask), mask);
}

}  // namespace minbound
