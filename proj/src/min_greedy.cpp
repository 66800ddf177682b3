#include "minbound/min_greedy.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>
#include <unordered_map>

#include "minbound/rng.hpp"

namespace minbound {
namespace {

void check_runnable(const TieBreakPolicy& policy) {
    if (policy.kind == TieBreakKind::exhaustive)
        throw BadParamsError(
            "exhaustive tie-breaking is a search, not a run policy; use "
            "k_min_exhaustive");
}

}  // namespace

MinTrace run_min(const Graph& g, const TieBreakPolicy& policy) {
    check_runnable(policy);
    int n = g.vertex_count();
    MinTrace trace;
    if (n == 0) return trace;

    std::vector<int> deg(n);
    std::vector<char> alive(n, 1);
    // buckets[d] holds the alive vertices of current degree d, ordered by id
    std::vector<std::set<int>> buckets(n);
    for (int v = 0; v < n; ++v) {
        deg[v] = g.degree(v);
        buckets[deg[v]].insert(v);
    }

    SplitMix64 rng(policy.seed);
    int remaining = n;
    int min_deg = 0;
    while (remaining > 0) {
        while (buckets[min_deg].empty()) ++min_deg;
        const auto& bucket = buckets[min_deg];
        int v;
        if (policy.kind == TieBreakKind::lowest_index) {
            v = *bucket.begin();
        } else {
            auto idx = rng.next_below(bucket.size());
            v = *std::next(bucket.begin(), static_cast<std::ptrdiff_t>(idx));
        }

        MinIteration it;
        it.chosen_vertex = v;
        it.chosen_degree = deg[v];

        std::vector<int> doomed{v};
        for (int w : g.neighbors(v))
            if (alive[w]) doomed.push_back(w);

        // Kill one vertex at a time; its degree at kill time counts exactly
        // the not-yet-removed incident edges, so edges_removed sums each
        // removed edge once.
        for (int u : doomed) {
            buckets[deg[u]].erase(u);
            alive[u] = 0;
            --remaining;
            it.edges_removed += deg[u];
            for (int w : g.neighbors(u)) {
                if (alive[w]) {
                    buckets[deg[w]].erase(w);
                    --deg[w];
                    buckets[deg[w]].insert(w);
                }
            }
        }

        std::sort(doomed.begin(), doomed.end());
        it.deleted_vertices = std::move(doomed);
        trace.selected_set.push_back(v);
        trace.iterations.push_back(std::move(it));
        min_deg = 0;
    }
    trace.k = static_cast<int>(trace.iterations.size());
    return trace;
}

MinTrace run_min_reference(const Graph& g, const TieBreakPolicy& policy) {
    check_runnable(policy);
    MinTrace trace;
    Graph cur = g;
    std::vector<int> to_orig(g.vertex_count());
    for (std::size_t v = 0; v < to_orig.size(); ++v) to_orig[v] = static_cast<int>(v);

    SplitMix64 rng(policy.seed);
    while (cur.vertex_count() > 0) {
        auto candidates = cur.min_degree_vertices();
        int pick;
        if (policy.kind == TieBreakKind::lowest_index) {
            pick = candidates.front();
        } else {
            pick = candidates[rng.next_below(candidates.size())];
        }

        MinIteration it;
        it.chosen_vertex = to_orig[pick];
        it.chosen_degree = cur.degree(pick);

        auto [rest, del] = cur.delete_closed_neighborhood(pick);
        it.edges_removed = del.removed_edges;
        for (int old : del.removed_vertices) it.deleted_vertices.push_back(to_orig[old]);
        std::sort(it.deleted_vertices.begin(), it.deleted_vertices.end());

        std::vector<int> next_to_orig(rest.vertex_count());
        for (int nu = 0; nu < rest.vertex_count(); ++nu)
            next_to_orig[nu] = to_orig[del.new_to_old[nu]];
        to_orig = std::move(next_to_orig);
        cur = std::move(rest);

        trace.selected_set.push_back(it.chosen_vertex);
        trace.iterations.push_back(std::move(it));
    }
    trace.k = static_cast<int>(trace.iterations.size());
    return trace;
}

namespace {

// Exhaustive tie-break search on a surviving-vertex bitmask. States are
// capped by the vertex budget; the memo maps mask -> fewest iterations to
// empty it.
struct KMinSearch {
    int n;
    std::vector<std::uint32_t> closed;  // bit v | neighbor bits
    std::vector<std::uint32_t> adj;
    std::unordered_map<std::uint32_t, int> memo;

    int solve(std::uint32_t mask) {
        if (mask == 0) return 0;
        auto hit = memo.find(mask);
        if (hit != memo.end()) return hit->second;

        int delta = n + 1;
        for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
            int v = std::countr_zero(rest);
            delta = std::min(delta, std::popcount(adj[v] & mask));
        }
        int best = n + 1;
        for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
            int v = std::countr_zero(rest);
            if (std::popcount(adj[v] & mask) != delta) continue;
            best = std::min(best, 1 + solve(mask & ~closed[v]));
        }
        memo.emplace(mask, best);
        return best;
    }

    std::int64_t edges_within(std::uint32_t mask) const {
        std::int64_t twice = 0;
        for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
            int v = std::countr_zero(rest);
            twice += std::popcount(adj[v] & mask);
        }
        return twice / 2;
    }
};

}  // namespace

KMinResult k_min_exhaustive(const Graph& g, int vertex_budget) {
    int n = g.vertex_count();
    int cap = std::min(vertex_budget, 31);  // mask state space
    if (n > cap) throw BudgetExceededError(n, cap);

    KMinSearch s;
    s.n = n;
    s.closed.assign(n, 0);
    s.adj.assign(n, 0);
    for (int v = 0; v < n; ++v) {
        s.adj[v] = 0;
        for (int w : g.neighbors(v)) s.adj[v] |= 1u << w;
        s.closed[v] = s.adj[v] | (1u << v);
    }

    std::uint32_t full = n == 0 ? 0u : (1u << n) - 1u;
    KMinResult res;
    res.k = s.solve(full);

    // Replay the minimizing choices (lowest vertex first) into a real trace.
    std::uint32_t mask = full;
    while (mask) {
        int delta = n + 1;
        for (std::uint32_t rest = mask; rest; rest &= rest - 1)
            delta = std::min(delta,
                             std::popcount(s.adj[std::countr_zero(rest)] & mask));
        int target = s.solve(mask);
        for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
            int v = std::countr_zero(rest);
            if (std::popcount(s.adj[v] & mask) != delta) continue;
            std::uint32_t next = mask & ~s.closed[v];
            if (1 + s.solve(next) != target) continue;

            MinIteration it;
            it.chosen_vertex = v;
            it.chosen_degree = delta;
            for (std::uint32_t d = s.closed[v] & mask; d; d &= d - 1)
                it.deleted_vertices.push_back(std::countr_zero(d));
            it.edges_removed = s.edges_within(mask) - s.edges_within(next);
            res.witness.selected_set.push_back(v);
            res.witness.iterations.push_back(std::move(it));
            mask = next;
            break;
        }
    }
    res.witness.k = static_cast<int>(res.witness.iterations.size());
    return res;
}

KMinResult k_min_multistart(const Graph& g, int restarts, std::uint64_t seed) {
    if (restarts < 1) throw BadParamsError("multistart needs restarts >= 1");

    int best_k = -1;
    int best_idx = -1;
    MinTrace best_trace;
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < restarts; ++i) {
        MinTrace t = run_min(g, TieBreakPolicy::randomized(derive_seed(seed, i)));
#pragma omp critical(minbound_multistart)
        {
            if (best_idx < 0 || t.k < best_k || (t.k == best_k && i < best_idx)) {
                best_k = t.k;
                best_idx = i;
                best_trace = std::move(t);
            }
        }
    }
    return {best_k, std::move(best_trace)};
}

std::string trace_to_text(const MinTrace& trace) {
    std::ostringstream out;
    out << "j,chosen,degree,deleted,edges_removed\n";
    for (std::size_t j = 0; j < trace.iterations.size(); ++j) {
        const auto& it = trace.iterations[j];
        out << j + 1 << ',' << it.chosen_vertex << ',' << it.chosen_degree << ',';
        for (std::size_t i = 0; i < it.deleted_vertices.size(); ++i) {
            if (i) out << ' ';
            out << it.deleted_vertices[i];
        }
        out << ',' << it.edges_removed << '\n';
    }
    out << "k=" << trace.k << " selected=";
    for (std::size_t i = 0; i < trace.selected_set.size(); ++i) {
        if (i) out << ' ';
        out << trace.selected_set[i];
    }
    out << '\n';
    return out.str();
}

}  // namespace minbound
