#include "minbound/exact_mis.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace minbound {
namespace {

constexpr int kEnumerationBudget = 24;
constexpr int kAllSetsBudget = 20;

std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::uint32_t> adj(n, 0);
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v)) adj[v] |= 1u << w;
    return adj;
}

bool mask_independent(std::uint32_t mask, const std::vector<std::uint32_t>& adj) {
    for (std::uint32_t rest = mask; rest; rest &= rest - 1) {
        if (adj[std::countr_zero(rest)] & mask) return false;
    }
    return true;
}

// Lexicographic order on the ascending vertex sequences the masks encode.
// Not the numeric mask order: {0,3} precedes {1,2} here.
bool mask_lex_less(std::uint32_t a, std::uint32_t b) {
    while (a && b) {
        std::uint32_t la = a & -a, lb = b & -b;
        if (la != lb) return la < lb;
        a &= a - 1;
        b &= b - 1;
    }
    return !a && b;
}

std::vector<int> mask_to_vertices(std::uint32_t mask) {
    std::vector<int> out;
    for (; mask; mask &= mask - 1) out.push_back(std::countr_zero(mask));
    return out;
}

struct BestMask {
    int size = -1;
    std::uint32_t mask = 0;

    void offer(std::uint32_t candidate) {
        int s = std::popcount(candidate);
        if (s > size || (s == size && mask_lex_less(candidate, mask))) {
            size = s;
            mask = candidate;
        }
    }
    void merge(const BestMask& other) {
        if (other.size < 0) return;
        if (other.size > size ||
            (other.size == size && mask_lex_less(other.mask, mask))) {
            size = other.size;
            mask = other.mask;
        }
    }
};

}  // namespace

AlphaResult alpha_enumeration(const Graph& g) {
    int n = g.vertex_count();
    if (n > kEnumerationBudget) throw BudgetExceededError(n, kEnumerationBudget);
    auto adj = adjacency_masks(g);

    BestMask best;
    std::uint64_t limit = 1ull << n;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        auto m32 = static_cast<std::uint32_t>(mask);
        if (mask_independent(m32, adj)) best.offer(m32);
    }
    return {best.size, mask_to_vertices(best.mask), AlphaMethod::enumeration};
}

AlphaResult alpha_enumeration_parallel(const Graph& g) {
    int n = g.vertex_count();
    if (n > kEnumerationBudget) throw BudgetExceededError(n, kEnumerationBudget);
    auto adj = adjacency_masks(g);

    BestMask best;
    std::int64_t limit = 1ll << n;
#pragma omp parallel
    {
        BestMask local;
#pragma omp for nowait schedule(static)
        for (std::int64_t mask = 0; mask < limit; ++mask) {
            auto m32 = static_cast<std::uint32_t>(mask);
            if (mask_independent(m32, adj)) local.offer(m32);
        }
#pragma omp critical(minbound_alpha_merge)
        best.merge(local);
    }
    return {best.size, mask_to_vertices(best.mask), AlphaMethod::enumeration};
}

namespace {

// Word-block bitset helpers for the branch-and-bound state.
using Blocks = std::vector<std::uint64_t>;

int blocks_popcount(const Blocks& b) {
    int c = 0;
    for (auto w : b) c += std::popcount(w);
    return c;
}

int blocks_and_popcount(const Blocks& a, const Blocks& b) {
    int c = 0;
    for (std::size_t i = 0; i < a.size(); ++i) c += std::popcount(a[i] & b[i]);
    return c;
}

bool blocks_test(const Blocks& b, int v) {
    return (b[v >> 6] >> (v & 63)) & 1u;
}

void blocks_clear(Blocks& b, int v) { b[v >> 6] &= ~(1ull << (v & 63)); }

struct BnbState {
    int n = 0;
    std::vector<Blocks> closed;  // closed[v] = {v} | N(v)
    std::vector<Blocks> open;    // open[v]   = N(v)
    int best = -1;
    std::vector<int> best_set;
    std::vector<int> chosen;

    void search(Blocks alive) {
        std::size_t mark = chosen.size();

        // Vertices of degree <= 1 can always join a maximum set; fold them
        // in until only degree >= 2 structure is left.
        bool reduced = true;
        while (reduced) {
            reduced = false;
            for (int v = 0; v < n; ++v) {
                if (!blocks_test(alive, v)) continue;
                if (blocks_and_popcount(open[v], alive) <= 1) {
                    chosen.push_back(v);
                    for (std::size_t i = 0; i < alive.size(); ++i)
                        alive[i] &= ~closed[v][i];
                    reduced = true;
                }
            }
        }

        int remaining = blocks_popcount(alive);
        int count = static_cast<int>(chosen.size());
        if (remaining == 0) {
            if (count > best) {
                best = count;
                best_set = chosen;
            }
        } else if (count + remaining > best) {
            int pick = -1, pick_deg = -1;
            for (int v = 0; v < n; ++v) {
                if (!blocks_test(alive, v)) continue;
                int d = blocks_and_popcount(open[v], alive);
                if (d > pick_deg) {
                    pick_deg = d;
                    pick = v;
                }
            }
            Blocks incl = alive;
            for (std::size_t i = 0; i < incl.size(); ++i) incl[i] &= ~closed[pick][i];
            chosen.push_back(pick);
            search(std::move(incl));
            chosen.pop_back();

            Blocks excl = alive;
            blocks_clear(excl, pick);
            search(std::move(excl));
        }

        chosen.resize(mark);
    }
};

}  // namespace

AlphaResult alpha_branch_and_bound(const Graph& g) {
    int n = g.vertex_count();
    int words = (n + 63) / 64;

    BnbState st;
    st.n = n;
    st.closed.assign(n, Blocks(words, 0));
    st.open.assign(n, Blocks(words, 0));
    for (int v = 0; v < n; ++v) {
        st.closed[v][v >> 6] |= 1ull << (v & 63);
        for (int w : g.neighbors(v)) {
            st.closed[v][w >> 6] |= 1ull << (w & 63);
            st.open[v][w >> 6] |= 1ull << (w & 63);
        }
    }

    Blocks alive(words, 0);
    for (int v = 0; v < n; ++v) alive[v >> 6] |= 1ull << (v & 63);

    st.search(std::move(alive));
    std::sort(st.best_set.begin(), st.best_set.end());
    return {st.best, st.best_set, AlphaMethod::branch_and_bound};
}

std::vector<std::vector<int>> all_maximum_independent_sets(const Graph& g) {
    int n = g.vertex_count();
    if (n > kAllSetsBudget) throw BudgetExceededError(n, kAllSetsBudget);
    auto adj = adjacency_masks(g);

    int alpha = -1;
    std::uint64_t limit = 1ull << n;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        auto m32 = static_cast<std::uint32_t>(mask);
        if (mask_independent(m32, adj))
            alpha = std::max(alpha, std::popcount(m32));
    }

    std::vector<std::uint32_t> hits;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        auto m32 = static_cast<std::uint32_t>(mask);
        if (std::popcount(m32) == alpha && mask_independent(m32, adj))
            hits.push_back(m32);
    }
    std::sort(hits.begin(), hits.end(), mask_lex_less);

    std::vector<std::vector<int>> out;
    out.reserve(hits.size());
    for (auto m : hits) out.push_back(mask_to_vertices(m));
    return out;
}

}  // namespace minbound
