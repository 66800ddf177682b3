#include <set>
#include <vector>

#include "doctest.h"
#include "minbound/generators.hpp"
#include "test_util.hpp"

using namespace minbound;

TEST_CASE("named families have the right shape") {
    const Graph p4 = gen_named(NamedFamily::path, {4});
    CHECK(p4 == Graph::build(4, {{0, 1}, {1, 2}, {2, 3}}));
    CHECK(gen_named(NamedFamily::path, {1}).vertex_count() == 1);

    const Graph c5 = gen_named(NamedFamily::cycle, {5});
    CHECK(c5.edge_count() == 5);
    CHECK(c5.has_edge(0, 4));
    for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);

    const Graph k4 = gen_named(NamedFamily::complete, {4});
    CHECK(k4.edge_count() == 6);
    for (int v = 0; v < 4; ++v) CHECK(k4.degree(v) == 3);

    const Graph k23 = gen_named(NamedFamily::complete_bipartite, {2, 3});
    CHECK(k23.vertex_count() == 5);
    CHECK(k23.edge_count() == 6);
    CHECK(k23.has_edge(0, 2));
    CHECK(!k23.has_edge(0, 1));
    CHECK(!k23.has_edge(2, 3));

    const Graph star = gen_named(NamedFamily::star, {4});
    CHECK(star.vertex_count() == 5);
    CHECK(star.degree(0) == 4);
    for (int leaf = 1; leaf <= 4; ++leaf) CHECK(star.degree(leaf) == 1);
}

TEST_CASE("named family parameter validation") {
    CHECK_THROWS_AS(gen_named(NamedFamily::path, {0}), BadParamsError);
    CHECK_THROWS_AS(gen_named(NamedFamily::path, {}), BadParamsError);
    CHECK_THROWS_AS(gen_named(NamedFamily::path, {2, 3}), BadParamsError);
    CHECK_THROWS_AS(gen_named(NamedFamily::cycle, {2}), BadParamsError);
    CHECK_THROWS_AS(gen_named(NamedFamily::complete_bipartite, {3}),
                    BadParamsError);
    CHECK_THROWS_AS(gen_named(NamedFamily::complete_bipartite, {0, 3}),
                    BadParamsError);
    // a star may have zero leaves (a single vertex), but not a negative count
    CHECK(gen_named(NamedFamily::star, {0}).vertex_count() == 1);
    CHECK(gen_named(NamedFamily::star, {0}).edge_count() == 0);
    CHECK_THROWS_AS(gen_named(NamedFamily::star, {-1}), BadParamsError);
}

TEST_CASE("gnm hits the requested size and stays connected") {
    SplitMix64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng.next_below(30));
        const std::int64_t lo = n - 1;
        const std::int64_t hi = static_cast<std::int64_t>(n) * (n - 1) / 2;
        const std::int64_t m = lo + static_cast<std::int64_t>(
                                        rng.next_below(hi - lo + 1));
        const Graph g = gen_gnm_connected(n, m, rng.next());
        CHECK(g.vertex_count() == n);
        CHECK(g.edge_count() == m);
        CHECK(g.is_connected());
    }
}

TEST_CASE("gnm edge cases") {
    CHECK(gen_gnm_connected(1, 0, 5).vertex_count() == 1);
    const Graph tree = gen_gnm_connected(9, 8, 5);
    CHECK(tree.edge_count() == 8);
    CHECK(tree.is_connected());
    const Graph complete = gen_gnm_connected(6, 15, 5);
    CHECK(complete.edge_count() == 15);

    CHECK_THROWS_AS(gen_gnm_connected(4, 2, 5), BadParamsError);   // below tree
    CHECK_THROWS_AS(gen_gnm_connected(4, 7, 5), BadParamsError);   // above K4
    CHECK_THROWS_AS(gen_gnm_connected(0, 0, 5), BadParamsError);
}

TEST_CASE("gnm is deterministic in the seed") {
    const Graph a = gen_gnm_connected(20, 40, 99);
    const Graph b = gen_gnm_connected(20, 40, 99);
    const Graph c = gen_gnm_connected(20, 40, 100);
    CHECK(a == b);
    CHECK(!(a == c));

    // the large-n rejection-sampling path is deterministic too
    const Graph big1 = gen_gnm_connected(1500, 2200, 7);
    const Graph big2 = gen_gnm_connected(1500, 2200, 7);
    CHECK(big1 == big2);
    CHECK(big1.edge_count() == 2200);
    CHECK(big1.is_connected());
}

TEST_CASE("gnp returns a connected sample or gives up honestly") {
    const Graph g = gen_gnp_connected(12, 0.5, 3, 64);
    CHECK(g.vertex_count() == 12);
    CHECK(g.is_connected());
    CHECK(gen_gnp_connected(12, 0.5, 3, 64) == g);

    CHECK(gen_gnp_connected(5, 1.0, 1, 1).edge_count() == 10);

    // expected degree ~0.6: essentially surely disconnected, one attempt
    CHECK_THROWS_AS(gen_gnp_connected(60, 0.01, 11, 1),
                    NotConnectedAfterRetriesError);

    // p = 0 is a legal probability; it just can never come out connected
    CHECK_THROWS_AS(gen_gnp_connected(5, 0.0, 1, 4),
                    NotConnectedAfterRetriesError);
    CHECK_THROWS_AS(gen_gnp_connected(5, 1.5, 1, 4), BadParamsError);
    CHECK_THROWS_AS(gen_gnp_connected(5, -0.5, 1, 4), BadParamsError);
    CHECK_THROWS_AS(gen_gnp_connected(5, 0.5, 1, 0), BadParamsError);
}

TEST_CASE("connected graph enumeration matches the counting recurrence") {
    const std::vector<long long> expect = testutil::connected_counts(6);
    for (int n = 1; n <= 6; ++n) {
        const auto masks = connected_edge_masks(n);
        CHECK(static_cast<long long>(masks.size()) == expect[n]);

        // masks are unique, ascending, and decode to connected graphs
        std::set<std::uint32_t> seen;
        for (std::uint32_t mask : masks) seen.insert(mask);
        CHECK(seen.size() == masks.size());
        CHECK(std::is_sorted(masks.begin(), masks.end()));
    }
    // spot totals against the published sequence
    CHECK(connected_edge_masks(1).size() == 1);
    CHECK(connected_edge_masks(4).size() == 38);
    CHECK(connected_edge_masks(6).size() == 26704);
}

TEST_CASE("edge mask decoding uses lexicographic pair order") {
    // bits for n=4: (0,1) (0,2) (0,3) (1,2) (1,3) (2,3); 0b100101 sets
    // bits 0, 2, 5 -> the path 1-0-3-2
    const Graph g = graph_from_edge_mask(4, 0b100101u);
    CHECK(g == Graph::build(4, {{0, 1}, {0, 3}, {2, 3}}));
    CHECK(graph_from_edge_mask(3, 0).vertex_count() == 3);
    CHECK_THROWS_AS(connected_edge_masks(8), BadParamsError);
}

TEST_CASE("enumeration callback agrees with the mask list") {
    for (int n = 1; n <= 5; ++n) {
        const auto masks = connected_edge_masks(n);
        std::size_t at = 0;
        enumerate_connected_graphs(n, [&](const Graph& g, std::uint32_t mask) {
            REQUIRE(at < masks.size());
            CHECK(mask == masks[at]);
            CHECK(g == graph_from_edge_mask(n, mask));
            CHECK(g.is_connected());
            ++at;
        });
        CHECK(at == masks.size());
    }
}
