#include <cmath>

#include "doctest.h"
#include "minbound/bounds.hpp"
#include "minbound/generators.hpp"
#include "minbound/min_greedy.hpp"
#include "test_util.hpp"

using namespace minbound;

TEST_CASE("rational rendering") {
    CHECK(rational_to_string(Rational(3, 7)) == "3/7");
    CHECK(rational_to_string(Rational(4, 2)) == "2");
    CHECK(rational_to_string(Rational(0)) == "0");
    CHECK(rational_to_string(Rational(-25, 7)) == "-25/7");
    CHECK(rational_to_string(Rational(25, -7)) == "-25/7");
}

TEST_CASE("path fixture across all three forms") {
    // n=4, m=3
    const BoundValue h = harant_bound(4, 3);
    CHECK(h.s == 11);
    CHECK(h.discriminant == 57);
    CHECK(h.status == BoundStatus::real);
    CHECK(h.value == doctest::Approx(1.7250828).epsilon(1e-7));
    CHECK(h.ceil_value == 2);

    const BoundValue c = claimed_bound(4, 3);
    CHECK(c.s == 12);
    CHECK(c.discriminant == -112);
    CHECK(c.status == BoundStatus::not_real);

    const BoundValue r = repaired_bound(4, 3);
    CHECK(r.s == 12);
    CHECK(r.discriminant == 16);
    CHECK(r.value == 2.0);  // exact: the discriminant is a perfect square
    CHECK(r.ceil_value == 2);
}

TEST_CASE("complete graph fixture") {
    // n=4, m=6
    const BoundValue h = harant_bound(4, 6);
    CHECK(h.s == 17);
    CHECK(h.discriminant == 225);
    CHECK(h.value == 1.0);
    CHECK(h.ceil_value == 1);

    const BoundValue c = claimed_bound(4, 6);
    CHECK(c.s == 18);
    CHECK(c.discriminant == 68);
    CHECK(c.value == doctest::Approx(1.2192236).epsilon(1e-7));
    CHECK(c.ceil_value == 2);

    const BoundValue r = repaired_bound(4, 6);
    CHECK(r.discriminant == 196);
    CHECK(r.value == 1.0);
    CHECK(r.ceil_value == 1);
}

TEST_CASE("more pinned values") {
    // C5: n=5, m=5
    CHECK(harant_bound(5, 5).value == doctest::Approx(1.7550020).epsilon(1e-7));
    CHECK(claimed_bound(5, 5).status == BoundStatus::not_real);
    const BoundValue c5r = repaired_bound(5, 5);
    CHECK(c5r.discriminant == 89);
    CHECK(c5r.value == doctest::Approx(1.8915048).epsilon(1e-7));
    CHECK(c5r.ceil_value == 2);

    // K3,3: n=6, m=9 — the claimed form turns real and lands on 2 exactly
    const BoundValue k33 = claimed_bound(6, 9);
    CHECK(k33.discriminant == 100);
    CHECK(k33.value == 2.0);
    CHECK(k33.ceil_value == 2);

    // single vertex
    CHECK(harant_bound(1, 0).value == 1.0);
    CHECK(claimed_bound(1, 0).status == BoundStatus::not_real);
    const BoundValue k1r = repaired_bound(1, 0);
    CHECK(k1r.value == 0.5);
    CHECK(k1r.ceil_value == 1);
}

TEST_CASE("every tree pushes the sharper form below zero discriminant") {
    for (int n = 1; n <= 60; ++n) {
        const BoundValue c = claimed_bound(n, n - 1);
        CHECK(c.discriminant == 9LL * n * n - 16LL * n * n);
        CHECK(c.status == BoundStatus::not_real);
        // the other two stay real on every connected input
        CHECK(harant_bound(n, n - 1).status == BoundStatus::real);
        CHECK(repaired_bound(n, n - 1).status == BoundStatus::real);
    }
}

TEST_CASE("complete graphs: perfect-square discriminants, exact values") {
    for (int n : {1, 2, 3, 5, 8, 13, 21, 34, 50, 200, 1000}) {
        const std::int64_t m = static_cast<std::int64_t>(n) * (n - 1) / 2;
        const BoundValue h = harant_bound(n, m);
        const std::int64_t q = static_cast<std::int64_t>(n) * n - 1;
        CHECK(h.discriminant == q * q);
        CHECK(h.value == 1.0);
        CHECK(h.ceil_value == 1);

        const BoundValue r = repaired_bound(n, m);
        const std::int64_t q2 = static_cast<std::int64_t>(n) * n - 2;
        CHECK(r.discriminant == q2 * q2);
        CHECK(r.value == (n == 1 ? 0.5 : 1.0));
        CHECK(r.ceil_value == 1);
    }
    // the sharper form overshoots alpha=1 on every K_n that keeps it real
    for (int n = 4; n <= 40; ++n) {
        const std::int64_t m = static_cast<std::int64_t>(n) * (n - 1) / 2;
        CHECK(bound_holds_exact(BoundKind::claimed, n, m, 1) ==
              BoundCheck::violated);
    }
    CHECK(bound_holds_exact(BoundKind::claimed, 2, 1, 1) ==
          BoundCheck::not_real);
    CHECK(bound_holds_exact(BoundKind::claimed, 3, 3, 1) ==
          BoundCheck::not_real);
}

TEST_CASE("integer predicate matches the hand arithmetic") {
    // K4 sharper form: s - d*alpha = 10, 10^2 = 100 > 68
    CHECK(bound_holds_exact(BoundKind::claimed, 4, 6, 1) ==
          BoundCheck::violated);
    CHECK(bound_holds_exact(BoundKind::claimed, 4, 6, 2) == BoundCheck::holds);
    CHECK(bound_holds_exact(BoundKind::harant, 4, 3, 2) == BoundCheck::holds);
    CHECK(bound_holds_exact(BoundKind::harant, 4, 3, 1) ==
          BoundCheck::violated);
    CHECK(bound_holds_exact(BoundKind::claimed, 4, 3, 1) ==
          BoundCheck::not_real);
}

TEST_CASE("predicate, ceil, and float value stay consistent") {
    SplitMix64 rng(73);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = testutil::random_connected(rng, 16);
        const std::int64_t n = g.vertex_count(), m = g.edge_count();
        for (BoundKind kind :
             {BoundKind::harant, BoundKind::claimed, BoundKind::repaired}) {
            const BoundValue b = evaluate_bound(kind, n, m);
            if (b.status == BoundStatus::not_real) {
                CHECK(b.discriminant < 0);
                CHECK(bound_holds_exact(kind, n, m, 1) == BoundCheck::not_real);
                continue;
            }
            // ceil is the least integer the exact predicate accepts
            CHECK(bound_holds_exact(kind, n, m, b.ceil_value) ==
                  BoundCheck::holds);
            if (b.ceil_value > 0) {
                CHECK(bound_holds_exact(kind, n, m, b.ceil_value - 1) ==
                      BoundCheck::violated);
            }
            // float value brackets its own ceil
            CHECK(b.value <= static_cast<double>(b.ceil_value) + 1e-9);
            CHECK(b.value > static_cast<double>(b.ceil_value) - 1.0 - 1e-9);
            // and tracks a long-double recomputation
            const long double wide =
                (static_cast<long double>(b.s) -
                 std::sqrt(static_cast<long double>(b.discriminant))) /
                (kind == BoundKind::harant ? 2.0L
                 : kind == BoundKind::claimed ? 8.0L : 4.0L);
            CHECK(b.value ==
                  doctest::Approx(static_cast<double>(wide)).epsilon(1e-12));
        }
    }
}

TEST_CASE("bounds refuse non-connected-shaped input") {
    CHECK_THROWS_AS(harant_bound(0, 0), NotConnectedError);
    CHECK_THROWS_AS(claimed_bound(5, 3), NotConnectedError);
    CHECK_THROWS_AS(evaluate_bound(BoundKind::repaired, -1, 0),
                    NotConnectedError);
    CHECK_THROWS_AS(bound_holds_exact(BoundKind::harant, 4, 2, 1),
                    NotConnectedError);
}

TEST_CASE("per-run inequality right-hand side on fixtures") {
    const Graph p4 = gen_named(NamedFamily::path, {4});
    CHECK(inequality1_rhs(run_min(p4, TieBreakPolicy::lowest()), p4) ==
          Rational(2));

    const Graph k4 = gen_named(NamedFamily::complete, {4});
    CHECK(inequality1_rhs(run_min(k4, TieBreakPolicy::lowest()), k4) ==
          Rational(1));

    const Graph star = gen_named(NamedFamily::star, {4});
    CHECK(inequality1_rhs(run_min(star, TieBreakPolicy::lowest()), star) ==
          Rational(25, 7));

    const Graph k1 = Graph::build(1, {});
    CHECK(inequality1_rhs(run_min(k1, TieBreakPolicy::lowest()), k1) ==
          Rational(1));
}

TEST_CASE("per-run inequality denominator identity and validity") {
    SplitMix64 rng(79);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = testutil::random_connected(rng, 14);
        const MinTrace trace =
            run_min(g, TieBreakPolicy::randomized(rng.next()));
        const Rational rhs = inequality1_rhs(trace, g);

        // sum_i (d_G(i) - delta_j) telescopes to 2m - sum_j (1+d_j)d_j,
        // so the denominator equals n + sum_j (1+d_j)d_j
        std::int64_t degree_term = 0;
        for (const MinIteration& it : trace.iterations)
            degree_term += static_cast<std::int64_t>(1 + it.chosen_degree) *
                           it.chosen_degree;
        const std::int64_t n = g.vertex_count();
        CHECK(rhs == Rational(n * n, n + degree_term));

        // the run length never undercuts it
        CHECK(Rational(trace.k) >= rhs);
    }
}

TEST_CASE("per-run inequality rejects bad pairings") {
    const Graph p4 = gen_named(NamedFamily::path, {4});
    const Graph disconnected = Graph::build(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(
        inequality1_rhs(run_min(disconnected, TieBreakPolicy::lowest()),
                        disconnected),
        NotConnectedError);
    // trace from a different graph does not cover this one
    const Graph p6 = gen_named(NamedFamily::path, {6});
    CHECK_THROWS_AS(inequality1_rhs(run_min(p4, TieBreakPolicy::lowest()), p6),
                    BadParamsError);
}
