#pragma once

#include <optional>
#include <string>
#include <vector>

#include "minbound/bounds.hpp"
#include "minbound/exact_mis.hpp"
#include "minbound/graph.hpp"
#include "minbound/min_greedy.hpp"

namespace minbound {

enum class LinkStatus { holds, violated, not_applicable };

// One inequality of the derivation chain, evaluated on concrete data.
// Slack is (left side) - (right side) in exact arithmetic; >= 0 iff the
// inequality holds. Bound links use the integer tightness gap
// alpha - ceil(bound); not_applicable marks a bound with no real value.
struct LinkResult {
    LinkStatus status = LinkStatus::not_applicable;
    Rational slack = Rational(0);
    bool has_slack = false;
};

struct ChainIterationRow {
    int j = 0;    // 1-based
    int d_j = 0;  // chosen degree = delta(G_j)
    int k_j = 0;  // deleted vertices that lie in X
    std::int64_t edges_removed_actual = 0;
    std::int64_t edges_removed_lower_bound = 0;  // C(1+d_j,2)+C(k_j,2)[+1]
};

// Violations are findings, never errors: a report always comes back, with
// each link marked holds/violated/not_applicable and its slack.
struct ChainReport {
    std::int64_t n = 0, m = 0;
    int k = 0;
    int alpha = 0;
    std::vector<int> x;  // the maximum independent set used for the k_j
    std::vector<ChainIterationRow> iterations;

    LinkResult edge_sum;                // m >= sum of per-iteration bounds
    LinkResult inequality2;             // 2m >= 4k - 2 + sum (1+d_j)d_j
    LinkResult inequality2_corrected;   // 2m >= 2k - 2 + sum (1+d_j)d_j
    LinkResult inequality1;             // k >= n^2/(2m+n-sum)
    LinkResult claimed_bound_link;      // alpha vs claimed closed form
    LinkResult repaired_bound_link;     // alpha vs repaired closed form
    LinkResult harant_link;             // alpha vs harant closed form
};

// Evaluates every link for one (run trace, maximum independent set) pair.
// X must be independent with |X| = alpha(g) (cross-checked via the exact
// solver, or against alpha_known when the caller already solved it);
// otherwise NotMaximumSetError. g must be connected.
ChainReport verify_chain(const Graph& g, const MinTrace& trace,
                         const std::vector<int>& x,
                         std::optional<int> alpha_known = std::nullopt);

enum class AllXStatus { holds_for_all, holds_for_some, violated_for_all, not_applicable };

struct AllXSummary {
    int num_sets = 0;
    int alpha = 0;
    AllXStatus edge_sum, inequality2, inequality2_corrected, inequality1,
        claimed_bound_link, repaired_bound_link, harant_link;
};

// verify_chain over every maximum independent set (all_maximum_independent_sets
// budget applies), aggregated per link.
AllXSummary verify_chain_all_x(const Graph& g, const MinTrace& trace);

const char* link_status_name(LinkStatus s);
const char* all_x_status_name(AllXStatus s);

// Deterministic serializations (byte-identical for identical inputs).
std::string report_to_text(const ChainReport& report);
std::string all_x_summary_to_text(const AllXSummary& summary);

}  // namespace minbound
