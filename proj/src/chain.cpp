#include "minbound/chain.hpp"

#include <algorithm>
#include <sstream>

#include "minbound/errors.hpp"

namespace minbound {

namespace {

std::int64_t pairs(std::int64_t x) { return x * (x - 1) / 2; }

LinkResult integer_link(std::int64_t lhs, std::int64_t rhs) {
    LinkResult r;
    r.slack = Rational(lhs - rhs);
    r.has_slack = true;
    r.status = lhs >= rhs ? LinkStatus::holds : LinkStatus::violated;
    return r;
}

LinkResult bound_link(const Graph& g, BoundKind kind, int alpha) {
    LinkResult r;
    const BoundValue b = evaluate_bound(kind, g.vertex_count(), g.edge_count());
    if (b.status == BoundStatus::not_real) return r;  // not_applicable
    r.slack = Rational(alpha - b.ceil_value);
    r.has_slack = true;
    r.status = alpha >= b.ceil_value ? LinkStatus::holds : LinkStatus::violated;
    return r;
}

AllXStatus aggregate(int holds, int violated, int not_applicable, int total) {
    if (not_applicable == total) return AllXStatus::not_applicable;
    if (holds == total) return AllXStatus::holds_for_all;
    if (violated == total) return AllXStatus::violated_for_all;
    return AllXStatus::holds_for_some;
}

void append_link(std::ostringstream& out, const char* name, const LinkResult& link) {
    out << "link " << name << " status=" << link_status_name(link.status)
        << " slack=" << (link.has_slack ? rational_to_string(link.slack) : "-") << "\n";
}

}  // namespace

ChainReport verify_chain(const Graph& g, const MinTrace& trace,
                         const std::vector<int>& x,
                         std::optional<int> alpha_known) {
    if (g.vertex_count() == 0 || !g.is_connected()) {
        throw NotConnectedError("chain verification needs a connected graph");
    }

    for (int v : x) {
        if (v < 0 || v >= g.vertex_count()) {
            throw VertexOutOfRangeError(v, g.vertex_count());
        }
    }
    const int alpha =
        alpha_known ? *alpha_known : alpha_branch_and_bound(g).alpha;
    if (static_cast<int>(x.size()) != alpha || !is_independent_set(g, x)) {
        throw NotMaximumSetError(
            "X must be an independent set of maximum size (" +
            std::to_string(alpha) + ")");
    }

    std::vector<char> in_x(g.vertex_count(), 0);
    for (int v : x) in_x[v] = 1;

    ChainReport report;
    report.n = g.vertex_count();
    report.m = g.edge_count();
    report.k = trace.k;
    report.alpha = alpha;
    report.x = x;
    std::sort(report.x.begin(), report.x.end());

    const int k = trace.k;
    std::int64_t covered = 0;
    std::int64_t edge_bound_sum = 0;
    std::int64_t degree_term_sum = 0;  // sum over j of (1+d_j)d_j
    for (int j = 0; j < k; ++j) {
        const MinIteration& it = trace.iterations[j];
        ChainIterationRow row;
        row.j = j + 1;
        row.d_j = it.chosen_degree;
        for (int v : it.deleted_vertices) row.k_j += in_x[v];
        row.edges_removed_actual = it.edges_removed;
        row.edges_removed_lower_bound =
            pairs(1 + row.d_j) + pairs(row.k_j) + (j + 1 < k ? 1 : 0);
        covered += static_cast<std::int64_t>(it.deleted_vertices.size());
        edge_bound_sum += row.edges_removed_lower_bound;
        degree_term_sum += static_cast<std::int64_t>(1 + row.d_j) * row.d_j;
        report.iterations.push_back(row);
    }
    if (covered != g.vertex_count()) {
        throw BadParamsError("trace does not cover every vertex of the graph");
    }

    const std::int64_t m = g.edge_count();
    report.edge_sum = integer_link(m, edge_bound_sum);
    report.inequality2 = integer_link(2 * m, 4 * k - 2 + degree_term_sum);
    report.inequality2_corrected =
        integer_link(2 * m, 2 * k - 2 + degree_term_sum);

    const Rational rhs1 = inequality1_rhs(trace, g);
    report.inequality1.slack = Rational(k) - rhs1;
    report.inequality1.has_slack = true;
    report.inequality1.status =
        Rational(k) >= rhs1 ? LinkStatus::holds : LinkStatus::violated;

    report.claimed_bound_link = bound_link(g, BoundKind::claimed, alpha);
    report.repaired_bound_link = bound_link(g, BoundKind::repaired, alpha);
    report.harant_link = bound_link(g, BoundKind::harant, alpha);
    return report;
}

AllXSummary verify_chain_all_x(const Graph& g, const MinTrace& trace) {
    const std::vector<std::vector<int>> sets = all_maximum_independent_sets(g);
    AllXSummary summary;
    summary.num_sets = static_cast<int>(sets.size());
    summary.alpha = static_cast<int>(sets.front().size());

    struct Tally {
        int holds = 0, violated = 0, not_applicable = 0;
        void add(const LinkResult& r) {
            switch (r.status) {
                case LinkStatus::holds: ++holds; break;
                case LinkStatus::violated: ++violated; break;
                case LinkStatus::not_applicable: ++not_applicable; break;
            }
        }
    };
    Tally edge_sum, ineq2, ineq2c, ineq1, claimed, repaired, harant;
    for (const std::vector<int>& x : sets) {
        const ChainReport r = verify_chain(g, trace, x, summary.alpha);
        edge_sum.add(r.edge_sum);
        ineq2.add(r.inequality2);
        ineq2c.add(r.inequality2_corrected);
        ineq1.add(r.inequality1);
        claimed.add(r.claimed_bound_link);
        repaired.add(r.repaired_bound_link);
        harant.add(r.harant_link);
    }
    const int total = summary.num_sets;
    summary.edge_sum = aggregate(edge_sum.holds, edge_sum.violated,
                                 edge_sum.not_applicable, total);
    summary.inequality2 =
        aggregate(ineq2.holds, ineq2.violated, ineq2.not_applicable, total);
    summary.inequality2_corrected =
        aggregate(ineq2c.holds, ineq2c.violated, ineq2c.not_applicable, total);
    summary.inequality1 =
        aggregate(ineq1.holds, ineq1.violated, ineq1.not_applicable, total);
    summary.claimed_bound_link = aggregate(claimed.holds, claimed.violated,
                                           claimed.not_applicable, total);
    summary.repaired_bound_link = aggregate(repaired.holds, repaired.violated,
                                            repaired.not_applicable, total);
    summary.harant_link =
        aggregate(harant.holds, harant.violated, harant.not_applicable, total);
    return summary;
}

const char* link_status_name(LinkStatus s) {
    switch (s) {
        case LinkStatus::holds: return "holds";
        case LinkStatus::violated: return "violated";
        case LinkStatus::not_applicable: return "not_applicable";
    }
    return "?";
}

const char* all_x_status_name(AllXStatus s) {
    switch (s) {
        case AllXStatus::holds_for_all: return "holds_for_all";
        case AllXStatus::holds_for_some: return "holds_for_some";
        case AllXStatus::violated_for_all: return "violated_for_all";
        case AllXStatus::not_applicable: return "not_applicable";
    }
    return "?";
}

std::string report_to_text(const ChainReport& report) {
    std::ostringstream out;
    out << "graph n=" << report.n << " m=" << report.m << " k=" << report.k
        << " alpha=" << report.alpha << "\n";
    out << "X=";
    for (std::size_t i = 0; i < report.x.size(); ++i) {
        out << (i ? " " : "") << report.x[i];
    }
    out << "\n";
    for (const ChainIterationRow& row : report.iterations) {
        out << "iteration j=" << row.j << " d=" << row.d_j << " in_X=" << row.k_j
            << " edges_removed=" << row.edges_removed_actual
            << " edge_lower_bound=" << row.edges_removed_lower_bound << "\n";
    }
    append_link(out, "edge_sum", report.edge_sum);
    append_link(out, "inequality2", report.inequality2);
    append_link(out, "inequality2_corrected", report.inequality2_corrected);
    append_link(out, "inequality1", report.inequality1);
    append_link(out, "claimed_bound", report.claimed_bound_link);
    append_link(out, "repaired_bound", report.repaired_bound_link);
    append_link(out, "harant_bound", report.harant_link);
    return out.str();
}

std::string all_x_summary_to_text(const AllXSummary& summary) {
    std::ostringstream out;
    out << "maximum_independent_sets=" << summary.num_sets
        << " alpha=" << summary.alpha << "\n";
    out << "link edge_sum status=" << all_x_status_name(summary.edge_sum) << "\n";
    out << "link inequality2 status=" << all_x_status_name(summary.inequality2)
        << "\n";
    out << "link inequality2_corrected status="
        << all_x_status_name(summary.inequality2_corrected) << "\n";
    out << "link inequality1 status=" << all_x_status_name(summary.inequality1)
        << "\n";
    out << "link claimed_bound status="
        << all_x_status_name(summary.claimed_bound_link) << "\n";
    out << "link repaired_bound status="
        << all_x_status_name(summary.repaired_bound_link) << "\n";
    out << "link harant_bound status=" << all_x_status_name(summary.harant_link)
        << "\n";
    return out.str();
}

}  // namespace minbound
