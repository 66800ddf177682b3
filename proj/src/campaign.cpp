#include "minbound/campaign.hpp"

#include <omp.h>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <exception>
#include <iomanip>
#include <sstream>

#include "minbound/chain.hpp"
#include "minbound/errors.hpp"
#include "minbound/exact_mis.hpp"
#include "minbound/generators.hpp"
#include "minbound/graph.hpp"
#include "minbound/rng.hpp"

namespace minbound {

const char* const kCampaignCsvHeader =
    "id,n,m,seed,alpha,k_run,k_min,k_min_exact,harant,harant_status,claimed,"
    "claimed_status,repaired,repaired_status,edge_sum,ineq2,ineq2_corr,ineq1,"
    "claimed_valid,repaired_valid,harant_valid";

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = s.find(',', start);
        parts.push_back(trim(s.substr(start, comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return parts;
}

template <typename T>
T parse_number(const std::string& s, const std::string& key) {
    T value{};
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
        throw BadParamsError("campaign key '" + key + "': bad number '" + s +
                             "'");
    }
    return value;
}

struct Task {
    std::int64_t id = 0;
    int n = 0;
    std::int64_t m = 0;     // gnm only
    double p = 0.0;         // gnp only
    std::uint32_t mask = 0; // exhaustive only
};

std::vector<Task> build_tasks(const CampaignSpec& spec) {
    std::vector<Task> tasks;
    std::int64_t id = 0;
    switch (spec.family) {
        case CampaignFamily::gnm:
            // fail before any work if the cross product has a hopeless cell
            for (int n : spec.n_values)
                for (std::int64_t m : spec.m_values)
                    if (m < n - 1 ||
                        m > static_cast<std::int64_t>(n) * (n - 1) / 2)
                        throw BadParamsError(
                            "infeasible gnm cell n=" + std::to_string(n) +
                            " m=" + std::to_string(m) +
                            " (needs n-1 <= m <= n(n-1)/2)");
            for (int n : spec.n_values)
                for (std::int64_t m : spec.m_values)
                    for (int i = 0; i < spec.instances; ++i)
                        tasks.push_back({id++, n, m, 0.0, 0});
            break;
        case CampaignFamily::gnp:
            for (int n : spec.n_values)
                for (double p : spec.p_values)
                    for (int i = 0; i < spec.instances; ++i)
                        tasks.push_back({id++, n, 0, p, 0});
            break;
        case CampaignFamily::exhaustive:
            for (int n : spec.n_values)
                for (std::uint32_t mask : connected_edge_masks(n))
                    tasks.push_back({id++, n, 0, 0.0, mask});
            break;
    }
    return tasks;
}

std::optional<int> validity(BoundKind kind, std::int64_t n, std::int64_t m,
                            int alpha) {
    switch (bound_holds_exact(kind, n, m, alpha)) {
        case BoundCheck::holds: return 1;
        case BoundCheck::violated: return 0;
        case BoundCheck::not_real: return std::nullopt;
    }
    return std::nullopt;
}

CampaignRow compute_row(const CampaignSpec& spec, const Task& task) {
    CampaignRow row;
    row.id = task.id;
    row.n = task.n;
    const std::uint64_t base =
        derive_seed(spec.seed, static_cast<std::uint64_t>(task.id));
    row.seed =
        spec.family == CampaignFamily::exhaustive ? task.mask : base;

    Graph g;
    try {
        switch (spec.family) {
            case CampaignFamily::gnm:
                g = gen_gnm_connected(task.n, task.m, derive_seed(base, 0));
                break;
            case CampaignFamily::gnp:
                g = gen_gnp_connected(task.n, task.p, derive_seed(base, 0),
                                      spec.gnp_max_retries);
                break;
            case CampaignFamily::exhaustive:
                g = graph_from_edge_mask(task.n, task.mask);
                break;
        }
    } catch (const NotConnectedAfterRetriesError&) {
        return row;  // measurement lost, row kept so the id gap is visible
    }

    const std::int64_t n = g.vertex_count();
    const std::int64_t m = g.edge_count();
    row.m = m;

    const TieBreakPolicy policy =
        spec.policy == TieBreakKind::random
            ? TieBreakPolicy::randomized(derive_seed(base, 1))
            : TieBreakPolicy::lowest();
    const MinTrace trace = run_min(g, policy);
    row.k_run = trace.k;

    if (task.n <= spec.kmin_budget) {
        row.k_min = k_min_exhaustive(g, spec.kmin_budget).k;
        row.k_min_exact = 1;
    } else {
        row.k_min = k_min_multistart(g, spec.kmin_restarts,
                                     derive_seed(base, 2)).k;
        row.k_min_exact = 0;
    }

    row.harant = evaluate_bound(BoundKind::harant, n, m);
    row.claimed = evaluate_bound(BoundKind::claimed, n, m);
    row.repaired = evaluate_bound(BoundKind::repaired, n, m);

    std::int64_t degree_term = 0;
    for (const MinIteration& it : trace.iterations) {
        degree_term +=
            static_cast<std::int64_t>(1 + it.chosen_degree) * it.chosen_degree;
    }
    const int k = trace.k;
    row.ineq2_slack = 2 * m - (4 * k - 2 + degree_term);
    row.ineq2_corr_slack = 2 * m - (2 * k - 2 + degree_term);
    row.ineq1_slack = Rational(k) - inequality1_rhs(trace, g);

    if (task.n <= spec.alpha_budget) {
        const AlphaResult exact = alpha_branch_and_bound(g);
        row.alpha = exact.alpha;
        const ChainReport report =
            verify_chain(g, trace, exact.witness, exact.alpha);
        row.edge_sum_slack = report.edge_sum.slack.numerator();
        row.claimed_valid = validity(BoundKind::claimed, n, m, exact.alpha);
        row.repaired_valid = validity(BoundKind::repaired, n, m, exact.alpha);
        row.harant_valid = validity(BoundKind::harant, n, m, exact.alpha);
    }
    return row;
}

std::string fixed6(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string fixed4(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

template <typename T>
std::string cell(const std::optional<T>& v) {
    return v ? std::to_string(*v) : "";
}

void bound_cells(std::ostringstream& out, const std::optional<BoundValue>& b) {
    if (!b) {
        out << ",,";
        return;
    }
    out << ',';
    if (b->status == BoundStatus::real) out << fixed6(b->value);
    out << ',' << bound_status_name(b->status);
}

}  // namespace

CampaignSpec parse_campaign_spec_text(const std::string& text) {
    CampaignSpec spec;
    bool saw_family = false;

    std::istringstream in(text);
    std::string raw;
    while (std::getline(in, raw)) {
        const std::size_t hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw BadParamsError("campaign line is not key=value: '" + line +
                                 "'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw BadParamsError("campaign line is not key=value: '" + line +
                                 "'");
        }

        if (key == "family") {
            saw_family = true;
            if (value == "gnm") spec.family = CampaignFamily::gnm;
            else if (value == "gnp") spec.family = CampaignFamily::gnp;
            else if (value == "exhaustive")
                spec.family = CampaignFamily::exhaustive;
            else
                throw BadParamsError("unknown campaign family '" + value + "'");
        } else if (key == "n") {
            spec.n_values.clear();
            for (const std::string& part : split_commas(value))
                spec.n_values.push_back(parse_number<int>(part, key));
        } else if (key == "m") {
            spec.m_values.clear();
            for (const std::string& part : split_commas(value))
                spec.m_values.push_back(parse_number<std::int64_t>(part, key));
        } else if (key == "p") {
            spec.p_values.clear();
            for (const std::string& part : split_commas(value))
                spec.p_values.push_back(parse_number<double>(part, key));
        } else if (key == "instances") {
            spec.instances = parse_number<int>(value, key);
        } else if (key == "seed") {
            spec.seed = parse_number<std::uint64_t>(value, key);
        } else if (key == "policy") {
            if (value == "lowest") spec.policy = TieBreakKind::lowest_index;
            else if (value == "random") spec.policy = TieBreakKind::random;
            else
                throw BadParamsError(
                    "campaign policy must be lowest or random, got '" + value +
                    "'");
        } else if (key == "alpha_budget") {
            spec.alpha_budget = parse_number<int>(value, key);
        } else if (key == "kmin_budget") {
            spec.kmin_budget = parse_number<int>(value, key);
        } else if (key == "kmin_restarts") {
            spec.kmin_restarts = parse_number<int>(value, key);
        } else if (key == "gnp_max_retries") {
            spec.gnp_max_retries = parse_number<int>(value, key);
        } else if (key == "threads") {
            spec.threads = parse_number<int>(value, key);
        } else {
            throw BadParamsError("unknown campaign key '" + key + "'");
        }
    }

    if (!saw_family) throw BadParamsError("campaign spec needs family=");
    if (spec.n_values.empty()) throw BadParamsError("campaign spec needs n=");
    for (int n : spec.n_values) {
        if (n < 1) throw BadParamsError("campaign n values must be >= 1");
    }
    switch (spec.family) {
        case CampaignFamily::gnm:
            if (spec.m_values.empty())
                throw BadParamsError("family=gnm needs m=");
            if (!spec.p_values.empty())
                throw BadParamsError("p= is only valid for family=gnp");
            break;
        case CampaignFamily::gnp:
            if (spec.p_values.empty())
                throw BadParamsError("family=gnp needs p=");
            if (!spec.m_values.empty())
                throw BadParamsError("m= is only valid for family=gnm");
            for (double p : spec.p_values) {
                if (!(p > 0.0 && p <= 1.0))
                    throw BadParamsError("gnp p values must lie in (0,1]");
            }
            break;
        case CampaignFamily::exhaustive:
            if (!spec.m_values.empty() || !spec.p_values.empty())
                throw BadParamsError(
                    "family=exhaustive takes only n= (each n <= 7)");
            for (int n : spec.n_values) {
                if (n > 7)
                    throw BadParamsError(
                        "family=exhaustive supports n <= 7 only");
            }
            break;
    }
    if (spec.instances < 1)
        throw BadParamsError("campaign instances must be >= 1");
    if (spec.kmin_restarts < 1)
        throw BadParamsError("campaign kmin_restarts must be >= 1");
    if (spec.gnp_max_retries < 1)
        throw BadParamsError("campaign gnp_max_retries must be >= 1");
    if (spec.alpha_budget < 0 || spec.kmin_budget < 0 || spec.threads < 0)
        throw BadParamsError("campaign budgets and threads must be >= 0");
    return spec;
}

CampaignResult run_campaign(const CampaignSpec& spec) {
    const std::vector<Task> tasks = build_tasks(spec);
    std::vector<CampaignRow> rows(tasks.size());

    if (spec.threads == 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) {
            rows[i] = compute_row(spec, tasks[i]);
        }
    } else {
        const int nt =
            spec.threads > 0 ? spec.threads : omp_get_max_threads();
        std::exception_ptr failure = nullptr;
        const std::int64_t count = static_cast<std::int64_t>(tasks.size());
#pragma omp parallel for schedule(dynamic) num_threads(nt)
        for (std::int64_t i = 0; i < count; ++i) {
            try {
                rows[i] = compute_row(spec, tasks[i]);
            } catch (...) {
#pragma omp critical(campaign_failure)
                if (!failure) failure = std::current_exception();
            }
        }
        if (failure) std::rethrow_exception(failure);
    }

    CampaignResult result;
    result.rows = std::move(rows);
    result.csv = rows_to_csv(result.rows);
    result.summary = summarize_rows(result.rows);
    return result;
}

std::string rows_to_csv(const std::vector<CampaignRow>& rows) {
    std::ostringstream out;
    out << kCampaignCsvHeader << "\n";
    for (const CampaignRow& row : rows) {
        out << row.id << ',' << row.n << ',' << cell(row.m) << ',' << row.seed
            << ',' << cell(row.alpha) << ',' << cell(row.k_run) << ','
            << cell(row.k_min) << ',' << cell(row.k_min_exact);
        bound_cells(out, row.harant);
        bound_cells(out, row.claimed);
        bound_cells(out, row.repaired);
        out << ',' << cell(row.edge_sum_slack) << ',' << cell(row.ineq2_slack)
            << ',' << cell(row.ineq2_corr_slack) << ',';
        if (row.ineq1_slack)
            out << fixed6(boost::rational_cast<double>(*row.ineq1_slack));
        out << ',' << cell(row.claimed_valid) << ',' << cell(row.repaired_valid)
            << ',' << cell(row.harant_valid) << "\n";
    }
    return out.str();
}

std::string summarize_rows(const std::vector<CampaignRow>& rows) {
    const std::int64_t total = static_cast<std::int64_t>(rows.size());
    std::int64_t generated = 0, alpha_known = 0;
    for (const CampaignRow& row : rows) {
        generated += row.m.has_value();
        alpha_known += row.alpha.has_value();
    }

    struct BoundTally {
        std::int64_t evaluated = 0, violated = 0, not_real = 0;
        std::int64_t gap_count = 0;
        double gap_sum = 0.0;
    };
    BoundTally harant, claimed, repaired;
    auto tally = [](BoundTally& t, const std::optional<BoundValue>& b,
                    const std::optional<int>& valid,
                    const std::optional<int>& alpha) {
        if (!b) return;
        if (b->status == BoundStatus::not_real) ++t.not_real;
        if (!alpha) return;
        ++t.evaluated;
        if (valid && *valid == 0) ++t.violated;
        if (b->status == BoundStatus::real) {
            ++t.gap_count;
            t.gap_sum += static_cast<double>(*alpha - b->ceil_value);
        }
    };

    std::int64_t edge_eval = 0, edge_viol = 0;
    std::int64_t i2_eval = 0, i2_viol = 0;
    std::int64_t i2c_eval = 0, i2c_viol = 0;
    std::int64_t i1_eval = 0, i1_viol = 0;
    for (const CampaignRow& row : rows) {
        tally(harant, row.harant, row.harant_valid, row.alpha);
        tally(claimed, row.claimed, row.claimed_valid, row.alpha);
        tally(repaired, row.repaired, row.repaired_valid, row.alpha);
        if (row.edge_sum_slack) {
            ++edge_eval;
            edge_viol += *row.edge_sum_slack < 0;
        }
        if (row.ineq2_slack) {
            ++i2_eval;
            i2_viol += *row.ineq2_slack < 0;
        }
        if (row.ineq2_corr_slack) {
            ++i2c_eval;
            i2c_viol += *row.ineq2_corr_slack < 0;
        }
        if (row.ineq1_slack) {
            ++i1_eval;
            i1_viol += *row.ineq1_slack < Rational(0);
        }
    }

    std::ostringstream out;
    out << "rows=" << total << " generated=" << generated
        << " failed=" << (total - generated) << " alpha_known=" << alpha_known
        << "\n";
    out << std::left;
    out << std::setw(22) << "bound" << std::setw(11) << "evaluated"
        << std::setw(10) << "violated" << std::setw(10) << "not_real"
        << "mean_gap\n";
    auto bound_line = [&](const char* name, const BoundTally& t) {
        out << std::setw(22) << name << std::setw(11) << t.evaluated
            << std::setw(10) << t.violated << std::setw(10) << t.not_real
            << (t.gap_count ? fixed4(t.gap_sum / t.gap_count) : "-") << "\n";
    };
    bound_line("harant", harant);
    bound_line("claimed", claimed);
    bound_line("repaired", repaired);
    out << std::setw(22) << "link" << std::setw(11) << "evaluated"
        << "violated\n";
    auto link_line = [&](const char* name, std::int64_t eval,
                         std::int64_t viol) {
        out << std::setw(22) << name << std::setw(11) << eval << viol << "\n";
    };
    link_line("edge_sum", edge_eval, edge_viol);
    link_line("inequality2", i2_eval, i2_viol);
    link_line("inequality2_corrected", i2c_eval, i2c_viol);
    link_line("inequality1", i1_eval, i1_viol);
    return out.str();
}

}  // namespace minbound
