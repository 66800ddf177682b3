#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "minbound/bounds.hpp"
#include "minbound/min_greedy.hpp"

namespace minbound {

enum class CampaignFamily { gnm, gnp, exhaustive };

// Parsed form of a campaign description (key=value lines, '#' comments).
// gnm sweeps n x m x instances, gnp sweeps n x p x instances, exhaustive
// walks every connected graph for each n (instances and generator seeds
// are ignored there; the id column stays a running index).
struct CampaignSpec {
    CampaignFamily family = CampaignFamily::gnm;
    std::vector<int> n_values;
    std::vector<std::int64_t> m_values;
    std::vector<double> p_values;
    int instances = 1;
    std::uint64_t seed = 0;
    TieBreakKind policy = TieBreakKind::lowest_index;  // lowest or random
    int alpha_budget = 40;        // exact alpha only when n <= this
    int kmin_budget = 14;         // exact k_min only when n <= this
    int kmin_restarts = 32;       // multistart width above the budget
    int gnp_max_retries = 64;
    int threads = 0;              // 0 = runtime default, 1 = serial
};

CampaignSpec parse_campaign_spec_text(const std::string& text);

// One measured instance. Absent optionals render as empty CSV cells:
// everything after `seed` is empty when generation failed, alpha and the
// columns needing it are empty past the budget, and bound values are empty
// when the square root does not exist.
struct CampaignRow {
    std::int64_t id = 0;
    int n = 0;
    std::uint64_t seed = 0;  // per-instance seed; edge mask for exhaustive
    std::optional<std::int64_t> m;
    std::optional<int> alpha;
    std::optional<int> k_run;
    std::optional<int> k_min;
    std::optional<int> k_min_exact;  // 1 exact, 0 multistart estimate
    std::optional<BoundValue> harant, claimed, repaired;
    std::optional<std::int64_t> edge_sum_slack;
    std::optional<std::int64_t> ineq2_slack;
    std::optional<std::int64_t> ineq2_corr_slack;
    std::optional<Rational> ineq1_slack;
    std::optional<int> claimed_valid, repaired_valid, harant_valid;
};

struct CampaignResult {
    std::vector<CampaignRow> rows;
    std::string csv;      // header + one line per row, deterministic bytes
    std::string summary;  // aligned per-bound / per-link violation table
};

extern const char* const kCampaignCsvHeader;

CampaignResult run_campaign(const CampaignSpec& spec);

std::string rows_to_csv(const std::vector<CampaignRow>& rows);
std::string summarize_rows(const std::vector<CampaignRow>& rows);

}  // namespace minbound
