#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>

#include "minbound/campaign.hpp"
#include "minbound/exact_mis.hpp"
#include "minbound/generators.hpp"
#include "minbound/min_greedy.hpp"

using namespace minbound;

namespace {

double time_ms(const std::function<void()>& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

void row(const char* name, double baseline_ms, double other_ms) {
    std::printf("%-30s %12.1f %12.1f %9.2fx\n", name, baseline_ms, other_ms,
                baseline_ms / other_ms);
}

}  // namespace

int main() {
    std::printf("threads available: %d\n\n", omp_get_max_threads());
    std::printf("%-30s %12s %12s %10s\n", "workload", "baseline/ms",
                "parallel/ms", "speedup");

    {
        const Graph g = gen_gnm_connected(24, 72, 7);
        AlphaResult serial_result, parallel_result;
        const double serial =
            time_ms([&] { serial_result = alpha_enumeration(g); });
        const double parallel =
            time_ms([&] { parallel_result = alpha_enumeration_parallel(g); });
        if (serial_result.alpha != parallel_result.alpha ||
            serial_result.witness != parallel_result.witness) {
            std::printf("MISMATCH in the exhaustive alpha scan\n");
            return 1;
        }
        row("alpha scan 2^24, n=24 m=72", serial, parallel);
    }

    {
        const Graph g = gen_gnm_connected(120, 400, 11);
        KMinResult serial_result, parallel_result;
        // multistart parallelizes over restarts; forcing one thread gives the
        // serial baseline without touching global OpenMP state afterwards
        const double serial = time_ms([&] {
            omp_set_num_threads(1);
            serial_result = k_min_multistart(g, 512, 3);
        });
        omp_set_num_threads(omp_get_num_procs());
        const double parallel =
            time_ms([&] { parallel_result = k_min_multistart(g, 512, 3); });
        if (serial_result.k != parallel_result.k ||
            serial_result.witness != parallel_result.witness) {
            std::printf("MISMATCH in multistart\n");
            return 1;
        }
        row("multistart x512, n=120 m=400", serial, parallel);
    }

    {
        CampaignSpec spec;
        spec.family = CampaignFamily::gnm;
        spec.n_values = {24, 28, 32};
        spec.m_values = {60, 90};
        spec.instances = 12;
        spec.seed = 5;
        CampaignSpec serial_spec = spec;
        serial_spec.threads = 1;
        CampaignResult serial_result, parallel_result;
        const double serial =
            time_ms([&] { serial_result = run_campaign(serial_spec); });
        const double parallel =
            time_ms([&] { parallel_result = run_campaign(spec); });
        if (serial_result.csv != parallel_result.csv) {
            std::printf("MISMATCH in campaign CSV\n");
            return 1;
        }
        row("campaign, 72 instances", serial, parallel);
    }

    {
        const Graph g = gen_gnm_connected(2000, 6000, 13);
        MinTrace fast, reference;
        const double ref_ms = time_ms(
            [&] { reference = run_min_reference(g, TieBreakPolicy::lowest()); });
        const double fast_ms =
            time_ms([&] { fast = run_min(g, TieBreakPolicy::lowest()); });
        if (!(fast == reference)) {
            std::printf("MISMATCH between greedy implementations\n");
            return 1;
        }
        std::printf("%-30s %12.1f %12.1f %9.2fx  (reference vs fast, serial)\n",
                    "greedy run, n=2000 m=6000", ref_ms, fast_ms,
                    ref_ms / fast_ms);
    }

    return 0;
}
