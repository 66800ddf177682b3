#include "minbound/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "minbound/bounds.hpp"
#include "minbound/campaign.hpp"
#include "minbound/chain.hpp"
#include "minbound/errors.hpp"
#include "minbound/exact_mis.hpp"
#include "minbound/generators.hpp"
#include "minbound/graph_io.hpp"
#include "minbound/min_greedy.hpp"

namespace minbound {

namespace {

// "3,3" -> {3, 3}; every token must be a full integer.
std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> values;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        int value = 0;
        const char* last = item.data() + item.size();
        const auto [ptr, ec] = std::from_chars(item.data(), last, value);
        if (ec != std::errc() || ptr != last)
            throw BadParamsError(std::string(what) + ": bad integer '" +
                                 item + "'");
        values.push_back(value);
    }
    if (values.empty())
        throw BadParamsError(std::string(what) + " needs at least one value");
    return values;
}

std::string read_input(const std::string& path, std::istream& in) {
    std::ostringstream buffer;
    if (path == "-") {
        buffer << in.rdbuf();
    } else {
        std::ifstream file(path, std::ios::binary);
        if (!file) throw BadParamsError("cannot read file: " + path);
        buffer << file.rdbuf();
    }
    return buffer.str();
}

void write_output(const std::string& path, std::ostream& out,
                  const std::string& data) {
    if (path.empty() || path == "-") {
        out << data;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw BadParamsError("cannot write file: " + path);
    file << data;
}

GraphDocument load_graph(const std::string& path, std::istream& in,
                         const std::string& format_name, std::ostream& err) {
    const std::string text = read_input(path, in);
    GraphFormat fmt;
    if (format_name == "dimacs") fmt = GraphFormat::dimacs;
    else if (format_name == "edgelist") fmt = GraphFormat::edgelist;
    else fmt = sniff_format(text);
    GraphDocument doc = parse(text, fmt);
    for (const std::string& w : doc.warnings) err << "warning: " << w << "\n";
    return doc;
}

NamedFamily named_family(const std::string& name) {
    if (name == "path") return NamedFamily::path;
    if (name == "cycle") return NamedFamily::cycle;
    if (name == "complete") return NamedFamily::complete;
    if (name == "bipartite") return NamedFamily::complete_bipartite;
    if (name == "star") return NamedFamily::star;
    throw BadParamsError("unknown family '" + name + "'");
}

const char* method_name(AlphaMethod m) {
    return m == AlphaMethod::enumeration ? "enumeration" : "branch_and_bound";
}

void add_format_option(CLI::App* sub, std::string& format_name) {
    sub->add_option("--format", format_name,
                    "input format: auto, dimacs, edgelist")
        ->check(CLI::IsMember({"auto", "dimacs", "edgelist"}));
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::istream& in,
            std::ostream& out, std::ostream& err) {
    CLI::App app{"independence-number lower bounds and the MIN greedy"};
    app.name("minbound");
    app.require_subcommand(1);

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "generate a graph");
    std::string gen_family;
    std::string gen_params;
    int gen_n = -1;
    std::int64_t gen_m = -1;
    double gen_p = -1.0;
    std::uint64_t gen_seed = 0;
    int gen_retries = 64;
    std::string gen_format = "dimacs";
    std::string gen_out;
    gen->add_option("--family", gen_family,
                    "path, cycle, complete, bipartite, star, gnm, gnp")
        ->required()
        ->check(CLI::IsMember(
            {"path", "cycle", "complete", "bipartite", "star", "gnm", "gnp"}));
    gen->add_option("--params", gen_params,
                    "size parameters for the named families, e.g. 4 or 3,3");
    gen->add_option("--n", gen_n, "vertex count (gnm, gnp)");
    gen->add_option("--m", gen_m, "edge count (gnm)");
    gen->add_option("--p", gen_p, "edge probability (gnp)");
    gen->add_option("--seed", gen_seed, "generator seed");
    gen->add_option("--retries", gen_retries,
                    "connected-sample attempts for gnp");
    gen->add_option("--format", gen_format, "output format")
        ->check(CLI::IsMember({"dimacs", "edgelist"}));
    gen->add_option("--out", gen_out, "output file (default stdout)");
    gen->callback([&] {
        GraphDocument doc;
        if (gen_family == "gnm") {
            if (gen_n < 0 || gen_m < 0)
                throw BadParamsError("--family gnm needs --n and --m");
            doc.graph = gen_gnm_connected(gen_n, gen_m, gen_seed);
        } else if (gen_family == "gnp") {
            if (gen_n < 0 || gen_p < 0)
                throw BadParamsError("--family gnp needs --n and --p");
            doc.graph = gen_gnp_connected(gen_n, gen_p, gen_seed, gen_retries);
        } else {
            std::vector<int> params;
            if (!gen_params.empty()) {
                params = parse_int_list(gen_params, "--params");
            } else if (gen_n >= 0) {
                // --n is the natural spelling for one-parameter families
                params = {gen_n};
            }
            doc.graph = gen_named(named_family(gen_family), params);
        }
        const GraphFormat fmt = gen_format == "edgelist"
                                    ? GraphFormat::edgelist
                                    : GraphFormat::dimacs;
        write_output(gen_out, out, serialize(doc, fmt));
    });

    // ---- parse ----
    auto* parse_cmd = app.add_subcommand("parse", "parse and validate a graph");
    std::string parse_input = "-";
    std::string parse_format = "auto";
    parse_cmd->add_option("input", parse_input, "graph file, or - for stdin");
    add_format_option(parse_cmd, parse_format);
    parse_cmd->callback([&] {
        const GraphDocument doc = load_graph(parse_input, in, parse_format, err);
        out << "n=" << doc.graph.vertex_count() << " m=" << doc.graph.edge_count()
            << " format="
            << (doc.source_format == GraphFormat::dimacs ? "dimacs" : "edgelist")
            << " connected=" << (doc.graph.is_connected() ? 1 : 0) << "\n";
    });

    // ---- run-min ----
    auto* run_cmd = app.add_subcommand("run-min", "run the MIN greedy");
    std::string run_input = "-";
    std::string run_format = "auto";
    std::string run_policy = "lowest";
    std::uint64_t run_seed = 0;
    int run_budget = 14;
    run_cmd->add_option("input", run_input, "graph file, or - for stdin");
    add_format_option(run_cmd, run_format);
    run_cmd->add_option("--policy", run_policy,
                        "tie-break: lowest, random, exhaustive")
        ->check(CLI::IsMember({"lowest", "random", "exhaustive"}));
    run_cmd->add_option("--seed", run_seed, "seed for --policy random");
    run_cmd->add_option("--budget", run_budget,
                        "vertex budget for --policy exhaustive");
    run_cmd->callback([&] {
        const GraphDocument doc = load_graph(run_input, in, run_format, err);
        MinTrace trace;
        if (run_policy == "exhaustive") {
            trace = k_min_exhaustive(doc.graph, run_budget).witness;
        } else if (run_policy == "random") {
            trace = run_min(doc.graph, TieBreakPolicy::randomized(run_seed));
        } else {
            trace = run_min(doc.graph, TieBreakPolicy::lowest());
        }
        out << trace_to_text(trace);
    });

    // ---- alpha ----
    auto* alpha_cmd =
        app.add_subcommand("alpha", "exact maximum independent set");
    std::string alpha_input = "-";
    std::string alpha_format = "auto";
    std::string alpha_method = "auto";
    alpha_cmd->add_option("input", alpha_input, "graph file, or - for stdin");
    add_format_option(alpha_cmd, alpha_format);
    alpha_cmd->add_option("--method", alpha_method,
                          "auto, enumeration, branch-and-bound")
        ->check(CLI::IsMember({"auto", "enumeration", "branch-and-bound"}));
    alpha_cmd->callback([&] {
        const GraphDocument doc =
            load_graph(alpha_input, in, alpha_format, err);
        AlphaResult result;
        if (alpha_method == "enumeration") {
            result = alpha_enumeration_parallel(doc.graph);
        } else if (alpha_method == "branch-and-bound") {
            result = alpha_branch_and_bound(doc.graph);
        } else {
            result = doc.graph.vertex_count() <= 24
                         ? alpha_enumeration_parallel(doc.graph)
                         : alpha_branch_and_bound(doc.graph);
        }
        out << "alpha=" << result.alpha << " witness=";
        for (std::size_t i = 0; i < result.witness.size(); ++i) {
            out << (i ? " " : "") << result.witness[i];
        }
        out << " method=" << method_name(result.method) << "\n";
    });

    // ---- bounds ----
    auto* bounds_cmd =
        app.add_subcommand("bounds", "closed-form lower bounds on alpha");
    std::string bounds_input = "-";
    std::string bounds_format = "auto";
    std::int64_t bounds_n = -1, bounds_m = -1;
    bounds_cmd->add_option("input", bounds_input, "graph file, or - for stdin");
    add_format_option(bounds_cmd, bounds_format);
    bounds_cmd->add_option("--n", bounds_n,
                           "evaluate directly from the vertex count");
    bounds_cmd->add_option("--m", bounds_m,
                           "evaluate directly from the edge count");
    bounds_cmd->callback([&] {
        std::int64_t n = bounds_n, m = bounds_m;
        if (n >= 0 || m >= 0) {
            if (n < 0 || m < 0)
                throw BadParamsError("--n and --m go together");
        } else {
            const GraphDocument doc =
                load_graph(bounds_input, in, bounds_format, err);
            if (!doc.graph.is_connected()) {
                throw NotConnectedError("bounds need a connected graph");
            }
            n = doc.graph.vertex_count();
            m = doc.graph.edge_count();
        }
        for (BoundKind kind :
             {BoundKind::harant, BoundKind::claimed, BoundKind::repaired}) {
            const BoundValue b = evaluate_bound(kind, n, m);
            out << "bound=" << bound_kind_name(kind)
                << " status=" << bound_status_name(b.status) << " value=";
            if (b.status == BoundStatus::real) {
                char buf[64];
                std::snprintf(buf, sizeof buf, "%.6f", b.value);
                out << buf << " ceil=" << b.ceil_value;
            } else {
                out << "- ceil=-";
            }
            out << " disc=" << b.discriminant << "\n";
        }
    });

    // ---- verify-chain ----
    auto* chain_cmd = app.add_subcommand(
        "verify-chain", "evaluate every derivation link on one run");
    std::string chain_input = "-";
    std::string chain_format = "auto";
    std::string chain_policy = "lowest";
    std::uint64_t chain_seed = 0;
    int chain_budget = 14;
    std::string chain_x;
    bool chain_all_x = false;
    chain_cmd->add_option("input", chain_input, "graph file, or - for stdin");
    add_format_option(chain_cmd, chain_format);
    chain_cmd->add_option("--policy", chain_policy,
                          "tie-break: lowest, random, exhaustive")
        ->check(CLI::IsMember({"lowest", "random", "exhaustive"}));
    chain_cmd->add_option("--seed", chain_seed, "seed for --policy random");
    chain_cmd->add_option("--budget", chain_budget,
                          "vertex budget for --policy exhaustive");
    auto* x_opt = chain_cmd->add_option(
        "--x", chain_x, "maximum independent set to use, e.g. 0,2");
    chain_cmd
        ->add_flag("--all-x", chain_all_x,
                   "aggregate over every maximum independent set")
        ->excludes(x_opt);
    chain_cmd->callback([&] {
        const GraphDocument doc =
            load_graph(chain_input, in, chain_format, err);
        MinTrace trace;
        if (chain_policy == "exhaustive") {
            trace = k_min_exhaustive(doc.graph, chain_budget).witness;
        } else if (chain_policy == "random") {
            trace = run_min(doc.graph, TieBreakPolicy::randomized(chain_seed));
        } else {
            trace = run_min(doc.graph, TieBreakPolicy::lowest());
        }
        if (chain_all_x) {
            out << all_x_summary_to_text(verify_chain_all_x(doc.graph, trace));
        } else if (x_opt->count() > 0) {
            out << report_to_text(verify_chain(
                doc.graph, trace, parse_int_list(chain_x, "--x")));
        } else {
            const AlphaResult exact = alpha_branch_and_bound(doc.graph);
            out << report_to_text(
                verify_chain(doc.graph, trace, exact.witness, exact.alpha));
        }
    });

    // ---- campaign ----
    auto* campaign_cmd =
        app.add_subcommand("campaign", "run a measurement campaign");
    std::string campaign_spec_path;
    std::string campaign_out;
    std::string c_family, c_policy = "lowest";
    std::string c_n, c_m, c_p;
    int c_instances = 1, c_alpha_budget = 40, c_kmin_budget = 14;
    std::uint64_t c_seed = 0;
    campaign_cmd->add_option(
        "file", campaign_spec_path,
        "campaign spec file (key=value lines), or - for stdin");
    campaign_cmd->add_option("--spec", campaign_spec_path,
                             "same as the positional spec file");
    campaign_cmd->add_option("--out", campaign_out,
                             "CSV output file (default stdout)");
    auto* c_family_opt = campaign_cmd->add_option(
        "--family", c_family, "gnm, gnp, or exhaustive (instead of a file)");
    campaign_cmd->add_option("--n", c_n, "n values, e.g. 8 or 8,10");
    campaign_cmd->add_option("--m", c_m, "m values (gnm)");
    campaign_cmd->add_option("--p", c_p, "p values (gnp)");
    campaign_cmd->add_option("--instances", c_instances, "instances per cell");
    campaign_cmd->add_option("--seed", c_seed, "campaign seed");
    campaign_cmd->add_option("--policy", c_policy, "lowest or random");
    campaign_cmd->add_option("--alpha-budget", c_alpha_budget,
                             "exact alpha cutoff");
    campaign_cmd->add_option("--kmin-budget", c_kmin_budget,
                             "exhaustive k cutoff");
    campaign_cmd->callback([&] {
        std::string text;
        if (!campaign_spec_path.empty()) {
            if (c_family_opt->count() > 0)
                throw BadParamsError(
                    "give either a spec file or --family flags, not both");
            text = read_input(campaign_spec_path, in);
        } else if (c_family_opt->count() > 0) {
            // route the flags through the same text parser as spec files
            std::ostringstream lines;
            lines << "family=" << c_family << '\n';
            if (!c_n.empty()) lines << "n=" << c_n << '\n';
            if (!c_m.empty()) lines << "m=" << c_m << '\n';
            if (!c_p.empty()) lines << "p=" << c_p << '\n';
            lines << "instances=" << c_instances << '\n'
                  << "seed=" << c_seed << '\n'
                  << "policy=" << c_policy << '\n'
                  << "alpha_budget=" << c_alpha_budget << '\n'
                  << "kmin_budget=" << c_kmin_budget << '\n';
            text = lines.str();
        } else {
            throw BadParamsError("campaign needs a spec file or --family");
        }
        const CampaignSpec spec = parse_campaign_spec_text(text);
        const CampaignResult result = run_campaign(spec);
        write_output(campaign_out, out, result.csv);
        err << result.summary;
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace minbound
