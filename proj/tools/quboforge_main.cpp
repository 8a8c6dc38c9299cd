// Command-line front end: generate problem QUBOs, solve them with the
// exact / simulated-annealing / QAOA back ends, and decode the winners
// back into domain objects. Output is JSON on stdout; warnings and errors
// go to stderr. Exit codes: 0 success, 2 usage or input-parse problem,
// 3 runtime or capacity problem.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "quboforge/anneal.hpp"
#include "quboforge/errors.hpp"
#include "quboforge/exact.hpp"
#include "quboforge/genomics.hpp"
#include "quboforge/graph.hpp"
#include "quboforge/io.hpp"
#include "quboforge/problems.hpp"
#include "quboforge/qaoa.hpp"

namespace {

using nlohmann::json;
using namespace quboforge;

int env_threads() {
    const char* raw = std::getenv("QUBO_FORGE_THREADS");
    if (!raw) return 1;
    const int v = std::atoi(raw);
    if (v < 1) throw ConfigError("QUBO_FORGE_THREADS must be a positive integer");
    return v;
}

struct SolverOptions {
    std::string solver = "exact";
    std::uint64_t seed = 0;
    int restarts = 10;
    int sweeps = 1000;
    int p_layers = 1;
    int shots = 1000;
    int qaoa_restarts = 3;

    void attach(CLI::App* cmd) {
        cmd->add_option("--solver", solver, "Solver back end")
            ->check(CLI::IsMember({"exact", "sa", "qaoa"}))
            ->capture_default_str();
        cmd->add_option("--seed", seed, "Master seed for sa/qaoa")->capture_default_str();
        cmd->add_option("--restarts", restarts, "Annealing restarts")->capture_default_str();
        cmd->add_option("--sweeps", sweeps, "Annealing sweeps per restart")->capture_default_str();
        cmd->add_option("--p-layers", p_layers, "QAOA layers")->capture_default_str();
        cmd->add_option("--shots", shots, "QAOA measurement shots")->capture_default_str();
        cmd->add_option("--qaoa-restarts", qaoa_restarts, "QAOA optimizer restarts")
            ->capture_default_str();
    }

    AnnealConfig anneal_config() const {
        AnnealConfig cfg;
        cfg.sweeps = sweeps;
        cfg.restarts = restarts;
        cfg.seed = seed;
        cfg.threads = std::min(env_threads(), restarts);
        return cfg;
    }

    QaoaConfig qaoa_config() const {
        QaoaConfig cfg;
        cfg.layers = p_layers;
        cfg.shots = shots;
        cfg.restarts = qaoa_restarts;
        cfg.seed = seed;
        return cfg;
    }

    /// Best assignment under the chosen back end.
    Sample best_sample(const QuboModel& model) const {
        if (solver == "exact") return solve_exact(model, 1).lowest();
        if (solver == "sa") return solve_sa(model, anneal_config()).lowest();
        return optimize(model, qaoa_config()).best;
    }
};

std::vector<std::int64_t> parse_value_list(const std::string& csv) {
    std::vector<std::int64_t> values;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        const auto comma = csv.find(',', pos);
        const std::string field =
            csv.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            std::size_t used = 0;
            values.push_back(std::stoll(field, &used));
            if (used != field.size()) throw std::invalid_argument(field);
        } catch (const std::exception&) {
            throw ConfigError("--values expects comma-separated integers, got \"" + field + "\"");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return values;
}

struct Output {
    json value;
    bool pretty = false;

    void print() const { std::cout << (pretty ? value.dump(2) : value.dump()) << '\n'; }
};

json run_partition(const std::string& values_csv, const SolverOptions& opts) {
    PartitionInstance inst{parse_value_list(values_csv)};
    const QuboModel model = number_partitioning(inst);
    const Sample best = opts.best_sample(model);
    const PartitionDecoding d = decode_partition(inst, best.assignment);
    return {{"energy", best.energy},
            {"bitstring", to_bitstring(best.assignment)},
            {"set_a", d.set_a},
            {"set_b", d.set_b},
            {"difference", d.difference}};
}

json run_maxcut(const std::string& graph_file, const SolverOptions& opts) {
    const Graph g = read_graph(graph_file);
    const QuboModel model = max_cut(g);
    const Sample best = opts.best_sample(model);
    const CutDecoding d = decode_cut(g, best.assignment);
    return {{"energy", best.energy},
            {"bitstring", to_bitstring(best.assignment)},
            {"cut_size", d.cut_size},
            {"set_a", d.set_a},
            {"set_b", d.set_b}};
}

json run_vertex_cover(const std::string& graph_file, double penalty, const SolverOptions& opts) {
    const Graph g = read_graph(graph_file);
    const QuboModel model = min_vertex_cover(g, penalty);
    const Sample best = opts.best_sample(model);
    const CoverCheck check = verify_cover(g, best.assignment);
    std::vector<int> cover;
    for (int v = 0; v < g.node_count; ++v) {
        if (best.assignment[v]) cover.push_back(v);
    }
    if (!check.is_cover) {
        std::cerr << "warning: selected set leaves " << check.uncovered.size()
                  << " edge(s) uncovered; raise --penalty to enforce covering\n";
    }
    json uncovered = json::array();
    for (const auto& [u, v] : check.uncovered) uncovered.push_back({u, v});
    return {{"energy", best.energy},
            {"bitstring", to_bitstring(best.assignment)},
            {"cover", cover},
            {"size", cover.size()},
            {"valid", check.is_cover},
            {"uncovered", uncovered}};
}

json run_genomics(const std::string& mutations_file, double alpha, std::optional<double> alpha_orth,
                  int pathways, const SolverOptions& opts) {
    const MutationTable table = parse_mutations(mutations_file);
    PathwayInstance inst = build_pathway_instance(table, alpha, pathways);
    if (alpha_orth) inst.orthogonality_weight = *alpha_orth;
    const QuboModel model = pathways >= 2 ? cancer_multi(inst) : cancer_single(inst);
    const Sample best = opts.best_sample(model);
    return {{"energy", best.energy},
            {"bitstring", to_bitstring(best.assignment)},
            {"genes", table.genes()},
            {"pathways", decode_pathways(inst, best.assignment)}};
}

json run_order_partition(const std::string& stocks_file, const std::string& risks_file,
                         double weight_money, double weight_risk, const SolverOptions& opts) {
    OrderPartitionInstance inst;
    read_stocks_csv(stocks_file, inst);
    read_risks_csv(risks_file, inst);
    inst.weight_money = weight_money;
    inst.weight_risk = weight_risk;
    const QuboModel model = order_partitioning(inst);
    const Sample best = opts.best_sample(model);
    const OrderPartitionDecoding d = decode_order_partition(inst, best.assignment);
    auto names = [&](const std::vector<int>& idx) {
        std::vector<std::string> out;
        out.reserve(idx.size());
        for (int j : idx) out.push_back(inst.stock_names[j]);
        return out;
    };
    return {{"energy", best.energy},
            {"bitstring", to_bitstring(best.assignment)},
            {"set_a", names(d.set_a)},
            {"set_b", names(d.set_b)},
            {"money_gap", d.money_gap},
            {"factor_gaps", d.factor_gaps}};
}

json run_solve(const std::string& qubo_file, std::size_t top_k, const SolverOptions& opts) {
    const QuboModel model = read_qubo(qubo_file);
    if (opts.solver == "exact") {
        return to_json(solve_exact(model, top_k));
    }
    if (opts.solver == "sa") {
        SampleSet set = solve_sa(model, opts.anneal_config());
        if (set.samples.size() > top_k) set.samples.resize(top_k);
        return to_json(set);
    }
    const QaoaResult r = optimize(model, opts.qaoa_config());
    std::vector<Sample> samples;
    samples.reserve(r.counts.size());
    for (const auto& [bits, count] : r.counts) {
        Assignment a = assignment_from_bitstring(bits);
        samples.push_back(Sample{a, evaluate(model, a), count, "qaoa"});
    }
    SampleSet set = SampleSet::collect(
        std::move(samples), fingerprint(model),
        {{"solver", "qaoa"}, {"seed", opts.seed}, {"layers", opts.p_layers},
         {"shots", opts.shots}, {"gammas", r.gammas}, {"betas", r.betas}});
    if (set.samples.size() > top_k) set.samples.resize(top_k);
    return to_json(set);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Build QUBO models for number partitioning, max-cut, vertex cover,"
                 " cancer-pathway identification and order partitioning, and solve them"
                 " exactly, by simulated annealing, or with a QAOA statevector simulator"};
    app.require_subcommand(1);

    Output output;
    app.add_flag("--pretty", output.pretty, "Indent the JSON output");

    SolverOptions opts;

    auto* partition = app.add_subcommand("partition", "Split a set of integers into equal halves");
    std::string values_csv;
    partition->add_option("--values", values_csv, "Comma-separated positive integers")->required();
    opts.attach(partition);
    partition->callback([&] { output.value = run_partition(values_csv, opts); });

    auto* maxcut = app.add_subcommand("maxcut", "Maximum cut of an undirected graph");
    std::string graph_file;
    maxcut->add_option("--graph", graph_file, "Graph file (\"n m\" header, \"u v\" lines)")
        ->required();
    opts.attach(maxcut);
    maxcut->callback([&] { output.value = run_maxcut(graph_file, opts); });

    auto* cover = app.add_subcommand("vertex-cover", "Minimum vertex cover via penalty QUBO");
    std::string cover_graph;
    double penalty = 2.0;
    cover->add_option("--graph", cover_graph, "Graph file")->required();
    cover->add_option("--penalty", penalty, "Covering penalty P")->capture_default_str();
    opts.attach(cover);
    cover->callback([&] { output.value = run_vertex_cover(cover_graph, penalty, opts); });

    auto* genomics = app.add_subcommand("genomics", "Cancer pathway identification from mutations");
    std::string mutations_file;
    double alpha = 1.0;
    std::optional<double> alpha_orth;
    int pathways = 1;
    genomics->add_option("--mutations", mutations_file, "TSV with header \"patient\\tgene\"")
        ->required();
    genomics->add_option("--alpha", alpha, "Coverage weight")->capture_default_str();
    genomics->add_option("--alpha-orth", alpha_orth,
                         "Orthogonality weight for --pathways >= 2 (defaults to --alpha)");
    genomics->add_option("--pathways", pathways, "Number of pathways")->capture_default_str();
    opts.attach(genomics);
    genomics->callback(
        [&] { output.value = run_genomics(mutations_file, alpha, alpha_orth, pathways, opts); });

    auto* order = app.add_subcommand("order-partition", "Balance stocks into two books");
    std::string stocks_file, risks_file;
    double weight_money = 1.0, weight_risk = 1.0;
    order->add_option("--stocks", stocks_file, "CSV with header \"stock,value\"")->required();
    order->add_option("--risks", risks_file, "CSV, header = stock names, one row per factor")
        ->required();
    order->add_option("--a", weight_money, "Money-balance weight")->capture_default_str();
    order->add_option("--b", weight_risk, "Risk-balance weight")->capture_default_str();
    opts.attach(order);
    order->callback([&] {
        output.value = run_order_partition(stocks_file, risks_file, weight_money, weight_risk, opts);
    });

    auto* solve = app.add_subcommand("solve", "Solve a QUBO JSON file, no decoding");
    std::string qubo_file;
    std::size_t top_k = 10;
    solve->add_option("--qubo", qubo_file, "QUBO JSON file")->required();
    solve->add_option("--top-k", top_k, "Samples to keep")->capture_default_str();
    opts.attach(solve);
    solve->callback([&] { output.value = run_solve(qubo_file, top_k, opts); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const quboforge::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const quboforge::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const quboforge::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }

    output.print();
    return 0;
}
