#include <memory>

#include "common.hpp"
#include "motifspectral/spectral.hpp"
#include "motifspectral/synth.hpp"

namespace motifspectral::cli {

namespace {

struct GenArgs {
    std::string sizes;
    std::string source_sizes, dest_sizes;
    std::string connection;
    std::string weights;
    std::string output;
    std::string truth;
    index_t n = 0;
    double p = 0.0;
    index_t m = 0;
    std::uint64_t seed = 0;
    bool seed_given = false;
};

void require_seed(const GenArgs& a) {
    if (!a.seed_given) throw UsageError("--seed is required; generators never draw silent entropy");
}

void write_outputs(const DirectedGraph& g, const Partition* truth, const GenArgs& a) {
    save_edge_list(a.output, g);
    if (truth && !a.truth.empty()) save_partition(a.truth, *truth);
}

void run_dsbm(const GenArgs& a) {
    require_seed(a);
    DsbmParams p;
    p.block_sizes = parse_sizes(a.sizes);
    p.connection = parse_matrix(a.connection);
    if (!a.weights.empty()) p.weights = parse_matrix(a.weights);
    p.seed = a.seed;
    try {
        const DsbmSample s = sample_dsbm(p);
        write_outputs(s.graph, &s.planted, a);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

void run_bsbm(const GenArgs& a) {
    require_seed(a);
    BsbmParams p;
    p.source_sizes = parse_sizes(a.source_sizes);
    p.destination_sizes = parse_sizes(a.dest_sizes);
    p.connection = parse_matrix(a.connection);
    if (!a.weights.empty()) p.weights = parse_matrix(a.weights);
    p.seed = a.seed;
    try {
        const BsbmSample s = sample_bsbm(p);
        // single truth file: source blocks first, then destination blocks
        Partition combined;
        combined.k = static_cast<int>(p.source_sizes.size() + p.destination_sizes.size());
        combined.assignment.resize(s.graph.n());
        for (index_t v = 0; v < s.graph.n(); ++v) {
            const int sb = s.planted_sources.assignment[v];
            combined.assignment[v] =
                sb >= 0 ? sb
                        : s.planted_destinations.assignment[v] +
                              static_cast<int>(p.source_sizes.size());
        }
        write_outputs(s.graph, &combined, a);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

void run_er(const GenArgs& a) {
    require_seed(a);
    try {
        write_outputs(sample_er(a.n, a.p, a.seed), nullptr, a);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

void run_ba(const GenArgs& a) {
    require_seed(a);
    try {
        write_outputs(sample_ba(a.n, a.m, a.seed), nullptr, a);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

void add_seed_and_output(CLI::App* sub, std::shared_ptr<GenArgs> args, bool with_truth) {
    sub->add_option("--seed", args->seed, "RNG seed (required)")
        ->each([args](const std::string&) { args->seed_given = true; });
    sub->add_option("-o,--output", args->output, "Output edge-list file")->required();
    if (with_truth) sub->add_option("--truth", args->truth, "Ground-truth partition CSV");
}

}  // namespace

void register_generate(CLI::App& app) {
    CLI::App* gen = app.add_subcommand("generate", "Sample synthetic graphs");
    gen->require_subcommand(1);
    gen->fallthrough();

    {
        auto args = std::make_shared<GenArgs>();
        CLI::App* sub = gen->add_subcommand("dsbm", "Directed stochastic block model");
        sub->fallthrough();
        sub->add_option("--sizes", args->sizes, "Block sizes, e.g. 100,100")->required();
        sub->add_option("--connection", args->connection,
                        "Connection matrix, rows ';'-separated, e.g. \"0.2,0.5;0.05,0.2\"")
            ->required();
        sub->add_option("--weights", args->weights, "Poisson weight means (same shape)");
        add_seed_and_output(sub, args, true);
        sub->callback([args] { run_dsbm(*args); });
    }
    {
        auto args = std::make_shared<GenArgs>();
        CLI::App* sub = gen->add_subcommand("bsbm", "Bipartite stochastic block model");
        sub->fallthrough();
        sub->add_option("--source-sizes", args->source_sizes, "Source block sizes")->required();
        sub->add_option("--dest-sizes", args->dest_sizes, "Destination block sizes")->required();
        sub->add_option("--connection", args->connection, "kS x kD connection matrix")->required();
        sub->add_option("--weights", args->weights, "kS x kD Poisson weight means");
        add_seed_and_output(sub, args, true);
        sub->callback([args] { run_bsbm(*args); });
    }
    {
        auto args = std::make_shared<GenArgs>();
        CLI::App* sub = gen->add_subcommand("er", "Directed Erdos-Renyi");
        sub->fallthrough();
        sub->add_option("--n", args->n, "Vertices")->required();
        sub->add_option("--p", args->p, "Edge probability")->required();
        add_seed_and_output(sub, args, false);
        sub->callback([args] { run_er(*args); });
    }
    {
        auto args = std::make_shared<GenArgs>();
        CLI::App* sub = gen->add_subcommand("ba", "Barabasi-Albert (reciprocated pairs)");
        sub->fallthrough();
        sub->add_option("--n", args->n, "Vertices")->required();
        sub->add_option("--m", args->m, "Edges per added vertex")->required();
        add_seed_and_output(sub, args, false);
        sub->callback([args] { run_ba(*args); });
    }
}

}  // namespace motifspectral::cli
