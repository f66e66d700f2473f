#include <memory>

#include "common.hpp"
#include "motifspectral/mam.hpp"

namespace motifspectral::cli {

namespace {

struct MamArgs {
    std::string input;
    std::string motifs = "Ms";
    std::string closure = "func";
    std::string weighting = "mean";
    std::string method = "auto";
    std::string output;
    bool drop_self_loops = false;
    double weight_cap = 0.0;
};

void run(const MamArgs& a) {
    setup_threads(global_threads());
    MamSpec spec;
    try {
        spec.motifs = parse_motif_list(a.motifs);
        spec.closure = parse_closure(a.closure);
        spec.weighting = parse_weighting(a.weighting);
        spec.method = parse_method(a.method);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    LoadOptions opts;
    opts.drop_self_loops = a.drop_self_loops;
    if (a.weight_cap > 0) opts.weight_cap = a.weight_cap;
    const LoadedGraph lg = load_edge_list(a.input, opts);
    const SymmetricSparseMatrix mam = build_mam(lg.graph, spec);
    write_matrix_market(a.output, mam);
    save_id_mapping(a.output + ".idmap.csv", lg.external_ids);
}

}  // namespace

void register_mam(CLI::App& app) {
    auto args = std::make_shared<MamArgs>();
    CLI::App* sub = app.add_subcommand("mam", "Compute a motif adjacency matrix");
    sub->fallthrough();
    sub->add_option("-i,--input", args->input, "Edge-list file")->required();
    sub->add_option("-m,--motifs", args->motifs, "Comma-separated motif names (summed)");
    sub->add_option("--closure", args->closure, "func|struc");
    sub->add_option("--weighting", args->weighting, "unweighted|mean|product");
    sub->add_option("--method", args->method, "dense|sparse|auto");
    sub->add_option("-o,--output", args->output, "Output MatrixMarket file")->required();
    sub->add_flag("--drop-self-loops", args->drop_self_loops, "Silently drop self-loops");
    sub->add_option("--weight-cap", args->weight_cap, "Clamp weights above this value");
    sub->callback([args] { run(*args); });
}

}  // namespace motifspectral::cli
