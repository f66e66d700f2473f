#include <fstream>
#include <json.hpp>
#include <memory>

#include "common.hpp"
#include "motifspectral/eval.hpp"
#include "motifspectral/mam.hpp"
#include "motifspectral/spectral.hpp"

namespace motifspectral::cli {

namespace {

struct EvalArgs {
    std::string pred, truth;
    std::string input;
    std::string mam;
    std::string motifs = "Ms";
    std::string closure = "func";
    std::string weighting = "mean";
    std::string output;
    bool json = false;
};

void emit(const std::string& name, double value, bool as_json) {
    if (as_json) {
        nlohmann::json j;
        j[name] = value;
        std::printf("%s\n", j.dump().c_str());
    } else {
        std::printf("%s=%.10g\n", name.c_str(), value);
    }
}

Partition load_pred(const EvalArgs& a) { return load_partition(a.pred); }

void run_pair_metric(const EvalArgs& a, const std::string& name) {
    const Partition pred = load_partition(a.pred);
    const Partition truth = load_partition(a.truth);
    // align lengths: partitions may cover different node ranges
    Partition p = pred, t = truth;
    const size_t n = std::max(p.assignment.size(), t.assignment.size());
    p.assignment.resize(n, -1);
    t.assignment.resize(n, -1);
    try {
        emit(name, name == "ari" ? ari(p, t) : nmi(p, t), a.json);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

void run_ncut(const EvalArgs& a) {
    const SymmetricSparseMatrix m = read_matrix_market(a.mam);
    Partition p = load_pred(a);
    p.assignment.resize(m.n(), -1);
    emit("ncut", ncut(m, p), a.json);
}

void run_cir(const EvalArgs& a) {
    const LoadedGraph lg = load_edge_list(a.input);
    const Partition pred = load_partition(a.pred, lg.external_ids);
    const CirMatrix c = cir_matrix(lg.graph, pred);
    std::ofstream out(a.output);
    if (!out) throw std::runtime_error("cannot write: " + a.output);
    for (int i = 0; i < c.k; ++i) {
        for (int j = 0; j < c.k; ++j) out << (j ? "," : "") << c.at(i, j);
        out << '\n';
    }
    std::printf("cir_matrix_written=%s k=%d\n", a.output.c_str(), c.k);
}

void run_sweep(const EvalArgs& a) {
    MamSpec spec;
    try {
        spec.motifs = parse_motif_list(a.motifs);
        spec.closure = parse_closure(a.closure);
        spec.weighting = parse_weighting(a.weighting);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const LoadedGraph lg = load_edge_list(a.input);
    const SymmetricSparseMatrix mam = build_mam(lg.graph, spec);
    const std::vector<index_t> comp = largest_component(mam);
    const SweepProfile prof = sweep_profile(restrict_to(mam, comp));

    std::ofstream out(a.output);
    if (!out) throw std::runtime_error("cannot write: " + a.output);
    out << "split,node,ncut\n";
    for (size_t s = 0; s + 1 < comp.size(); ++s)
        out << s + 1 << ',' << lg.external_ids[comp[prof.order[s]]] << ',' << prof.ncut_values[s]
            << '\n';
    emit("sweep_min_ncut", prof.min_ncut, a.json);
    emit("sweep_argmin_split", static_cast<double>(prof.argmin_split), a.json);
}

}  // namespace

void register_eval(CLI::App& app) {
    CLI::App* ev = app.add_subcommand("eval", "Clustering and cut metrics");
    ev->require_subcommand(1);
    ev->fallthrough();

    {
        auto args = std::make_shared<EvalArgs>();
        CLI::App* sub = ev->add_subcommand("ari", "Adjusted Rand index");
        sub->fallthrough();
        sub->add_option("--pred", args->pred)->required();
        sub->add_option("--truth", args->truth)->required();
        sub->add_flag("--json", args->json);
        sub->callback([args] { run_pair_metric(*args, "ari"); });
    }
    {
        auto args = std::make_shared<EvalArgs>();
        CLI::App* sub = ev->add_subcommand("nmi", "Normalized mutual information");
        sub->fallthrough();
        sub->add_option("--pred", args->pred)->required();
        sub->add_option("--truth", args->truth)->required();
        sub->add_flag("--json", args->json);
        sub->callback([args] { run_pair_metric(*args, "nmi"); });
    }
    {
        auto args = std::make_shared<EvalArgs>();
        CLI::App* sub = ev->add_subcommand("ncut", "Normalized cut of a partition");
        sub->fallthrough();
        sub->add_option("--mam", args->mam, "MatrixMarket similarity matrix")->required();
        sub->add_option("--pred", args->pred)->required();
        sub->add_flag("--json", args->json);
        sub->callback([args] { run_ncut(*args); });
    }
    {
        auto args = std::make_shared<EvalArgs>();
        CLI::App* sub = ev->add_subcommand("cir", "Cut imbalance ratio matrix");
        sub->fallthrough();
        sub->add_option("-i,--input", args->input, "Edge-list file")->required();
        sub->add_option("--pred", args->pred)->required();
        sub->add_option("-o,--output", args->output, "Output CSV")->required();
        sub->callback([args] { run_cir(*args); });
    }
    {
        auto args = std::make_shared<EvalArgs>();
        CLI::App* sub = ev->add_subcommand("sweep", "Sweep profile of a motif adjacency matrix");
        sub->fallthrough();
        sub->add_option("-i,--input", args->input, "Edge-list file")->required();
        sub->add_option("-m,--motifs", args->motifs, "Motif names");
        sub->add_option("--closure", args->closure, "func|struc");
        sub->add_option("--weighting", args->weighting, "unweighted|mean|product");
        sub->add_option("-o,--output", args->output, "Output CSV")->required();
        sub->add_flag("--json", args->json);
        sub->callback([args] { run_sweep(*args); });
    }
}

}  // namespace motifspectral::cli
