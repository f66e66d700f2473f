#include <sys/resource.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <memory>
#include <new>

#include "common.hpp"
#include "motifspectral/mam.hpp"
#include "motifspectral/synth.hpp"

namespace motifspectral::cli {

namespace {

// dense similarity buffers are O(n^2) doubles; above this the run is
// skipped unless forced
constexpr index_t kDenseGuard = 30000;

struct BenchArgs {
    std::string model = "er";
    std::string ns;
    double param = 10.0;
    std::string motifs = "M1,M8,M11";
    std::string methods = "dense,sparse";
    std::string closure = "func";
    std::string weighting = "mean";
    int repeats = 5;
    std::uint64_t seed = 1;
    bool seed_given = false;
    bool force = false;
    std::string output;
};

long peak_rss_bytes() {
    rusage u{};
    getrusage(RUSAGE_SELF, &u);
    return u.ru_maxrss * 1024L;  // Linux reports KiB
}

double now() {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

void run(const BenchArgs& a) {
    setup_threads(global_threads());
    if (!a.seed_given) throw UsageError("--seed is required");
    if (a.repeats < 1) throw UsageError("--repeats must be >= 1");
    if (a.model != "er" && a.model != "ba") throw UsageError("--model must be er or ba");

    std::vector<index_t> ns = parse_sizes(a.ns);
    std::vector<MotifName> motifs = parse_motif_list(a.motifs);
    std::vector<std::string> methods = split(a.methods, ',');
    Closure closure;
    Weighting weighting;
    for (const std::string& m : methods)
        if (m != "dense" && m != "sparse") throw UsageError("--methods entries must be dense|sparse");
    try {
        closure = parse_closure(a.closure);
        weighting = parse_weighting(a.weighting);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    std::ofstream out(a.output);
    if (!out) throw std::runtime_error("cannot write: " + a.output);
    out << "model,n,param,motif,method,repeats,mean_seconds,stddev_seconds,peak_rss_bytes,status\n";

    for (index_t n : ns) {
        // graph generation is excluded from the measured interval
        DirectedGraph g;
        if (a.model == "er") {
            const double p = a.param / static_cast<double>(n);
            g = sample_er(n, std::min(1.0, p), a.seed);
        } else {
            g = sample_ba(n, static_cast<index_t>(a.param), a.seed);
        }

        for (MotifName motif : motifs) {
            for (const std::string& method : methods) {
                std::string status = "ok";
                std::vector<double> times;
                if (method == "dense" && n > kDenseGuard && !a.force) {
                    status = "DNF";  // refused: quadratic memory
                } else {
                    MamSpec spec{{motif}, closure, weighting,
                                 method == "dense" ? Method::Dense : Method::Sparse};
                    try {
                        for (int r = 0; r < a.repeats; ++r) {
                            const double t0 = now();
                            const SymmetricSparseMatrix mam = build_mam(g, spec);
                            const double t1 = now();
                            times.push_back(t1 - t0);
                            if (mam.n() != n) status = "bad";  // keep the optimizer honest
                        }
                    } catch (const std::bad_alloc&) {
                        status = "DNF";
                        times.clear();
                    }
                }
                double mean = 0.0, sd = 0.0;
                if (!times.empty()) {
                    for (double t : times) mean += t;
                    mean /= static_cast<double>(times.size());
                    if (times.size() > 1) {
                        for (double t : times) sd += (t - mean) * (t - mean);
                        sd = std::sqrt(sd / static_cast<double>(times.size() - 1));
                    }
                }
                out << a.model << ',' << n << ',' << a.param << ',' << to_string(motif) << ','
                    << method << ',' << a.repeats << ',' << (times.empty() ? 0.0 : mean) << ','
                    << sd << ',' << peak_rss_bytes() << ',' << status << '\n';
                out.flush();
                std::printf("%s n=%lld %s %s: %s mean=%.3fs\n", a.model.c_str(),
                            static_cast<long long>(n), to_string(motif).c_str(), method.c_str(),
                            status.c_str(), times.empty() ? 0.0 : mean);
            }
        }
    }
}

}  // namespace

void register_bench(CLI::App& app) {
    auto args = std::make_shared<BenchArgs>();
    CLI::App* sub = app.add_subcommand("bench", "Motif adjacency matrix scalability benchmark");
    sub->fallthrough();
    sub->add_option("--model", args->model, "er|ba");
    sub->add_option("--ns", args->ns, "Comma-separated graph sizes")->required();
    sub->add_option("--param", args->param, "ER: p numerator (p = param/n); BA: m");
    sub->add_option("--motifs", args->motifs, "Motifs to benchmark");
    sub->add_option("--methods", args->methods, "dense,sparse");
    sub->add_option("--closure", args->closure, "func|struc");
    sub->add_option("--weighting", args->weighting, "unweighted|mean|product");
    sub->add_option("--repeats", args->repeats, "Repeats per cell");
    sub->add_option("--seed", args->seed, "RNG seed (required)")
        ->each([args](const std::string&) { args->seed_given = true; });
    sub->add_flag("--force", args->force, "Run the dense method past the size guard");
    sub->add_option("-o,--output", args->output, "Report CSV")->required();
    sub->callback([args] { run(*args); });
}

}  // namespace motifspectral::cli
