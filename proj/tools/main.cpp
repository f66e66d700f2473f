#include <cstdio>
#include <cstdlib>
#include <exception>

#include "common.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif
#include <Eigen/Core>

namespace motifspectral::cli {

int& global_threads() {
    static int threads = 0;
    return threads;
}

void setup_threads(int threads) {
    if (threads <= 0) {
        if (const char* env = std::getenv("MOTIF_SPECTRAL_THREADS")) threads = std::atoi(env);
    }
    if (threads > 0) {
#ifdef _OPENMP
        omp_set_num_threads(threads);
#endif
        Eigen::setNbThreads(threads);
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<MotifName> parse_motif_list(const std::string& s) {
    std::vector<MotifName> out;
    for (const std::string& part : split(s, ',')) {
        try {
            out.push_back(parse_motif_name(part));
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
    return out;
}

std::vector<index_t> parse_sizes(const std::string& s) {
    std::vector<index_t> out;
    try {
        for (const std::string& part : split(s, ',')) out.push_back(std::stoll(part));
    } catch (const std::exception&) {
        throw UsageError("malformed size list: " + s);
    }
    return out;
}

std::vector<std::vector<double>> parse_matrix(const std::string& s) {
    std::vector<std::vector<double>> out;
    try {
        for (const std::string& row : split(s, ';')) {
            out.emplace_back();
            for (const std::string& cell : split(row, ',')) out.back().push_back(std::stod(cell));
        }
    } catch (const std::exception&) {
        throw UsageError("malformed matrix: " + s);
    }
    for (const auto& row : out)
        if (row.size() != out.front().size()) throw UsageError("ragged matrix: " + s);
    return out;
}

}  // namespace motifspectral::cli

int main(int argc, char** argv) {
    using namespace motifspectral::cli;

    CLI::App app{"Motif-based spectral clustering of weighted directed networks"};
    app.require_subcommand(1);

    app.add_option("--threads", global_threads(), "Cap internal parallelism (default: all cores)");

    register_mam(app);
    register_cluster(app);
    register_bipartite(app);
    register_generate(app);
    register_eval(app);
    register_bench(app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const UsageError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
