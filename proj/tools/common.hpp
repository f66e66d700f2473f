#pragma once

#include <CLI11.hpp>
#include <stdexcept>
#include <string>
#include <vector>

#include "motifspectral/graph.hpp"
#include "motifspectral/motif.hpp"

namespace motifspectral::cli {

/// Validation problems exit with status 2, runtime failures with 1.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void setup_threads(int threads);  // 0 = default (all cores / env override)
int& global_threads();            // set by the top-level --threads option

std::vector<std::string> split(const std::string& s, char sep);

/// "M8,M10" -> motif names
std::vector<MotifName> parse_motif_list(const std::string& s);

/// "100,100" -> sizes
std::vector<index_t> parse_sizes(const std::string& s);

/// Rows separated by ';', entries by ',': "0.2,0.5;0.05,0.2"
std::vector<std::vector<double>> parse_matrix(const std::string& s);

void register_mam(CLI::App& app);
void register_cluster(CLI::App& app);
void register_bipartite(CLI::App& app);
void register_generate(CLI::App& app);
void register_eval(CLI::App& app);
void register_bench(CLI::App& app);

}  // namespace motifspectral::cli
