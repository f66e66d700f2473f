#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "motifspectral/graph.hpp"
#include "motifspectral/rng.hpp"
#include "motifspectral/spectral.hpp"

namespace motifspectral {

/// Directed stochastic block model. Each ordered pair (i, j), i != j, gets
/// an edge with probability connection[g_i][g_j]; with a weight matrix
/// present, the weight is an independent Poisson draw with the block pair's
/// mean, and a zero draw removes the edge.
struct DsbmParams {
    std::vector<index_t> block_sizes;
    std::vector<std::vector<double>> connection;          // k x k, entries in [0, 1]
    std::optional<std::vector<std::vector<double>>> weights;  // k x k Poisson means
    std::uint64_t seed = 0;
};

struct DsbmSample {
    DirectedGraph graph;
    Partition planted;
};

DsbmSample sample_dsbm(const DsbmParams& p);

/// Bipartite stochastic block model: a DSBM with block connection matrix
/// [[0, Fb], [0, 0]], sources first. Planted partitions carry -1 on the
/// opposite side.
struct BsbmParams {
    std::vector<index_t> source_sizes;
    std::vector<index_t> destination_sizes;
    std::vector<std::vector<double>> connection;          // kS x kD
    std::optional<std::vector<std::vector<double>>> weights;  // kS x kD
    std::uint64_t seed = 0;
};

struct BsbmSample {
    DirectedGraph graph;
    Partition planted_sources;
    Partition planted_destinations;
    std::vector<index_t> sources;
    std::vector<index_t> destinations;
};

BsbmSample sample_bsbm(const BsbmParams& p);

/// Directed Erdos-Renyi: each ordered pair i != j is an edge independently
/// with probability p, weight 1.
DirectedGraph sample_er(index_t n, double p, std::uint64_t seed);

/// Barabasi-Albert preferential attachment, emitted as reciprocated edge
/// pairs (each undirected edge becomes two directed edges of weight 1).
/// Starts from m isolated seed vertices; the first added vertex connects
/// to all of them, later vertices attach to m distinct targets with
/// probability proportional to current degree.
DirectedGraph sample_ba(index_t n, index_t m, std::uint64_t seed);

}  // namespace motifspectral
