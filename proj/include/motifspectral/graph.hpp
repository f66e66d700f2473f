#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "motifspectral/csr.hpp"

namespace motifspectral {

struct Edge {
    index_t src;
    index_t dst;
    double weight;
    bool operator==(const Edge&) const = default;
};

/// Simple weighted directed graph: vertex ids in [0, n), no self-loops,
/// no duplicate (src, dst) pairs, strictly positive finite weights.
/// Immutable after construction.
class DirectedGraph {
public:
    DirectedGraph() = default;

    /// Validates the invariants; edges are stored sorted by (src, dst).
    DirectedGraph(index_t n, std::vector<Edge> edges);

    index_t n() const { return n_; }
    index_t num_edges() const { return static_cast<index_t>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    /// Weighted adjacency matrix G with G(i,j) = weight of edge (i,j).
    CsrMatrix adjacency() const;

    bool has_edge(index_t src, index_t dst) const;
    double weight(index_t src, index_t dst) const;  // 0 if absent

private:
    index_t n_ = 0;
    std::vector<Edge> edges_;  // sorted by (src, dst)
};

/// Indicator and weighted adjacency matrices derived from a graph:
///   J   directed indicator            G   directed weights
///   Js  single-edge (unreciprocated)  Gs  single-edge weights
///   Jd  double-edge (reciprocated)    Gd  two-direction weight sums
/// The missing-edge and vertex-distinct indicators are never materialized;
/// they are expanded where needed via 1 - (I + Js + Js' + Jd) and 1 - I.
struct GraphMatrices {
    CsrMatrix J, Js, Jd;
    CsrMatrix G, Gs, Gd;
};

GraphMatrices build_matrices(const DirectedGraph& g);

/// The same matrices with all edge weights replaced by 1
/// (so Gd entries become 2 for reciprocated pairs).
GraphMatrices unit_weight_matrices(const GraphMatrices& m);

struct LoadOptions {
    bool drop_self_loops = false;
    std::optional<double> weight_cap;
};

struct LoadedGraph {
    DirectedGraph graph;
    /// external_ids[i] is the id in the input file for internal vertex i;
    /// ascending, so internal ids follow the external numeric order.
    std::vector<index_t> external_ids;
};

/// Reads a tab-separated edge list: `source <TAB> target [<TAB> weight]`,
/// weight defaulting to 1.0; lines starting with '#' and blank lines are
/// ignored. Vertex ids may be arbitrary non-negative integers and are
/// remapped to contiguous 0-based ids in ascending numeric order.
/// Duplicate (src, dst) pairs are an error rather than being summed, so
/// accidental multi-edges in input data are surfaced instead of hidden.
LoadedGraph load_edge_list(const std::string& path, const LoadOptions& opts = {});

/// Writes the same format, one edge per line, using the given external ids
/// (or internal ids when empty). Weights round-trip bit-identically.
void save_edge_list(const std::string& path, const DirectedGraph& g,
                    const std::vector<index_t>& external_ids = {});

/// CSV with header `external_id,internal_id`.
void save_id_mapping(const std::string& path, const std::vector<index_t>& external_ids);

}  // namespace motifspectral
