#pragma once

#include <cmath>
#include <vector>

#include "motifspectral/graph.hpp"
#include "motifspectral/rng.hpp"
#include "motifspectral/symmetric.hpp"

namespace motifspectral::testing {

/// Random weighted digraph: each ordered pair independently an edge with
/// the given probability; weights mix small integers and non-integers.
inline DirectedGraph random_graph(index_t n, double edge_prob, std::uint64_t seed,
                                  bool integer_weights_only = false) {
    SplitMix64 rng = rng_stream(seed, 0xfeed);
    std::vector<Edge> edges;
    for (index_t i = 0; i < n; ++i)
        for (index_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (rng.next_double() >= edge_prob) continue;
            double w = 1.0 + static_cast<double>(rng.next_below(10));
            if (!integer_weights_only && rng.next_double() < 0.5) w += rng.next_double();
            edges.push_back({i, j, w});
        }
    return DirectedGraph(n, std::move(edges));
}

inline double max_entry_diff(const SymmetricSparseMatrix& a, const SymmetricSparseMatrix& b) {
    double d = 0.0;
    for (index_t i = 0; i < a.n(); ++i)
        for (index_t j = i; j < a.n(); ++j) d = std::max(d, std::abs(a.at(i, j) - b.at(i, j)));
    return d;
}

}  // namespace motifspectral::testing
