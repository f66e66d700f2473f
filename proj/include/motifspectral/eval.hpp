#pragma once

#include <vector>

#include "motifspectral/graph.hpp"
#include "motifspectral/spectral.hpp"
#include "motifspectral/symmetric.hpp"

namespace motifspectral {

/// Adjusted Rand index under the permutation model. Nodes labeled -1 in
/// either partition are excluded, so the comparison runs over the commonly
/// clustered nodes. Throws if none remain.
double ari(const Partition& a, const Partition& b);

/// Mutual information normalized by the arithmetic mean of the two label
/// entropies; 0 by convention when both entropies vanish. Same -1
/// exclusion as ari.
double nmi(const Partition& a, const Partition& b);

/// Normalized cut of a full partition of m: half the sum over parts of
/// cut(P, ~P) / vol(P). Requires every node clustered and every part of
/// positive volume.
double ncut(const SymmetricSparseMatrix& m, const Partition& p);

/// Ncut values of every prefix split of the vertex ordering induced by
/// the second random-walk Laplacian eigenvector (ties broken by node id).
struct SweepProfile {
    std::vector<index_t> order;      // all n vertices
    std::vector<double> ncut_values; // n-1 prefix splits
    index_t argmin_split = 0;        // prefix length achieving the minimum
    double min_ncut = 0.0;
};

SweepProfile sweep_profile(const SymmetricSparseMatrix& m);

/// Antisymmetric k x k matrix of cut imbalance ratios between cluster
/// pairs; entry (i, j) is positive when directed flow i -> j dominates.
/// Pairs with no flow either way get 0. Unclustered nodes are ignored.
struct CirMatrix {
    int k = 0;
    std::vector<double> values;  // row-major k x k

    double at(int i, int j) const { return values[static_cast<size_t>(i) * k + j]; }
};

CirMatrix cir_matrix(const DirectedGraph& g, const Partition& p);

/// Weighted co-citation baseline for bipartite graphs: A A^T restricted to
/// the sources with a zeroed diagonal, usable as a cluster() input.
SymmetricSparseMatrix aat_similarity(const DirectedGraph& g, std::span<const index_t> sources,
                                     std::span<const index_t> destinations);

}  // namespace motifspectral
