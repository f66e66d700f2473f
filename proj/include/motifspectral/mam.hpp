#pragma once

#include <utility>
#include <vector>

#include "motifspectral/graph.hpp"
#include "motifspectral/motif.hpp"
#include "motifspectral/symmetric.hpp"

namespace motifspectral {

/// Functional: motif occurs as a subgraph (extra edges allowed).
/// Structural: motif occurs as an induced subgraph.
enum class Closure { Functional, Structural };

/// How a motif instance is weighted when accumulated into the MAM:
/// Unweighted counts instances, Mean uses the average edge weight,
/// Product multiplies the per-pair weights (a reciprocated pair
/// contributes the sum of its two directions).
enum class Weighting { Unweighted, Mean, Product };

enum class Method { Dense, Sparse, Auto };

/// Edge density below which Method::Auto picks the sparse path.
inline constexpr double kAutoSparseDensity = 0.05;

struct MamSpec {
    std::vector<MotifName> motifs;
    Closure closure = Closure::Functional;
    Weighting weighting = Weighting::Mean;
    Method method = Method::Auto;
};

Closure parse_closure(const std::string& s);      // "func" | "struc"
Weighting parse_weighting(const std::string& s);  // "unweighted" | "mean" | "product"
Method parse_method(const std::string& s);        // "dense" | "sparse" | "auto"

/// Motif adjacency matrix of the graph, summed over the motifs in the
/// spec. Dense and sparse methods return equal matrices up to rounding.
SymmetricSparseMatrix build_mam(const DirectedGraph& g, const MamSpec& spec);

/// Reference construction evaluated directly from the motif's anchored
/// automorphism class representatives (dense arithmetic, one term per
/// class). Exists to validate the hand-written formula tables; build_mam
/// is the fast path.
SymmetricSparseMatrix generic_mam(const DirectedGraph& g, MotifName name, Closure closure,
                                  Weighting weighting);

/// Ground-truth oracle: enumerates every instance of the motif (distinct
/// edge sets over all injective vertex maps), finds each instance's
/// anchored pairs over all isomorphisms, and accumulates instance weights.
/// Exponential in the motif size, so guarded by the vertex bound.
SymmetricSparseMatrix brute_force_mam(const DirectedGraph& g, const MamSpec& spec,
                                      index_t oracle_bound = 12);

/// Checks that every edge goes from `sources` to `destinations` and that
/// the two sets partition the vertices; throws naming an offending edge.
void validate_bipartite(const DirectedGraph& g, std::span<const index_t> sources,
                        std::span<const index_t> destinations);

/// Collider MAM restricted to the source vertices and expander MAM
/// restricted to the destination vertices; the weighted one-mode
/// projections of a bipartite graph. Functional and structural coincide
/// on bipartite input.
std::pair<SymmetricSparseMatrix, SymmetricSparseMatrix> bipartite_mams(
    const DirectedGraph& g, std::span<const index_t> sources,
    std::span<const index_t> destinations, Weighting weighting);

/// Matrix Market coordinate output, symmetric, 1-based, lower triangle.
void write_matrix_market(const std::string& path, const SymmetricSparseMatrix& m);
SymmetricSparseMatrix read_matrix_market(const std::string& path);

}  // namespace motifspectral
