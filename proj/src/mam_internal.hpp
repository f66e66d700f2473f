#pragma once

#include <Eigen/Dense>

#include "motifspectral/graph.hpp"
#include "motifspectral/mam.hpp"
#include "motifspectral/motif.hpp"

// Shared term model for the dense and sparse MAM builders.
//
// Every formula is a sum of terms A o (B C) where o is the entry-wise
// product and A, B, C come from the indicator/adjacency family. A factor
// is described by its pair kind, whether the matrix is transposed, and
// whether the weighted counterpart is used:
//
//   Single  -> J / G   (functional)   Js / Gs  (structural)
//   Double  -> Jd / Gd (both closures)
//   Missing -> vertex-distinct (functional) or missing-edge (structural)
//              indicator; never materialized, always expanded in place
//
// Two-vertex motifs use only the Hadamard slot.

namespace motifspectral::detail {

struct Factor {
    PairKind kind;
    bool transposed = false;
    bool weighted = false;
};

struct Term {
    Factor had, left, right;
};

/// Hand-written dense formulation per motif: M = coef * (C + C^T + C'),
/// with C' holding the terms that are already symmetric and must be
/// counted once. The product lists collapse each automorphism class to a
/// single all-weighted term and drop the leading mean coefficient.
struct MotifFormula {
    double mean_coef;            // 1 / |E_M|
    std::vector<Term> c_mean;
    std::vector<Term> cp_mean;
    std::vector<Term> c_prod;
    std::vector<Term> cp_prod;
};

const MotifFormula& motif_formula(MotifName name);

/// Flat formula derived from the anchored automorphism class reps:
/// M = coef * sum(terms). The classes already cover both orientations of
/// each anchored pair, so no transpose assembly is needed.
struct DerivedFormula {
    double coef;
    std::vector<Term> terms;
};

DerivedFormula derive_formula(const Motif& motif, Weighting weighting);

/// Evaluates coef * (C + C^T + C') over the given matrices.
/// `two_vertex` switches the engines to Hadamard-only terms.
CsrMatrix eval_sparse(const GraphMatrices& gm, Closure closure, bool two_vertex, double coef,
                      std::span<const Term> c_terms, std::span<const Term> cp_terms);

Eigen::MatrixXd eval_dense(const GraphMatrices& gm, Closure closure, bool two_vertex, double coef,
                           std::span<const Term> c_terms, std::span<const Term> cp_terms);

/// Flat-sum evaluation (dense) for the derived route: coef * sum(terms).
Eigen::MatrixXd eval_dense_flat(const GraphMatrices& gm, Closure closure, bool two_vertex,
                                double coef, std::span<const Term> terms);

/// Relative threshold below which assembled MAM entries are treated as
/// cancellation noise and dropped.
inline double prune_threshold(double max_abs) { return 1e-12 * (1.0 + max_abs); }

SymmetricSparseMatrix dense_to_symmetric(const Eigen::MatrixXd& m);
SymmetricSparseMatrix sparse_to_symmetric(const CsrMatrix& m);

}  // namespace motifspectral::detail
