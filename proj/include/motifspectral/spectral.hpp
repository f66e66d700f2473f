#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "motifspectral/graph.hpp"
#include "motifspectral/mam.hpp"
#include "motifspectral/symmetric.hpp"

namespace motifspectral {

/// Random-walk Laplacian I - D^-1 G of a symmetric similarity matrix.
/// Every row of the input must have positive sum; restrict to the largest
/// connected component first if it does not.
CsrMatrix rw_laplacian(const SymmetricSparseMatrix& m);

/// Implicit operator for the regularized random-walk Laplacian
///   I - (D + tau I)^-1 (G + tau 11T / n),
/// kept as a sparse part plus a rank-one correction so the dense tau/n
/// term is never materialized. tau = 0 reduces exactly to rw_laplacian.
class RwLaplacianOp {
public:
    RwLaplacianOp(const SymmetricSparseMatrix& m, double tau);

    index_t n() const { return g_.n(); }
    double tau() const { return tau_; }

    /// y = L_rw x.
    void apply(std::span<const double> x, std::span<double> y) const;

    /// y = L_sym x where L_sym = Dt^1/2 L_rw Dt^-1/2 (the symmetric
    /// similarity transform used by the eigensolver).
    void apply_sym(std::span<const double> x, std::span<double> y) const;

    /// Dense materialization of L_rw; intended for small n and tests.
    Eigen::MatrixXd materialize() const;

    std::span<const double> degrees() const { return deg_; }

private:
    CsrMatrix g_;               // full symmetric similarity
    std::vector<double> deg_;   // weighted degrees + tau
    std::vector<double> isqrt_; // (deg + tau)^-1/2
    double tau_;
};

RwLaplacianOp regularized_rw_laplacian(const SymmetricSparseMatrix& m, double tau);

/// Eigenvector embedding: rows are vertices, columns are the eigenvectors
/// of the l smallest eigenvalues with the first (constant) column dropped.
struct Embedding {
    Eigen::MatrixXd points;            // n x (l-1)
    std::vector<double> eigenvalues;   // l values, ascending, within [0, 2]
};

/// Solves the l smallest eigenpairs via the symmetric transform: dense
/// direct solve for small problems, Lanczos with full reorthogonalization
/// otherwise. Eigenvector signs are fixed so the entry of largest
/// magnitude is positive. Throws on non-convergence with iteration
/// diagnostics in the message.
Embedding embed(const RwLaplacianOp& op, index_t l);

struct Partition {
    std::vector<int> assignment;  // label in [0, k) or -1 for unclustered
    int k = 0;

    index_t clustered_count() const;
};

/// Regularization setting: absent, an explicit value, or a multiple of the
/// mean weighted degree of the matrix being clustered.
struct TauSetting {
    enum class Mode { None, Value, MeanDegree };
    Mode mode = Mode::None;
    double value = 0.0;  // the value itself, or the mean-degree multiplier

    static TauSetting none() { return {}; }
    static TauSetting of(double v) { return {Mode::Value, v}; }
    static TauSetting mean_degree(double scale = 1.0) { return {Mode::MeanDegree, scale}; }
    static TauSetting parse(const std::string& s);  // number | "mean-degree" | "<scale>*mean-degree"
};

struct ClusterConfig {
    int k = 2;
    int l = 2;
    int restarts = 10;
    int max_iters = 300;
    double tol = 1e-10;
    std::uint64_t seed = 0;
    TauSetting tau;
};

/// k-means++ seeding plus Lloyd iterations, best of `restarts` restarts
/// with per-restart derived seeds. Deterministic given the seed; labels
/// are canonicalized by first occurrence.
Partition kmeans_pp(const Eigen::MatrixXd& points, int k, int restarts, int max_iters, double tol,
                    std::uint64_t seed);

/// Random-walk spectral clustering of a connected similarity matrix
/// (with optional regularization, in which case connectivity is not
/// required).
Partition cluster(const SymmetricSparseMatrix& m, const ClusterConfig& cfg);

struct MotifClusterResult {
    Partition partition;                 // over all n vertices; -1 outside the component
    std::vector<index_t> component;      // vertices that were clustered
    double final_tau = 0.0;              // resolved regularization value
};

/// Motif-based spectral clustering: build the MAM, restrict to its largest
/// connected component (skipped when tau > 0, which connects the graph),
/// and cluster. Vertices outside the component get label -1.
MotifClusterResult motif_cluster(const DirectedGraph& g, const MamSpec& spec,
                                 const ClusterConfig& cfg);

struct BipartiteClusterResult {
    Partition sources;       // labels on source vertices, -1 elsewhere
    Partition destinations;  // labels on destination vertices, -1 elsewhere
};

/// Clusters the two sides of a bipartite graph independently through the
/// collider and expander projections.
BipartiteClusterResult bipartite_cluster(const DirectedGraph& g,
                                         std::span<const index_t> sources,
                                         std::span<const index_t> destinations, int k_s, int l_s,
                                         int k_d, int l_d, Weighting weighting,
                                         const ClusterConfig& cfg);

/// Partition CSV: header `node,cluster`, one row per vertex, using the
/// given external ids when provided.
void save_partition(const std::string& path, const Partition& p,
                    const std::vector<index_t>& external_ids = {});
Partition load_partition(const std::string& path, const std::vector<index_t>& external_ids = {});

}  // namespace motifspectral
