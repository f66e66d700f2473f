#include "motifspectral/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "motifspectral/rng.hpp"

namespace motifspectral {

namespace {
constexpr index_t kDenseSolverLimit = 500;
constexpr std::uint64_t kLanczosSeed = 0x6d6f746966;  // fixed: embed has no seed parameter
}  // namespace

CsrMatrix rw_laplacian(const SymmetricSparseMatrix& m) {
    const CsrMatrix g = m.to_full();
    const std::vector<double> d = g.row_sums();
    for (index_t i = 0; i < g.n(); ++i)
        if (!(d[i] > 0.0))
            throw std::invalid_argument(
                "rw_laplacian: vertex " + std::to_string(i) +
                " has zero degree; restrict to the largest connected component first");
    CsrBuilder b(g.n());
    for (index_t i = 0; i < g.n(); ++i) {
        auto cols = g.row_indices(i);
        auto vals = g.row_data(i);
        bool saw_diag = false;
        for (size_t p = 0; p < cols.size(); ++p) {
            if (cols[p] == i) {
                b.push(i, 1.0 - vals[p] / d[i]);
                saw_diag = true;
            } else {
                if (!saw_diag && cols[p] > i) {
                    b.push(i, 1.0);
                    saw_diag = true;
                }
                b.push(cols[p], -vals[p] / d[i]);
            }
        }
        if (!saw_diag) b.push(i, 1.0);
        b.finish_row();
    }
    return b.take();
}

RwLaplacianOp::RwLaplacianOp(const SymmetricSparseMatrix& m, double tau)
    : g_(m.to_full()), tau_(tau) {
    if (tau < 0) throw std::invalid_argument("rw_laplacian: tau must be non-negative");
    deg_ = g_.row_sums();
    for (index_t i = 0; i < g_.n(); ++i) {
        deg_[i] += tau;
        if (!(deg_[i] > 0.0))
            throw std::invalid_argument(
                "rw_laplacian: vertex " + std::to_string(i) +
                " has zero degree; restrict to the largest connected component first");
    }
    isqrt_.resize(deg_.size());
    for (size_t i = 0; i < deg_.size(); ++i) isqrt_[i] = 1.0 / std::sqrt(deg_[i]);
}

void RwLaplacianOp::apply(std::span<const double> x, std::span<double> y) const {
    const index_t n = g_.n();
    g_.mul_vec(x, y);
    double xs = 0.0;
    for (index_t i = 0; i < n; ++i) xs += x[i];
    const double rank1 = tau_ > 0 ? tau_ * xs / static_cast<double>(n) : 0.0;
    for (index_t i = 0; i < n; ++i) y[i] = x[i] - (y[i] + rank1) / deg_[i];
}

void RwLaplacianOp::apply_sym(std::span<const double> x, std::span<double> y) const {
    const index_t n = g_.n();
    std::vector<double> t(n);
    for (index_t i = 0; i < n; ++i) t[i] = isqrt_[i] * x[i];
    g_.mul_vec(t, y);
    double ts = 0.0;
    for (index_t i = 0; i < n; ++i) ts += t[i];
    const double rank1 = tau_ > 0 ? tau_ * ts / static_cast<double>(n) : 0.0;
    for (index_t i = 0; i < n; ++i) y[i] = x[i] - isqrt_[i] * (y[i] + rank1);
}

Eigen::MatrixXd RwLaplacianOp::materialize() const {
    const index_t n = g_.n();
    Eigen::MatrixXd l = Eigen::MatrixXd::Identity(n, n);
    const double r = tau_ > 0 ? tau_ / static_cast<double>(n) : 0.0;
    for (index_t i = 0; i < n; ++i)
        for (index_t j = 0; j < n; ++j) l(i, j) -= r / deg_[i];
    for (index_t i = 0; i < n; ++i) {
        auto cols = g_.row_indices(i);
        auto vals = g_.row_data(i);
        for (size_t p = 0; p < cols.size(); ++p) l(i, cols[p]) -= vals[p] / deg_[i];
    }
    return l;
}

RwLaplacianOp regularized_rw_laplacian(const SymmetricSparseMatrix& m, double tau) {
    return RwLaplacianOp(m, tau);
}

namespace {

void fix_sign(Eigen::VectorXd& v) {
    index_t best = 0;
    double mx = 0.0;
    for (index_t i = 0; i < v.size(); ++i)
        if (std::abs(v[i]) > mx) {
            mx = std::abs(v[i]);
            best = i;
        }
    if (v[best] < 0) v = -v;
}

Embedding finish_embedding(const RwLaplacianOp& op, const Eigen::MatrixXd& sym_vectors,
                           const Eigen::VectorXd& values, index_t l) {
    const index_t n = op.n();
    Embedding e;
    e.eigenvalues.resize(l);
    Eigen::MatrixXd h(n, l);
    for (index_t c = 0; c < l; ++c) {
        e.eigenvalues[c] = std::clamp(values[c], 0.0, 2.0);
        Eigen::VectorXd v = sym_vectors.col(c);
        for (index_t i = 0; i < n; ++i) v[i] *= op.degrees()[i] > 0 ? 1.0 / std::sqrt(op.degrees()[i]) : 0.0;
        v.normalize();
        fix_sign(v);
        h.col(c) = v;
    }
    e.points = h.rightCols(l - 1);
    return e;
}

Embedding embed_dense(const RwLaplacianOp& op, index_t l) {
    const index_t n = op.n();
    // dense L_sym = I - Dt^-1/2 Gt Dt^-1/2 assembled through the operator
    Eigen::MatrixXd lsym(n, n);
    std::vector<double> x(n, 0.0), y(n);
    for (index_t j = 0; j < n; ++j) {
        x[j] = 1.0;
        op.apply_sym(x, y);
        for (index_t i = 0; i < n; ++i) lsym(i, j) = y[i];
        x[j] = 0.0;
    }
    // not bitwise symmetric after rounding; the solver needs the average
    lsym = 0.5 * (lsym + lsym.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(lsym);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("embed: dense eigensolver failed");
    return finish_embedding(op, es.eigenvectors().leftCols(l), es.eigenvalues().head(l), l);
}

Embedding embed_lanczos(const RwLaplacianOp& op, index_t l) {
    const index_t n = op.n();
    // work on 2I - L_sym so the wanted (smallest) end becomes the largest
    auto apply_shifted = [&](const Eigen::VectorXd& x, Eigen::VectorXd& y) {
        op.apply_sym({x.data(), static_cast<size_t>(n)}, {y.data(), static_cast<size_t>(n)});
        y = 2.0 * x - y;
    };

    const index_t max_iter = std::min<index_t>(n, std::max<index_t>(6 * l + 40, 120));
    const double tol = 1e-10;
    Eigen::MatrixXd basis(n, max_iter);
    std::vector<double> alpha, beta;

    SplitMix64 rng = rng_stream(kLanczosSeed, 0);
    Eigen::VectorXd v(n), w(n);
    for (index_t i = 0; i < n; ++i) v[i] = rng.next_double() - 0.5;
    v.normalize();
    basis.col(0) = v;

    index_t j = 0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> small;
    while (true) {
        apply_shifted(basis.col(j), w);
        if (j > 0) w -= beta[j - 1] * basis.col(j - 1);
        alpha.push_back(basis.col(j).dot(w));
        w -= alpha[j] * basis.col(j);
        // full reorthogonalization, twice for safety
        for (int pass = 0; pass < 2; ++pass)
            for (index_t c = 0; c <= j; ++c) w -= basis.col(c).dot(w) * basis.col(c);
        double b = w.norm();
        if (b < 1e-12) {
            // invariant subspace; continue with a fresh orthogonal vector
            for (index_t i = 0; i < n; ++i) w[i] = rng.next_double() - 0.5;
            for (int pass = 0; pass < 2; ++pass)
                for (index_t c = 0; c <= j; ++c) w -= basis.col(c).dot(w) * basis.col(c);
            b = w.norm();
            if (b < 1e-12) break;  // space exhausted
        }
        beta.push_back(b);
        if (j + 1 >= max_iter) break;
        basis.col(j + 1) = w / b;
        ++j;

        const index_t dim = j;  // converged check on the subspace so far
        if (dim >= std::max<index_t>(2 * l, l + 2) && dim % 10 == 0) {
            Eigen::MatrixXd t = Eigen::MatrixXd::Zero(dim, dim);
            for (index_t i = 0; i < dim; ++i) {
                t(i, i) = alpha[i];
                if (i + 1 < dim) t(i, i + 1) = t(i + 1, i) = beta[i];
            }
            small.compute(t);
            bool done = true;
            for (index_t e = 0; e < l; ++e) {
                const index_t col = dim - 1 - e;  // largest Ritz values
                if (std::abs(beta[dim - 1] * small.eigenvectors()(dim - 1, col)) > tol) done = false;
            }
            if (done) break;
        }
    }

    const index_t dim = static_cast<index_t>(alpha.size());
    if (dim < l)
        throw std::runtime_error("embed: Lanczos basis exhausted at dimension " +
                                 std::to_string(dim) + " before finding " + std::to_string(l) +
                                 " eigenpairs");
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(dim, dim);
    for (index_t i = 0; i < dim; ++i) {
        t(i, i) = alpha[i];
        if (i + 1 < dim && i < static_cast<index_t>(beta.size())) t(i, i + 1) = t(i + 1, i) = beta[i];
    }
    small.compute(t);

    // residual check for the reported pairs
    for (index_t e = 0; e < l; ++e) {
        const index_t col = dim - 1 - e;
        const double resid =
            dim <= static_cast<index_t>(beta.size()) ? std::abs(beta[dim - 1] * small.eigenvectors()(dim - 1, col)) : 0.0;
        if (resid > 1e-8)
            throw std::runtime_error("embed: Lanczos did not converge after " +
                                     std::to_string(dim) + " iterations (residual " +
                                     std::to_string(resid) + " for eigenpair " +
                                     std::to_string(e) + ")");
    }

    Eigen::MatrixXd vecs(n, l);
    Eigen::VectorXd vals(l);
    for (index_t e = 0; e < l; ++e) {
        const index_t col = dim - 1 - e;
        vals[e] = 2.0 - small.eigenvalues()[col];  // undo the shift
        vecs.col(e) = basis.leftCols(dim) * small.eigenvectors().col(col);
        vecs.col(e).normalize();
    }
    return finish_embedding(op, vecs, vals, l);
}

}  // namespace

Embedding embed(const RwLaplacianOp& op, index_t l) {
    if (l < 1 || l > op.n()) throw std::invalid_argument("embed: need 1 <= l <= n");
    if (l < 2) throw std::invalid_argument("embed: l must be at least 2");
    if (op.n() <= kDenseSolverLimit) return embed_dense(op, l);
    return embed_lanczos(op, l);
}

index_t Partition::clustered_count() const {
    return std::count_if(assignment.begin(), assignment.end(), [](int a) { return a >= 0; });
}

TauSetting TauSetting::parse(const std::string& s) {
    if (s.empty() || s == "none") return none();
    if (s == "mean-degree") return mean_degree();
    const auto star = s.find("*mean-degree");
    if (star != std::string::npos) return mean_degree(std::stod(s.substr(0, star)));
    return of(std::stod(s));
}

namespace {

double resolve_tau(const TauSetting& tau, const SymmetricSparseMatrix& m) {
    switch (tau.mode) {
        case TauSetting::Mode::None: return 0.0;
        case TauSetting::Mode::Value: return tau.value;
        case TauSetting::Mode::MeanDegree: {
            const std::vector<double> d = m.degrees();
            const double mean =
                d.empty() ? 0.0 : std::accumulate(d.begin(), d.end(), 0.0) / static_cast<double>(d.size());
            return tau.value * mean;
        }
    }
    return 0.0;
}

}  // namespace

Partition cluster(const SymmetricSparseMatrix& m, const ClusterConfig& cfg) {
    if (cfg.k < 1 || cfg.k > m.n()) throw std::invalid_argument("cluster: need 1 <= k <= n");
    if (cfg.l < 2 || cfg.l > m.n()) throw std::invalid_argument("cluster: need 2 <= l <= n");
    if (cfg.restarts < 1) throw std::invalid_argument("cluster: restarts must be >= 1");
    const double tau = resolve_tau(cfg.tau, m);
    const RwLaplacianOp op(m, tau);
    const Embedding e = embed(op, cfg.l);
    return kmeans_pp(e.points, cfg.k, cfg.restarts, cfg.max_iters, cfg.tol, cfg.seed);
}

MotifClusterResult motif_cluster(const DirectedGraph& g, const MamSpec& spec,
                                 const ClusterConfig& cfg) {
    const SymmetricSparseMatrix mam = build_mam(g, spec);
    MotifClusterResult res;
    res.final_tau = resolve_tau(cfg.tau, mam);

    if (res.final_tau > 0) {
        // regularization connects the graph; cluster all vertices
        res.component.resize(g.n());
        std::iota(res.component.begin(), res.component.end(), index_t{0});
        ClusterConfig c = cfg;
        c.tau = TauSetting::of(res.final_tau);
        res.partition = cluster(mam, c);
        return res;
    }

    res.component = largest_component(mam);
    const index_t need = std::max(cfg.k, cfg.l) + 1;
    if (static_cast<index_t>(res.component.size()) < need)
        throw std::runtime_error(
            "motif_cluster: largest component of the motif adjacency matrix has " +
            std::to_string(res.component.size()) + " vertices, fewer than max(k,l)+1 = " +
            std::to_string(need) + "; consider a weaker motif or functional closure");
    const SymmetricSparseMatrix sub = restrict_to(mam, res.component);
    const Partition local = cluster(sub, cfg);

    res.partition.k = local.k;
    res.partition.assignment.assign(g.n(), -1);
    for (size_t i = 0; i < res.component.size(); ++i)
        res.partition.assignment[res.component[i]] = local.assignment[i];
    return res;
}

BipartiteClusterResult bipartite_cluster(const DirectedGraph& g,
                                         std::span<const index_t> sources,
                                         std::span<const index_t> destinations, int k_s, int l_s,
                                         int k_d, int l_d, Weighting weighting,
                                         const ClusterConfig& cfg) {
    auto [coll, expa] = bipartite_mams(g, sources, destinations, weighting);
    std::vector<index_t> s(sources.begin(), sources.end());
    std::vector<index_t> d(destinations.begin(), destinations.end());
    std::sort(s.begin(), s.end());
    std::sort(d.begin(), d.end());

    auto side = [&](const SymmetricSparseMatrix& mam, const std::vector<index_t>& ids, int k,
                    int l) {
        const std::vector<index_t> comp = largest_component(mam);
        const index_t need = std::max(k, l) + 1;
        if (static_cast<index_t>(comp.size()) < need)
            throw std::runtime_error(
                "bipartite_cluster: largest projection component has " +
                std::to_string(comp.size()) + " vertices, fewer than max(k,l)+1 = " +
                std::to_string(need));
        ClusterConfig c = cfg;
        c.k = k;
        c.l = l;
        const Partition local = cluster(restrict_to(mam, comp), c);
        Partition full;
        full.k = local.k;
        full.assignment.assign(g.n(), -1);
        for (size_t i = 0; i < comp.size(); ++i)
            full.assignment[ids[comp[i]]] = local.assignment[i];
        return full;
    };

    BipartiteClusterResult res;
    res.sources = side(coll, s, k_s, l_s);
    res.destinations = side(expa, d, k_d, l_d);
    return res;
}

void save_partition(const std::string& path, const Partition& p,
                    const std::vector<index_t>& external_ids) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write partition: " + path);
    out << "node,cluster\n";
    for (size_t i = 0; i < p.assignment.size(); ++i) {
        const index_t node = external_ids.empty() ? static_cast<index_t>(i) : external_ids[i];
        out << node << ',' << p.assignment[i] << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

Partition load_partition(const std::string& path, const std::vector<index_t>& external_ids) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open partition: " + path);
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error(path + ": empty partition file");
    std::map<index_t, int> by_node;
    int max_label = -1;
    size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream row(line);
        index_t node;
        int label;
        char comma;
        if (!(row >> node >> comma >> label) || comma != ',')
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": malformed row");
        by_node[node] = label;
        max_label = std::max(max_label, label);
    }
    Partition p;
    p.k = max_label + 1;
    if (external_ids.empty()) {
        index_t n = 0;
        for (const auto& [node, label] : by_node) n = std::max(n, node + 1);
        p.assignment.assign(n, -1);
        for (const auto& [node, label] : by_node) p.assignment[node] = label;
    } else {
        p.assignment.assign(external_ids.size(), -1);
        for (size_t i = 0; i < external_ids.size(); ++i) {
            auto it = by_node.find(external_ids[i]);
            if (it != by_node.end()) p.assignment[i] = it->second;
        }
    }
    return p;
}

}  // namespace motifspectral
