#include <array>
#include <optional>
#include <stdexcept>

#include "mam_internal.hpp"

namespace motifspectral::detail {

namespace {

Eigen::MatrixXd dense_of(const CsrMatrix& m) {
    Eigen::MatrixXd d = Eigen::MatrixXd::Zero(m.n(), m.n());
    for (index_t i = 0; i < m.n(); ++i) {
        auto cols = m.row_indices(i);
        auto vals = m.row_data(i);
        for (size_t p = 0; p < cols.size(); ++p) d(i, cols[p]) = vals[p];
    }
    return d;
}

/// Base dense matrices, built lazily so a motif only pays for the
/// matrices its formula references. Transposes stay as expressions.
class DenseFactors {
public:
    DenseFactors(const GraphMatrices& gm, Closure closure) : gm_(gm), closure_(closure) {}

    const Eigen::MatrixXd& base(const Factor& f) {
        if (f.kind == PairKind::Missing) throw std::logic_error("missing-pair factor has no matrix");
        const int k = (f.kind == PairKind::Double ? 2 : 0) | (f.weighted ? 1 : 0);
        if (!cache_[k]) {
            if (f.kind == PairKind::Double) cache_[k] = dense_of(f.weighted ? gm_.Gd : gm_.Jd);
            else if (closure_ == Closure::Functional) cache_[k] = dense_of(f.weighted ? gm_.G : gm_.J);
            else cache_[k] = dense_of(f.weighted ? gm_.Gs : gm_.Js);
        }
        return *cache_[k];
    }

    const CsrMatrix& jtilde_csr() {
        if (!jtilde_) jtilde_ = gm_.J.add(gm_.J.transpose()).ones_like();
        return *jtilde_;
    }

    const GraphMatrices& gm() const { return gm_; }

private:
    const GraphMatrices& gm_;
    Closure closure_;
    std::array<std::optional<Eigen::MatrixXd>, 4> cache_;
    std::optional<CsrMatrix> jtilde_;
};

// out += S * D for CSR S (cheaper than a dense GEMM when S is sparse)
void add_spmm_left(const CsrMatrix& s, const Eigen::MatrixXd& d, bool transpose_d, double alpha,
                   Eigen::MatrixXd& out) {
    for (index_t i = 0; i < s.n(); ++i) {
        auto cols = s.row_indices(i);
        auto vals = s.row_data(i);
        for (size_t p = 0; p < cols.size(); ++p) {
            if (transpose_d) out.row(i) += alpha * vals[p] * d.col(cols[p]).transpose();
            else out.row(i) += alpha * vals[p] * d.row(cols[p]);
        }
    }
}

// out += D * S for CSR S
void add_spmm_right(const Eigen::MatrixXd& d, bool transpose_d, const CsrMatrix& s, double alpha,
                    Eigen::MatrixXd& out) {
    for (index_t k = 0; k < s.n(); ++k) {
        auto cols = s.row_indices(k);
        auto vals = s.row_data(k);
        for (size_t p = 0; p < cols.size(); ++p) {
            if (transpose_d) out.col(cols[p]) += alpha * vals[p] * d.row(k).transpose();
            else out.col(cols[p]) += alpha * vals[p] * d.col(k);
        }
    }
}

// acc += A o P where A may be a lazily transposed factor
void add_masked(DenseFactors& fx, const Factor& had, const Eigen::MatrixXd& p,
                Eigen::MatrixXd& acc) {
    const Eigen::MatrixXd& a = fx.base(had);
    if (had.transposed) acc.array() += a.transpose().array() * p.array();
    else acc.array() += a.array() * p.array();
}

// removes the diagonal and, structurally, every entry that has an edge in
// either direction
void mask_missing(DenseFactors& fx, Closure closure, Eigen::MatrixXd& p) {
    p.diagonal().setZero();
    if (closure == Closure::Structural) {
        const CsrMatrix& j = fx.gm().J;
        for (index_t i = 0; i < j.n(); ++i)
            for (index_t c : j.row_indices(i)) {
                p(i, c) = 0.0;
                p(c, i) = 0.0;
            }
    }
}

void eval_term_dense(DenseFactors& fx, Closure closure, const Term& term, bool two_vertex,
                     Eigen::MatrixXd& p, Eigen::MatrixXd& acc) {
    if (two_vertex) {
        const Eigen::MatrixXd& a = fx.base(term.had);
        if (term.had.transposed) acc += a.transpose();
        else acc += a;
        return;
    }

    const bool struc = closure == Closure::Structural;
    if (term.left.kind == PairKind::Missing) {
        // A o ((1 - I [- Jtilde]) R) : column sums broadcast minus R
        const Eigen::MatrixXd& r = fx.base(term.right);
        if (term.right.transposed) {
            p = -r.transpose();
            p.rowwise() += r.rowwise().sum().transpose();
            if (struc) add_spmm_left(fx.jtilde_csr(), r, true, -1.0, p);
        } else {
            p = -r;
            p.rowwise() += r.colwise().sum();
            if (struc) add_spmm_left(fx.jtilde_csr(), r, false, -1.0, p);
        }
        add_masked(fx, term.had, p, acc);
        return;
    }
    if (term.right.kind == PairKind::Missing) {
        // A o (L (1 - I [- Jtilde])) : row sums broadcast minus L
        const Eigen::MatrixXd& l = fx.base(term.left);
        if (term.left.transposed) {
            p = -l.transpose();
            p.colwise() += l.colwise().sum().transpose();
            if (struc) add_spmm_right(l, true, fx.jtilde_csr(), -1.0, p);
        } else {
            p = -l;
            p.colwise() += l.rowwise().sum();
            if (struc) add_spmm_right(l, false, fx.jtilde_csr(), -1.0, p);
        }
        add_masked(fx, term.had, p, acc);
        return;
    }

    const Eigen::MatrixXd& l = fx.base(term.left);
    const Eigen::MatrixXd& r = fx.base(term.right);
    if (term.left.transposed && term.right.transposed) p.noalias() = l.transpose() * r.transpose();
    else if (term.left.transposed) p.noalias() = l.transpose() * r;
    else if (term.right.transposed) p.noalias() = l * r.transpose();
    else p.noalias() = l * r;

    if (term.had.kind == PairKind::Missing) {
        mask_missing(fx, closure, p);
        acc += p;
    } else {
        add_masked(fx, term.had, p, acc);
    }
}

}  // namespace

Eigen::MatrixXd eval_dense(const GraphMatrices& gm, Closure closure, bool two_vertex, double coef,
                           std::span<const Term> c_terms, std::span<const Term> cp_terms) {
    const index_t n = gm.J.n();
    DenseFactors fx(gm, closure);
    Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(n, n);
    Eigen::MatrixXd p(n, n);
    for (const Term& term : c_terms) eval_term_dense(fx, closure, term, two_vertex, p, acc);
    p = acc.transpose();
    acc += p;
    for (const Term& term : cp_terms) eval_term_dense(fx, closure, term, two_vertex, p, acc);
    return coef * acc;
}

Eigen::MatrixXd eval_dense_flat(const GraphMatrices& gm, Closure closure, bool two_vertex,
                                double coef, std::span<const Term> terms) {
    const index_t n = gm.J.n();
    DenseFactors fx(gm, closure);
    Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(n, n);
    Eigen::MatrixXd p(n, n);
    for (const Term& term : terms) eval_term_dense(fx, closure, term, two_vertex, p, acc);
    return coef * acc;
}

SymmetricSparseMatrix dense_to_symmetric(const Eigen::MatrixXd& m) {
    const index_t n = m.rows();
    const double mx = m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
    const double thresh = prune_threshold(mx);
    CsrBuilder b(n);
    for (index_t i = 0; i < n; ++i) {
        for (index_t j = i; j < n; ++j)
            if (std::abs(m(i, j)) > thresh) b.push(j, m(i, j));
        b.finish_row();
    }
    return SymmetricSparseMatrix::from_upper(b.take());
}

}  // namespace motifspectral::detail
