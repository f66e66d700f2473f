#include <array>
#include <optional>
#include <stdexcept>

#include "mam_internal.hpp"

namespace motifspectral::detail {

namespace {

// Matrix selection with cached transposes. Key: (kind, weighted, transposed).
class SparseFactors {
public:
    SparseFactors(const GraphMatrices& gm, Closure closure) : gm_(gm), closure_(closure) {}

    const CsrMatrix& get(const Factor& f) {
        if (f.kind == PairKind::Missing) throw std::logic_error("missing-pair factor has no matrix");
        auto& slot = cache_[key(f)];
        if (!slot) {
            const CsrMatrix& base = base_matrix(f);
            slot = f.transposed ? base.transpose() : base;
        }
        return *slot;
    }

    /// Support indicator of edges in either direction (Js + Js' + Jd).
    const CsrMatrix& jtilde() {
        if (!jtilde_) jtilde_ = gm_.J.add(gm_.J.transpose()).ones_like();
        return *jtilde_;
    }

private:
    const CsrMatrix& base_matrix(const Factor& f) const {
        if (f.kind == PairKind::Double) return f.weighted ? gm_.Gd : gm_.Jd;
        if (closure_ == Closure::Functional) return f.weighted ? gm_.G : gm_.J;
        return f.weighted ? gm_.Gs : gm_.Js;
    }

    static int key(const Factor& f) {
        return (f.kind == PairKind::Double ? 4 : 0) | (f.weighted ? 2 : 0) | (f.transposed ? 1 : 0);
    }

    const GraphMatrices& gm_;
    Closure closure_;
    std::array<std::optional<CsrMatrix>, 8> cache_;
    std::optional<CsrMatrix> jtilde_;
};

// One term A o (B C). The missing-pair indicators are expanded in place:
//   vertex-distinct = 1 - I, missing-edge = 1 - (I + Js + Js' + Jd),
// products against 1 become row- or column-sum broadcasts and the Hadamard
// mask against them becomes diagonal/support removal.
CsrMatrix eval_term_sparse(SparseFactors& fx, Closure closure, const Term& term, bool two_vertex) {
    if (two_vertex) return fx.get(term.had);

    const bool struc = closure == Closure::Structural;
    if (term.left.kind == PairKind::Missing) {
        const CsrMatrix& a = fx.get(term.had);
        const CsrMatrix& r = fx.get(term.right);
        CsrMatrix res = a.scale_cols(r.col_sums()).add(a.hadamard(r), 1.0, -1.0);
        if (struc) res = res.add(a.hadamard(fx.jtilde().multiply(r)), 1.0, -1.0);
        return res;
    }
    if (term.right.kind == PairKind::Missing) {
        const CsrMatrix& a = fx.get(term.had);
        const CsrMatrix& l = fx.get(term.left);
        CsrMatrix res = a.scale_rows(l.row_sums()).add(a.hadamard(l), 1.0, -1.0);
        if (struc) res = res.add(a.hadamard(l.multiply(fx.jtilde())), 1.0, -1.0);
        return res;
    }
    CsrMatrix p = fx.get(term.left).multiply(fx.get(term.right));
    if (term.had.kind == PairKind::Missing) {
        p = p.zero_diagonal();
        if (struc) p = p.subtract_support(fx.jtilde());
        return p;
    }
    return fx.get(term.had).hadamard(p);
}

}  // namespace

CsrMatrix eval_sparse(const GraphMatrices& gm, Closure closure, bool two_vertex, double coef,
                      std::span<const Term> c_terms, std::span<const Term> cp_terms) {
    SparseFactors fx(gm, closure);
    const index_t n = gm.J.n();
    CsrMatrix acc(n);
    for (const Term& term : c_terms) acc = acc.add(eval_term_sparse(fx, closure, term, two_vertex));
    CsrMatrix total = acc.add(acc.transpose());
    for (const Term& term : cp_terms) total = total.add(eval_term_sparse(fx, closure, term, two_vertex));
    if (coef != 1.0) total = total.add(CsrMatrix(n), coef, 0.0);
    return total;
}

SymmetricSparseMatrix sparse_to_symmetric(const CsrMatrix& m) {
    return SymmetricSparseMatrix::from_full(m.prune(prune_threshold(m.max_abs())));
}

}  // namespace motifspectral::detail
