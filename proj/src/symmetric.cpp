#include "motifspectral/symmetric.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace motifspectral {

SymmetricSparseMatrix SymmetricSparseMatrix::from_full(const CsrMatrix& full, double tol) {
    if (!full.is_symmetric(tol * (1.0 + full.max_abs())))
        throw std::invalid_argument("from_full: matrix is not symmetric");
    CsrBuilder b(full.n());
    for (index_t i = 0; i < full.n(); ++i) {
        auto cols = full.row_indices(i);
        auto vals = full.row_data(i);
        for (size_t p = 0; p < cols.size(); ++p)
            if (cols[p] >= i) b.push(cols[p], vals[p]);
        b.finish_row();
    }
    SymmetricSparseMatrix m;
    m.upper_ = b.take();
    return m;
}

SymmetricSparseMatrix SymmetricSparseMatrix::from_triplets(index_t n,
                                                           std::span<const index_t> rows,
                                                           std::span<const index_t> cols,
                                                           std::span<const double> vals) {
    std::vector<index_t> r(rows.begin(), rows.end()), c(cols.begin(), cols.end());
    for (size_t e = 0; e < r.size(); ++e)
        if (r[e] > c[e]) std::swap(r[e], c[e]);
    SymmetricSparseMatrix m;
    m.upper_ = CsrMatrix::from_triplets(n, r, c, vals);
    return m;
}

CsrMatrix SymmetricSparseMatrix::to_full() const {
    const CsrMatrix lower = upper_.zero_diagonal().transpose();
    return upper_.add(lower);
}

double SymmetricSparseMatrix::at(index_t i, index_t j) const {
    return i <= j ? upper_.at(i, j) : upper_.at(j, i);
}

std::vector<double> SymmetricSparseMatrix::degrees() const {
    std::vector<double> d(static_cast<size_t>(n()), 0.0);
    for (index_t i = 0; i < n(); ++i) {
        auto cols = upper_.row_indices(i);
        auto vals = upper_.row_data(i);
        for (size_t p = 0; p < cols.size(); ++p) {
            d[i] += vals[p];
            if (cols[p] != i) d[cols[p]] += vals[p];
        }
    }
    return d;
}

SymmetricSparseMatrix SymmetricSparseMatrix::scaled(double c) const {
    SymmetricSparseMatrix out = *this;
    out.upper_ = upper_.add(CsrMatrix(n()), c, 0.0);
    return out;
}

SymmetricSparseMatrix SymmetricSparseMatrix::add(const SymmetricSparseMatrix& other) const {
    SymmetricSparseMatrix out;
    out.upper_ = upper_.add(other.upper_);
    return out;
}

std::vector<index_t> largest_component(const SymmetricSparseMatrix& m) {
    const index_t n = m.n();
    if (n == 0) return {};
    std::vector<index_t> parent(n);
    std::iota(parent.begin(), parent.end(), index_t{0});
    auto find = [&](index_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    const CsrMatrix& u = m.upper();
    for (index_t i = 0; i < n; ++i) {
        for (index_t j : u.row_indices(i)) {
            if (j == i) continue;
            const index_t a = find(i), b = find(j);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    }
    std::vector<index_t> size(n, 0);
    for (index_t v = 0; v < n; ++v) ++size[find(v)];
    // roots are the minimum id of their component, so among equal-size
    // components the smallest root wins the < comparison scan
    index_t best = 0;
    for (index_t r = 1; r < n; ++r)
        if (size[r] > size[best]) best = r;
    std::vector<index_t> ids;
    ids.reserve(size[best]);
    for (index_t v = 0; v < n; ++v)
        if (find(v) == best) ids.push_back(v);
    return ids;
}

SymmetricSparseMatrix restrict_to(const SymmetricSparseMatrix& m, std::span<const index_t> ids) {
    const index_t n = m.n();
    for (size_t i = 0; i < ids.size(); ++i) {
        if (ids[i] < 0 || ids[i] >= n) throw std::out_of_range("restrict: id out of range");
        if (i > 0 && ids[i] <= ids[i - 1]) throw std::invalid_argument("restrict: ids not strictly increasing");
    }
    std::vector<index_t> where(n, -1);
    for (size_t i = 0; i < ids.size(); ++i) where[ids[i]] = static_cast<index_t>(i);

    CsrBuilder b(static_cast<index_t>(ids.size()));
    const CsrMatrix& u = m.upper();
    for (index_t newi = 0; newi < static_cast<index_t>(ids.size()); ++newi) {
        const index_t i = ids[newi];
        auto cols = u.row_indices(i);
        auto vals = u.row_data(i);
        for (size_t p = 0; p < cols.size(); ++p)
            if (where[cols[p]] >= 0) b.push(where[cols[p]], vals[p]);
        b.finish_row();
    }
    // rows come out sorted because the id map is monotone, and entries stay
    // in the upper triangle for the same reason
    return SymmetricSparseMatrix::wrap_upper(b.take());
}

SymmetricSparseMatrix SymmetricSparseMatrix::wrap_upper(CsrMatrix upper) {
    SymmetricSparseMatrix m;
    m.upper_ = std::move(upper);
    return m;
}

SymmetricSparseMatrix SymmetricSparseMatrix::from_upper(CsrMatrix upper) {
    for (index_t i = 0; i < upper.n(); ++i)
        for (index_t j : upper.row_indices(i))
            if (j < i) throw std::invalid_argument("from_upper: entry below the diagonal");
    return wrap_upper(std::move(upper));
}

}  // namespace motifspectral
