#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace motifspectral {

using index_t = std::int64_t;

/// Square sparse matrix in compressed row storage with sorted column
/// indices per row. All kernels keep a fixed per-row accumulation order,
/// so results are bit-identical across runs and thread counts.
class CsrMatrix {
public:
    CsrMatrix() = default;
    explicit CsrMatrix(index_t n) : n_(n), indptr_(static_cast<size_t>(n) + 1, 0) {}

    /// Builds from (row, col, value) triplets; duplicates are summed.
    static CsrMatrix from_triplets(index_t n,
                                   std::span<const index_t> rows,
                                   std::span<const index_t> cols,
                                   std::span<const double> vals);

    index_t n() const { return n_; }
    index_t nnz() const { return static_cast<index_t>(indices_.size()); }

    std::span<const index_t> indptr() const { return indptr_; }
    std::span<const index_t> indices() const { return indices_; }
    std::span<const double> data() const { return data_; }

    std::span<const index_t> row_indices(index_t i) const {
        return {indices_.data() + indptr_[i], indices_.data() + indptr_[i + 1]};
    }
    std::span<const double> row_data(index_t i) const {
        return {data_.data() + indptr_[i], data_.data() + indptr_[i + 1]};
    }

    /// Value at (i, j), 0 if not stored. Binary search within the row.
    double at(index_t i, index_t j) const;

    CsrMatrix transpose() const;

    /// Sparse-sparse product this * other (Gustavson, parallel over rows).
    CsrMatrix multiply(const CsrMatrix& other) const;

    /// Entry-wise product on the support intersection.
    CsrMatrix hadamard(const CsrMatrix& other) const;

    /// alpha * this + beta * other, merged support.
    CsrMatrix add(const CsrMatrix& other, double alpha = 1.0, double beta = 1.0) const;

    /// Row/column scaling: out(i,j) = s[i] * a(i,j) resp. s[j] * a(i,j).
    CsrMatrix scale_rows(std::span<const double> s) const;
    CsrMatrix scale_cols(std::span<const double> s) const;

    /// Copy with diagonal entries removed.
    CsrMatrix zero_diagonal() const;

    /// Copy with entries on the support of `mask` removed.
    CsrMatrix subtract_support(const CsrMatrix& mask) const;

    /// Copy with the values replaced by 1 wherever an entry is stored.
    CsrMatrix ones_like() const;

    /// Drops entries with |value| <= threshold.
    CsrMatrix prune(double threshold) const;

    std::vector<double> row_sums() const;
    std::vector<double> col_sums() const;
    double max_abs() const;

    bool is_symmetric(double tol = 0.0) const;

    /// y = A x (no aliasing).
    void mul_vec(std::span<const double> x, std::span<double> y) const;

    bool operator==(const CsrMatrix& other) const = default;

private:
    index_t n_ = 0;
    std::vector<index_t> indptr_{0};
    std::vector<index_t> indices_;
    std::vector<double> data_;

    friend class CsrBuilder;
};

/// Row-at-a-time builder; rows must be appended in order with sorted,
/// duplicate-free column indices.
class CsrBuilder {
public:
    explicit CsrBuilder(index_t n) : n_(n) { indptr_.reserve(static_cast<size_t>(n) + 1); indptr_.push_back(0); }

    void push(index_t col, double val) {
        indices_.push_back(col);
        data_.push_back(val);
    }
    void finish_row() { indptr_.push_back(static_cast<index_t>(indices_.size())); }

    CsrMatrix take();

private:
    index_t n_;
    std::vector<index_t> indptr_;
    std::vector<index_t> indices_;
    std::vector<double> data_;
};

}  // namespace motifspectral
