#pragma once

#include <vector>

#include "motifspectral/csr.hpp"

namespace motifspectral {

/// Symmetric non-negative sparse matrix storing each unordered pair once
/// (upper triangle plus diagonal, CSR layout). Carrier for motif adjacency
/// matrices and restricted similarity matrices.
class SymmetricSparseMatrix {
public:
    SymmetricSparseMatrix() = default;
    explicit SymmetricSparseMatrix(index_t n) : upper_(n) {}

    /// Takes the upper triangle of a structurally symmetric matrix.
    /// Throws if `full` is not symmetric within `tol` (relative to max entry).
    static SymmetricSparseMatrix from_full(const CsrMatrix& full, double tol = 1e-9);

    /// Builds from unordered-pair triplets (i, j, v); (i,j) and (j,i) refer
    /// to the same entry, duplicates are summed.
    static SymmetricSparseMatrix from_triplets(index_t n,
                                               std::span<const index_t> rows,
                                               std::span<const index_t> cols,
                                               std::span<const double> vals);

    /// Wraps a CSR matrix whose entries already all satisfy col >= row.
    static SymmetricSparseMatrix from_upper(CsrMatrix upper);

    index_t n() const { return upper_.n(); }
    index_t stored_nnz() const { return upper_.nnz(); }
    const CsrMatrix& upper() const { return upper_; }

    /// Expands to a full CSR matrix (both triangles).
    CsrMatrix to_full() const;

    double at(index_t i, index_t j) const;

    /// Weighted degrees: full row sums.
    std::vector<double> degrees() const;

    double max_abs() const { return upper_.max_abs(); }

    /// Scaled copy c * this.
    SymmetricSparseMatrix scaled(double c) const;

    SymmetricSparseMatrix add(const SymmetricSparseMatrix& other) const;

    bool operator==(const SymmetricSparseMatrix&) const = default;

private:
    static SymmetricSparseMatrix wrap_upper(CsrMatrix upper);
    CsrMatrix upper_;

    friend SymmetricSparseMatrix restrict_to(const SymmetricSparseMatrix&, std::span<const index_t>);
};

/// Vertex ids of a maximum-cardinality connected component of the graph
/// whose edges are the nonzero entries of m; isolated vertices form
/// singleton components. Ties between equal-size components go to the one
/// containing the smallest vertex id. Result is sorted ascending.
std::vector<index_t> largest_component(const SymmetricSparseMatrix& m);

/// Principal submatrix on the given strictly increasing vertex ids,
/// reindexed to [0, |ids|).
SymmetricSparseMatrix restrict_to(const SymmetricSparseMatrix& m, std::span<const index_t> ids);

}  // namespace motifspectral
