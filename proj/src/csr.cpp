#include "motifspectral/csr.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace motifspectral {

CsrMatrix CsrBuilder::take() {
    while (indptr_.size() < static_cast<size_t>(n_) + 1) indptr_.push_back(static_cast<index_t>(indices_.size()));
    CsrMatrix m;
    m.n_ = n_;
    m.indptr_ = std::move(indptr_);
    m.indices_ = std::move(indices_);
    m.data_ = std::move(data_);
    return m;
}

CsrMatrix CsrMatrix::from_triplets(index_t n,
                                   std::span<const index_t> rows,
                                   std::span<const index_t> cols,
                                   std::span<const double> vals) {
    if (rows.size() != cols.size() || rows.size() != vals.size())
        throw std::invalid_argument("from_triplets: length mismatch");
    const size_t m = rows.size();
    for (size_t e = 0; e < m; ++e)
        if (rows[e] < 0 || rows[e] >= n || cols[e] < 0 || cols[e] >= n)
            throw std::out_of_range("from_triplets: index out of range");
    std::vector<size_t> order(m);
    std::iota(order.begin(), order.end(), size_t{0});
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return rows[a] != rows[b] ? rows[a] < rows[b] : cols[a] < cols[b];
    });
    CsrBuilder b(n);
    index_t cur_row = 0;
    double pending = 0.0;
    for (size_t t = 0; t < m; ++t) {
        const size_t e = order[t];
        while (cur_row < rows[e]) { b.finish_row(); ++cur_row; }
        pending += vals[e];
        const bool dup_next = t + 1 < m && rows[order[t + 1]] == rows[e] && cols[order[t + 1]] == cols[e];
        if (!dup_next) {
            b.push(cols[e], pending);
            pending = 0.0;
        }
    }
    while (cur_row < n) { b.finish_row(); ++cur_row; }
    return b.take();
}

double CsrMatrix::at(index_t i, index_t j) const {
    auto cols = row_indices(i);
    auto it = std::lower_bound(cols.begin(), cols.end(), j);
    if (it == cols.end() || *it != j) return 0.0;
    return data_[indptr_[i] + (it - cols.begin())];
}

CsrMatrix CsrMatrix::transpose() const {
    CsrMatrix t;
    t.n_ = n_;
    t.indptr_.assign(static_cast<size_t>(n_) + 1, 0);
    t.indices_.resize(indices_.size());
    t.data_.resize(data_.size());
    for (index_t c : indices_) ++t.indptr_[c + 1];
    for (index_t i = 0; i < n_; ++i) t.indptr_[i + 1] += t.indptr_[i];
    std::vector<index_t> next(t.indptr_.begin(), t.indptr_.end() - 1);
    for (index_t i = 0; i < n_; ++i) {
        for (index_t p = indptr_[i]; p < indptr_[i + 1]; ++p) {
            const index_t pos = next[indices_[p]]++;
            t.indices_[pos] = i;
            t.data_[pos] = data_[p];
        }
    }
    return t;  // per-row columns come out sorted because rows are scanned in order
}

CsrMatrix CsrMatrix::multiply(const CsrMatrix& other) const {
    if (n_ != other.n_) throw std::invalid_argument("multiply: dimension mismatch");
    const index_t n = n_;
    std::vector<index_t> out_ptr(static_cast<size_t>(n) + 1, 0);

    // pass 1: symbolic row sizes
#pragma omp parallel
    {
        std::vector<index_t> marker(static_cast<size_t>(n), -1);
#pragma omp for schedule(dynamic, 64)
        for (index_t i = 0; i < n; ++i) {
            index_t count = 0;
            for (index_t p = indptr_[i]; p < indptr_[i + 1]; ++p) {
                const index_t k = indices_[p];
                for (index_t q = other.indptr_[k]; q < other.indptr_[k + 1]; ++q) {
                    const index_t j = other.indices_[q];
                    if (marker[j] != i) { marker[j] = i; ++count; }
                }
            }
            out_ptr[i + 1] = count;
        }
    }
    for (index_t i = 0; i < n; ++i) out_ptr[i + 1] += out_ptr[i];

    CsrMatrix out;
    out.n_ = n;
    out.indptr_ = std::move(out_ptr);
    out.indices_.resize(out.indptr_.back());
    out.data_.resize(out.indptr_.back());

    // pass 2: numeric; per-row accumulation order is the fixed scan order,
    // rows are independent so threading does not affect the result
#pragma omp parallel
    {
        std::vector<double> acc(static_cast<size_t>(n), 0.0);
        std::vector<index_t> marker(static_cast<size_t>(n), -1);
        std::vector<index_t> cols;
#pragma omp for schedule(dynamic, 64)
        for (index_t i = 0; i < n; ++i) {
            cols.clear();
            for (index_t p = indptr_[i]; p < indptr_[i + 1]; ++p) {
                const index_t k = indices_[p];
                const double v = data_[p];
                for (index_t q = other.indptr_[k]; q < other.indptr_[k + 1]; ++q) {
                    const index_t j = other.indices_[q];
                    if (marker[j] != i) {
                        marker[j] = i;
                        acc[j] = v * other.data_[q];
                        cols.push_back(j);
                    } else {
                        acc[j] += v * other.data_[q];
                    }
                }
            }
            std::sort(cols.begin(), cols.end());
            index_t pos = out.indptr_[i];
            for (index_t j : cols) {
                out.indices_[pos] = j;
                out.data_[pos] = acc[j];
                ++pos;
            }
        }
    }
    return out;
}

CsrMatrix CsrMatrix::hadamard(const CsrMatrix& other) const {
    if (n_ != other.n_) throw std::invalid_argument("hadamard: dimension mismatch");
    CsrBuilder b(n_);
    for (index_t i = 0; i < n_; ++i) {
        index_t p = indptr_[i], q = other.indptr_[i];
        const index_t pe = indptr_[i + 1], qe = other.indptr_[i + 1];
        while (p < pe && q < qe) {
            if (indices_[p] < other.indices_[q]) ++p;
            else if (indices_[p] > other.indices_[q]) ++q;
            else { b.push(indices_[p], data_[p] * other.data_[q]); ++p; ++q; }
        }
        b.finish_row();
    }
    return b.take();
}

CsrMatrix CsrMatrix::add(const CsrMatrix& other, double alpha, double beta) const {
    if (n_ != other.n_) throw std::invalid_argument("add: dimension mismatch");
    CsrBuilder b(n_);
    for (index_t i = 0; i < n_; ++i) {
        index_t p = indptr_[i], q = other.indptr_[i];
        const index_t pe = indptr_[i + 1], qe = other.indptr_[i + 1];
        while (p < pe || q < qe) {
            if (q >= qe || (p < pe && indices_[p] < other.indices_[q])) {
                b.push(indices_[p], alpha * data_[p]);
                ++p;
            } else if (p >= pe || indices_[q] < indices_[p]) {
                b.push(other.indices_[q], beta * other.data_[q]);
                ++q;
            } else {
                b.push(indices_[p], alpha * data_[p] + beta * other.data_[q]);
                ++p; ++q;
            }
        }
        b.finish_row();
    }
    return b.take();
}

CsrMatrix CsrMatrix::scale_rows(std::span<const double> s) const {
    if (static_cast<index_t>(s.size()) != n_) throw std::invalid_argument("scale_rows: length mismatch");
    CsrMatrix out = *this;
    for (index_t i = 0; i < n_; ++i)
        for (index_t p = out.indptr_[i]; p < out.indptr_[i + 1]; ++p) out.data_[p] *= s[i];
    return out;
}

CsrMatrix CsrMatrix::scale_cols(std::span<const double> s) const {
    if (static_cast<index_t>(s.size()) != n_) throw std::invalid_argument("scale_cols: length mismatch");
    CsrMatrix out = *this;
    for (size_t p = 0; p < out.indices_.size(); ++p) out.data_[p] *= s[out.indices_[p]];
    return out;
}

CsrMatrix CsrMatrix::zero_diagonal() const {
    CsrBuilder b(n_);
    for (index_t i = 0; i < n_; ++i) {
        for (index_t p = indptr_[i]; p < indptr_[i + 1]; ++p)
            if (indices_[p] != i) b.push(indices_[p], data_[p]);
        b.finish_row();
    }
    return b.take();
}

CsrMatrix CsrMatrix::subtract_support(const CsrMatrix& mask) const {
    if (n_ != mask.n_) throw std::invalid_argument("subtract_support: dimension mismatch");
    CsrBuilder b(n_);
    for (index_t i = 0; i < n_; ++i) {
        index_t q = mask.indptr_[i];
        const index_t qe = mask.indptr_[i + 1];
        for (index_t p = indptr_[i]; p < indptr_[i + 1]; ++p) {
            const index_t j = indices_[p];
            while (q < qe && mask.indices_[q] < j) ++q;
            if (q < qe && mask.indices_[q] == j) continue;
            b.push(j, data_[p]);
        }
        b.finish_row();
    }
    return b.take();
}

CsrMatrix CsrMatrix::ones_like() const {
    CsrMatrix out = *this;
    std::fill(out.data_.begin(), out.data_.end(), 1.0);
    return out;
}

CsrMatrix CsrMatrix::prune(double threshold) const {
    CsrBuilder b(n_);
    for (index_t i = 0; i < n_; ++i) {
        for (index_t p = indptr_[i]; p < indptr_[i + 1]; ++p)
            if (std::abs(data_[p]) > threshold) b.push(indices_[p], data_[p]);
        b.finish_row();
    }
    return b.take();
}

std::vector<double> CsrMatrix::row_sums() const {
    std::vector<double> s(static_cast<size_t>(n_), 0.0);
    for (index_t i = 0; i < n_; ++i)
        for (index_t p = indptr_[i]; p < indptr_[i + 1]; ++p) s[i] += data_[p];
    return s;
}

std::vector<double> CsrMatrix::col_sums() const {
    std::vector<double> s(static_cast<size_t>(n_), 0.0);
    for (size_t p = 0; p < indices_.size(); ++p) s[indices_[p]] += data_[p];
    return s;
}

double CsrMatrix::max_abs() const {
    double m = 0.0;
    for (double v : data_) m = std::max(m, std::abs(v));
    return m;
}

bool CsrMatrix::is_symmetric(double tol) const {
    const CsrMatrix t = transpose();
    if (t.indptr_ != indptr_ || t.indices_ != indices_) return false;
    for (size_t p = 0; p < data_.size(); ++p)
        if (std::abs(data_[p] - t.data_[p]) > tol) return false;
    return true;
}

void CsrMatrix::mul_vec(std::span<const double> x, std::span<double> y) const {
    for (index_t i = 0; i < n_; ++i) {
        double s = 0.0;
        for (index_t p = indptr_[i]; p < indptr_[i + 1]; ++p) s += data_[p] * x[indices_[p]];
        y[i] = s;
    }
}

}  // namespace motifspectral
