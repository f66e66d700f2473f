#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "motifspectral/mam.hpp"

namespace motifspectral {

void write_matrix_market(const std::string& path, const SymmetricSparseMatrix& m) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write matrix: " + path);
    out << "%%MatrixMarket matrix coordinate real symmetric\n";
    out << m.n() << ' ' << m.n() << ' ' << m.stored_nnz() << '\n';
    const CsrMatrix& u = m.upper();
    char buf[64];
    for (index_t i = 0; i < u.n(); ++i) {
        auto cols = u.row_indices(i);
        auto vals = u.row_data(i);
        for (size_t p = 0; p < cols.size(); ++p) {
            // lower triangle, 1-based: stored (i <= j) emitted as (j+1, i+1)
            std::snprintf(buf, sizeof(buf), "%lld %lld %.17g\n",
                          static_cast<long long>(cols[p] + 1), static_cast<long long>(i + 1),
                          vals[p]);
            out << buf;
        }
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

SymmetricSparseMatrix read_matrix_market(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open matrix: " + path);
    std::string line;
    if (!std::getline(in, line) || line.rfind("%%MatrixMarket", 0) != 0)
        throw std::runtime_error(path + ": not a MatrixMarket file");
    {
        std::istringstream head(line);
        std::string tag, object, format, field, symmetry;
        head >> tag >> object >> format >> field >> symmetry;
        if (object != "matrix" || format != "coordinate" || field != "real" ||
            symmetry != "symmetric")
            throw std::runtime_error(path + ": expected coordinate real symmetric");
    }
    while (std::getline(in, line))
        if (!line.empty() && line[0] != '%') break;
    index_t rows = 0, cols = 0, nnz = 0;
    {
        std::istringstream sz(line);
        if (!(sz >> rows >> cols >> nnz) || rows != cols)
            throw std::runtime_error(path + ": bad size line");
    }
    std::vector<index_t> ri, ci;
    std::vector<double> vals;
    ri.reserve(nnz);
    ci.reserve(nnz);
    vals.reserve(nnz);
    for (index_t e = 0; e < nnz; ++e) {
        index_t i, j;
        double v;
        if (!(in >> i >> j >> v)) throw std::runtime_error(path + ": truncated entries");
        ri.push_back(i - 1);
        ci.push_back(j - 1);
        vals.push_back(v);
    }
    return SymmetricSparseMatrix::from_triplets(rows, ri, ci, vals);
}

}  // namespace motifspectral
