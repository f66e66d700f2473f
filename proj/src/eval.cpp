#include "motifspectral/eval.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "motifspectral/mam.hpp"

namespace motifspectral {

namespace {

struct Contingency {
    std::map<std::pair<int, int>, double> cells;
    std::map<int, double> row_sums, col_sums;
    double total = 0.0;
};

Contingency contingency(const Partition& a, const Partition& b) {
    if (a.assignment.size() != b.assignment.size())
        throw std::invalid_argument("partition comparison: node sets differ in size");
    Contingency c;
    for (size_t i = 0; i < a.assignment.size(); ++i) {
        const int la = a.assignment[i], lb = b.assignment[i];
        if (la < 0 || lb < 0) continue;
        c.cells[{la, lb}] += 1.0;
        c.row_sums[la] += 1.0;
        c.col_sums[lb] += 1.0;
        c.total += 1.0;
    }
    if (c.total == 0.0)
        throw std::invalid_argument("partition comparison: no commonly clustered nodes");
    return c;
}

double choose2(double x) { return x * (x - 1.0) / 2.0; }

}  // namespace

double ari(const Partition& a, const Partition& b) {
    const Contingency c = contingency(a, b);
    double sum_cells = 0.0, sum_rows = 0.0, sum_cols = 0.0;
    for (const auto& [k, v] : c.cells) sum_cells += choose2(v);
    for (const auto& [k, v] : c.row_sums) sum_rows += choose2(v);
    for (const auto& [k, v] : c.col_sums) sum_cols += choose2(v);
    const double pairs = choose2(c.total);
    const double expected = pairs > 0 ? sum_rows * sum_cols / pairs : 0.0;
    const double maximum = 0.5 * (sum_rows + sum_cols);
    if (maximum == expected) return 1.0;  // both partitions trivial
    return (sum_cells - expected) / (maximum - expected);
}

double nmi(const Partition& a, const Partition& b) {
    const Contingency c = contingency(a, b);
    double h_a = 0.0, h_b = 0.0, mi = 0.0;
    for (const auto& [k, v] : c.row_sums) {
        const double p = v / c.total;
        h_a -= p * std::log(p);
    }
    for (const auto& [k, v] : c.col_sums) {
        const double p = v / c.total;
        h_b -= p * std::log(p);
    }
    for (const auto& [k, v] : c.cells) {
        const double p = v / c.total;
        const double pa = c.row_sums.at(k.first) / c.total;
        const double pb = c.col_sums.at(k.second) / c.total;
        mi += p * std::log(p / (pa * pb));
    }
    const double mean_h = 0.5 * (h_a + h_b);
    if (mean_h == 0.0) return 0.0;  // a single-cluster side carries no information
    return std::clamp(mi / mean_h, 0.0, 1.0);
}

double ncut(const SymmetricSparseMatrix& m, const Partition& p) {
    if (static_cast<index_t>(p.assignment.size()) != m.n())
        throw std::invalid_argument("ncut: partition size does not match the matrix");
    for (int label : p.assignment)
        if (label < 0) throw std::invalid_argument("ncut: all nodes must be clustered");

    std::map<int, double> vol, cut;
    const CsrMatrix full = m.to_full();
    for (index_t i = 0; i < full.n(); ++i) {
        auto cols = full.row_indices(i);
        auto vals = full.row_data(i);
        for (size_t q = 0; q < cols.size(); ++q) {
            vol[p.assignment[i]] += vals[q];
            if (p.assignment[i] != p.assignment[cols[q]]) cut[p.assignment[i]] += vals[q];
        }
    }
    double total = 0.0;
    for (const auto& [label, v] : vol) {
        if (!(v > 0.0))
            throw std::invalid_argument("ncut: cluster " + std::to_string(label) +
                                        " has zero volume");
        total += cut[label] / v;
    }
    return 0.5 * total;
}

SweepProfile sweep_profile(const SymmetricSparseMatrix& m) {
    const index_t n = m.n();
    if (n < 2) throw std::invalid_argument("sweep_profile: need at least two vertices");
    if (static_cast<index_t>(largest_component(m).size()) != n)
        throw std::invalid_argument("sweep_profile: matrix must be connected");

    const Embedding e = embed(RwLaplacianOp(m, 0.0), 2);

    SweepProfile s;
    s.order.resize(n);
    std::iota(s.order.begin(), s.order.end(), index_t{0});
    std::stable_sort(s.order.begin(), s.order.end(), [&](index_t x, index_t y) {
        if (e.points(x, 0) != e.points(y, 0)) return e.points(x, 0) < e.points(y, 0);
        return x < y;
    });

    const CsrMatrix full = m.to_full();
    const std::vector<double> deg = full.row_sums();
    const double total_vol = std::accumulate(deg.begin(), deg.end(), 0.0);

    std::vector<char> in_prefix(n, 0);
    double vol = 0.0, internal = 0.0;
    s.ncut_values.resize(n - 1);
    for (index_t step = 0; step < n - 1; ++step) {
        const index_t v = s.order[step];
        in_prefix[v] = 1;
        vol += deg[v];
        auto cols = full.row_indices(v);
        auto vals = full.row_data(v);
        for (size_t q = 0; q < cols.size(); ++q)
            if (in_prefix[cols[q]]) internal += 2.0 * vals[q];
        const double cut = vol - internal;
        const double other = total_vol - vol;
        s.ncut_values[step] = 0.5 * (cut / vol + cut / other);
    }
    const auto it = std::min_element(s.ncut_values.begin(), s.ncut_values.end());
    s.argmin_split = static_cast<index_t>(it - s.ncut_values.begin()) + 1;
    s.min_ncut = *it;
    return s;
}

CirMatrix cir_matrix(const DirectedGraph& g, const Partition& p) {
    if (static_cast<index_t>(p.assignment.size()) != g.n())
        throw std::invalid_argument("cir_matrix: partition size does not match the graph");
    const int k = p.k;
    std::vector<double> flow(static_cast<size_t>(k) * k, 0.0);
    for (const Edge& e : g.edges()) {
        const int a = p.assignment[e.src], b = p.assignment[e.dst];
        if (a < 0 || b < 0) continue;
        flow[static_cast<size_t>(a) * k + b] += e.weight;
    }
    CirMatrix c;
    c.k = k;
    c.values.assign(static_cast<size_t>(k) * k, 0.0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (i == j) continue;
            const double fij = flow[static_cast<size_t>(i) * k + j];
            const double fji = flow[static_cast<size_t>(j) * k + i];
            const double denom = fij + fji;
            c.values[static_cast<size_t>(i) * k + j] = denom > 0 ? 0.5 * (fij - fji) / denom : 0.0;
        }
    return c;
}

SymmetricSparseMatrix aat_similarity(const DirectedGraph& g, std::span<const index_t> sources,
                                     std::span<const index_t> destinations) {
    validate_bipartite(g, sources, destinations);
    std::vector<index_t> s(sources.begin(), sources.end());
    std::sort(s.begin(), s.end());

    const CsrMatrix a = g.adjacency();
    const CsrMatrix aat = a.multiply(a.transpose()).zero_diagonal();
    return restrict_to(SymmetricSparseMatrix::from_full(aat), s);
}

}  // namespace motifspectral
