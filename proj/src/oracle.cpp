#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "motifspectral/mam.hpp"

namespace motifspectral {

namespace {

using EdgeSet = std::vector<std::pair<index_t, index_t>>;  // sorted: canonical instance key

// Weight of one instance, read off its edge set. A reciprocated vertex
// pair counts as one position contributing the sum of its two directions.
double instance_weight(const DirectedGraph& g, const EdgeSet& inst,
                       std::span<const index_t> iverts, int motif_edge_count,
                       Weighting weighting) {
    if (weighting == Weighting::Unweighted) return 1.0;
    if (weighting == Weighting::Mean) {
        double total = 0.0;
        for (auto [a, b] : inst) total += g.weight(a, b);
        return total / motif_edge_count;
    }
    auto inst_has = [&](index_t a, index_t b) {
        return std::binary_search(inst.begin(), inst.end(), std::pair{a, b});
    };
    double prod = 1.0;
    for (size_t x = 0; x < iverts.size(); ++x)
        for (size_t y = x + 1; y < iverts.size(); ++y) {
            const index_t a = iverts[x], b = iverts[y];
            const bool ab = inst_has(a, b), ba = inst_has(b, a);
            if (ab && ba) prod *= g.weight(a, b) + g.weight(b, a);
            else if (ab) prod *= g.weight(a, b);
            else if (ba) prod *= g.weight(b, a);
        }
    return prod;
}

}  // namespace

SymmetricSparseMatrix brute_force_mam(const DirectedGraph& g, const MamSpec& spec,
                                      index_t oracle_bound) {
    if (spec.motifs.size() != 1)
        throw std::invalid_argument("brute_force_mam: exactly one motif expected");
    if (g.n() > oracle_bound)
        throw std::invalid_argument("brute_force_mam: graph exceeds the oracle vertex bound (" +
                                    std::to_string(oracle_bound) + ")");
    const Motif& motif = motif_catalog(spec.motifs[0]);
    const index_t n = g.n();
    const int m = motif.m;

    // collect instances: injective vertex maps whose mapped edges are
    // present (functional) or exactly the induced edges (structural),
    // deduplicated by their edge set
    std::set<EdgeSet> instances;
    auto consider = [&](const std::array<index_t, 3>& vs) {
        for (int u = 0; u < m; ++u)
            for (int v = 0; v < m; ++v) {
                if (u == v) continue;
                const bool in_motif = motif.has_edge(u, v);
                const bool in_graph = g.has_edge(vs[u], vs[v]);
                if (spec.closure == Closure::Functional ? (in_motif && !in_graph)
                                                        : (in_motif != in_graph))
                    return;
            }
        EdgeSet key;
        for (auto [u, v] : motif.edges) key.emplace_back(vs[u], vs[v]);
        std::sort(key.begin(), key.end());
        instances.insert(std::move(key));
    };

    std::array<index_t, 3> verts{};
    if (m == 2) {
        for (verts[0] = 0; verts[0] < n; ++verts[0])
            for (verts[1] = 0; verts[1] < n; ++verts[1])
                if (verts[0] != verts[1]) consider(verts);
    } else {
        for (verts[0] = 0; verts[0] < n; ++verts[0])
            for (verts[1] = 0; verts[1] < n; ++verts[1])
                for (verts[2] = 0; verts[2] < n; ++verts[2])
                    if (verts[0] != verts[1] && verts[0] != verts[2] && verts[1] != verts[2])
                        consider(verts);
    }

    // accumulate each instance's weight into all of its anchored pairs,
    // found by enumerating isomorphisms from the motif onto the instance
    std::map<std::pair<index_t, index_t>, double> accum;
    for (const EdgeSet& inst : instances) {
        std::vector<index_t> iverts;
        for (auto [a, b] : inst) {
            iverts.push_back(a);
            iverts.push_back(b);
        }
        std::sort(iverts.begin(), iverts.end());
        iverts.erase(std::unique(iverts.begin(), iverts.end()), iverts.end());

        auto inst_has = [&](index_t a, index_t b) {
            return std::binary_search(inst.begin(), inst.end(), std::pair{a, b});
        };

        std::set<std::pair<index_t, index_t>> pairs;
        std::array<index_t, 3> phi{};  // motif vertex -> instance vertex
        std::vector<int> perm(m);
        for (int i = 0; i < m; ++i) perm[i] = i;
        do {
            for (int u = 0; u < m; ++u) phi[u] = iverts[perm[u]];
            bool iso = true;
            for (int u = 0; u < m && iso; ++u)
                for (int v = 0; v < m && iso; ++v) {
                    if (u == v) continue;
                    if (motif.has_edge(u, v) != inst_has(phi[u], phi[v])) iso = false;
                }
            if (!iso) continue;
            for (size_t a = 0; a < motif.anchors.size(); ++a)
                for (size_t b = a + 1; b < motif.anchors.size(); ++b) {
                    index_t x = phi[motif.anchors[a]], y = phi[motif.anchors[b]];
                    if (x > y) std::swap(x, y);
                    pairs.insert({x, y});
                }
        } while (std::next_permutation(perm.begin(), perm.end()));

        const double w = instance_weight(g, inst, iverts, motif.num_edges(), spec.weighting);
        for (auto [x, y] : pairs) accum[{x, y}] += w;
    }

    std::vector<index_t> rows, cols;
    std::vector<double> vals;
    for (const auto& [pair, v] : accum) {
        rows.push_back(pair.first);
        cols.push_back(pair.second);
        vals.push_back(v);
    }
    return SymmetricSparseMatrix::from_triplets(n, rows, cols, vals);
}

}  // namespace motifspectral
