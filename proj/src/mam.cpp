#include <algorithm>
#include <set>
#include <stdexcept>

#include "mam_internal.hpp"

namespace motifspectral {

using detail::motif_formula;

Closure parse_closure(const std::string& s) {
    if (s == "func" || s == "functional") return Closure::Functional;
    if (s == "struc" || s == "structural") return Closure::Structural;
    throw std::invalid_argument("unknown closure: " + s + " (expected func|struc)");
}

Weighting parse_weighting(const std::string& s) {
    if (s == "unweighted") return Weighting::Unweighted;
    if (s == "mean") return Weighting::Mean;
    if (s == "product") return Weighting::Product;
    throw std::invalid_argument("unknown weighting: " + s + " (expected unweighted|mean|product)");
}

Method parse_method(const std::string& s) {
    if (s == "dense") return Method::Dense;
    if (s == "sparse") return Method::Sparse;
    if (s == "auto") return Method::Auto;
    throw std::invalid_argument("unknown method: " + s + " (expected dense|sparse|auto)");
}

namespace {

Method resolve_method(const DirectedGraph& g, Method m) {
    if (m != Method::Auto) return m;
    const double n = static_cast<double>(g.n());
    const double density = n == 0 ? 0.0 : static_cast<double>(g.num_edges()) / (n * n);
    return density < kAutoSparseDensity ? Method::Sparse : Method::Dense;
}

SymmetricSparseMatrix build_one(const GraphMatrices& gm_weighted, const Motif& motif,
                                Closure closure, Weighting weighting, Method method) {
    // the unweighted scheme is the mean scheme on a unit-weight graph
    const GraphMatrices gm =
        weighting == Weighting::Unweighted ? unit_weight_matrices(gm_weighted) : gm_weighted;
    const detail::MotifFormula& f = motif_formula(motif.name);
    const bool product = weighting == Weighting::Product;
    const double coef = product ? 1.0 : f.mean_coef;
    const auto& c = product ? f.c_prod : f.c_mean;
    const auto& cp = product ? f.cp_prod : f.cp_mean;
    const bool two_vertex = motif.m == 2;
    if (method == Method::Dense)
        return detail::dense_to_symmetric(detail::eval_dense(gm, closure, two_vertex, coef, c, cp));
    return detail::sparse_to_symmetric(detail::eval_sparse(gm, closure, two_vertex, coef, c, cp));
}

}  // namespace

SymmetricSparseMatrix build_mam(const DirectedGraph& g, const MamSpec& spec) {
    if (spec.motifs.empty()) throw std::invalid_argument("build_mam: empty motif list");
    std::set<MotifName> seen(spec.motifs.begin(), spec.motifs.end());
    if (seen.size() != spec.motifs.size())
        throw std::invalid_argument("build_mam: duplicate motif in list");
    if (g.n() == 0) return SymmetricSparseMatrix(0);

    const Method method = resolve_method(g, spec.method);
    const GraphMatrices gm = build_matrices(g);
    SymmetricSparseMatrix total(g.n());
    for (MotifName name : spec.motifs)
        total = total.add(build_one(gm, motif_catalog(name), spec.closure, spec.weighting, method));
    return total;
}

SymmetricSparseMatrix generic_mam(const DirectedGraph& g, MotifName name, Closure closure,
                                  Weighting weighting) {
    if (g.n() == 0) return SymmetricSparseMatrix(0);
    const Motif& motif = motif_catalog(name);
    GraphMatrices gm = build_matrices(g);
    if (weighting == Weighting::Unweighted) gm = unit_weight_matrices(gm);
    const detail::DerivedFormula f = detail::derive_formula(motif, weighting);
    return detail::dense_to_symmetric(
        detail::eval_dense_flat(gm, closure, motif.m == 2, f.coef, f.terms));
}

void validate_bipartite(const DirectedGraph& g, std::span<const index_t> sources,
                        std::span<const index_t> destinations) {
    std::vector<int8_t> side(g.n(), 0);  // 1 source, 2 destination
    for (index_t s : sources) {
        if (s < 0 || s >= g.n()) throw std::invalid_argument("bipartite: source id out of range");
        side[s] = 1;
    }
    for (index_t d : destinations) {
        if (d < 0 || d >= g.n()) throw std::invalid_argument("bipartite: destination id out of range");
        if (side[d] == 1) throw std::invalid_argument("bipartite: vertex " + std::to_string(d) +
                                                      " listed as both source and destination");
        side[d] = 2;
    }
    for (index_t v = 0; v < g.n(); ++v)
        if (side[v] == 0)
            throw std::invalid_argument("bipartite: vertex " + std::to_string(v) +
                                        " in neither source nor destination set");
    for (const Edge& e : g.edges()) {
        if (side[e.src] != 1 || side[e.dst] != 2)
            throw std::invalid_argument("bipartite: edge (" + std::to_string(e.src) + "," +
                                        std::to_string(e.dst) + ") does not go source -> destination");
    }
}

std::pair<SymmetricSparseMatrix, SymmetricSparseMatrix> bipartite_mams(
    const DirectedGraph& g, std::span<const index_t> sources,
    std::span<const index_t> destinations, Weighting weighting) {
    validate_bipartite(g, sources, destinations);
    std::vector<index_t> s(sources.begin(), sources.end());
    std::vector<index_t> d(destinations.begin(), destinations.end());
    std::sort(s.begin(), s.end());
    std::sort(d.begin(), d.end());

    // functional and structural coincide for these motifs on bipartite input
    MamSpec coll{{MotifName::Mcoll}, Closure::Functional, weighting, Method::Auto};
    MamSpec expa{{MotifName::Mexpa}, Closure::Functional, weighting, Method::Auto};
    return {restrict_to(build_mam(g, coll), s), restrict_to(build_mam(g, expa), d)};
}

}  // namespace motifspectral
