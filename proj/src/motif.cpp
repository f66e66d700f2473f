#include "motifspectral/motif.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace motifspectral {

namespace {

struct CatalogSeed {
    MotifName name;
    int m;
    std::vector<std::pair<int, int>> edges;  // 0-based
    std::vector<int> anchors;
};

// Edge sets for all connected directed motifs on at most three vertices,
// plus the two anchored motifs used for bipartite projections.
const std::vector<CatalogSeed>& catalog_seeds() {
    static const std::vector<CatalogSeed> seeds = {
        {MotifName::Ms, 2, {{0, 1}}, {0, 1}},
        {MotifName::Md, 2, {{0, 1}, {1, 0}}, {0, 1}},
        {MotifName::M1, 3, {{0, 1}, {1, 2}, {2, 0}}, {0, 1, 2}},
        {MotifName::M2, 3, {{0, 1}, {1, 0}, {1, 2}, {2, 0}}, {0, 1, 2}},
        {MotifName::M3, 3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 0}}, {0, 1, 2}},
        {MotifName::M4, 3, {{0, 1}, {1, 0}, {0, 2}, {2, 0}, {1, 2}, {2, 1}}, {0, 1, 2}},
        {MotifName::M5, 3, {{0, 1}, {1, 2}, {0, 2}}, {0, 1, 2}},
        {MotifName::M6, 3, {{0, 1}, {1, 0}, {2, 0}, {2, 1}}, {0, 1, 2}},
        {MotifName::M7, 3, {{0, 1}, {1, 0}, {0, 2}, {1, 2}}, {0, 1, 2}},
        {MotifName::M8, 3, {{0, 1}, {0, 2}}, {0, 1, 2}},
        {MotifName::M9, 3, {{0, 1}, {1, 2}}, {0, 1, 2}},
        {MotifName::M10, 3, {{0, 2}, {1, 2}}, {0, 1, 2}},
        {MotifName::M11, 3, {{0, 1}, {1, 0}, {0, 2}}, {0, 1, 2}},
        {MotifName::M12, 3, {{0, 1}, {1, 0}, {2, 0}}, {0, 1, 2}},
        {MotifName::M13, 3, {{0, 1}, {1, 0}, {1, 2}, {2, 1}}, {0, 1, 2}},
        {MotifName::Mcoll, 3, {{0, 1}, {2, 1}}, {0, 2}},
        {MotifName::Mexpa, 3, {{1, 0}, {1, 2}}, {0, 2}},
    };
    return seeds;
}

std::vector<std::array<int, 3>> permutations_of(int m) {
    std::array<int, 3> p{0, 1, 2};
    std::vector<std::array<int, 3>> out;
    std::vector<int> idx(m);
    for (int i = 0; i < m; ++i) idx[i] = i;
    do {
        std::array<int, 3> q{0, 1, 2};
        for (int i = 0; i < m; ++i) q[i] = idx[i];
        out.push_back(q);
    } while (std::next_permutation(idx.begin(), idx.end()));
    (void)p;
    return out;
}

std::array<int, 3> compose(const std::array<int, 3>& outer, const std::array<int, 3>& inner, int m) {
    // (outer after inner)[u] = outer[inner[u]]
    std::array<int, 3> r{0, 1, 2};
    for (int u = 0; u < m; ++u) r[u] = outer[inner[u]];
    return r;
}

std::array<int, 3> inverse(const std::array<int, 3>& p, int m) {
    std::array<int, 3> r{0, 1, 2};
    for (int u = 0; u < m; ++u) r[p[u]] = u;
    return r;
}

Motif build_motif(const CatalogSeed& seed) {
    Motif motif;
    motif.name = seed.name;
    motif.m = seed.m;
    motif.edges = seed.edges;
    motif.anchors = seed.anchors;

    const auto autos = motif_automorphisms(motif);

    // anchor-preserving permutations: both end positions 0 and m-1 must be
    // images of anchor vertices
    std::vector<std::array<int, 3>> keep;
    for (const auto& sigma : permutations_of(seed.m)) {
        bool has_first = false, has_last = false;
        for (int a : seed.anchors) {
            if (sigma[a] == 0) has_first = true;
            if (sigma[a] == seed.m - 1) has_last = true;
        }
        if (has_first && has_last) keep.push_back(sigma);
    }

    // quotient by automorphisms: sigma ~ tau iff tau^-1 sigma is an
    // automorphism; keep the lexicographically smallest member per class
    std::vector<std::array<int, 3>> reps;
    std::vector<bool> used(keep.size(), false);
    for (size_t i = 0; i < keep.size(); ++i) {
        if (used[i]) continue;
        std::array<int, 3> best = keep[i];
        for (size_t j = i; j < keep.size(); ++j) {
            if (used[j]) continue;
            const auto rel = compose(inverse(keep[j], seed.m), keep[i], seed.m);
            if (std::find(autos.begin(), autos.end(), rel) != autos.end()) {
                used[j] = true;
                best = std::min(best, keep[j]);
            }
        }
        reps.push_back(best);
    }
    std::sort(reps.begin(), reps.end());
    motif.automorphism_class_reps = reps;
    return motif;
}

}  // namespace

std::vector<std::array<int, 3>> motif_automorphisms(const Motif& motif) {
    std::vector<std::array<int, 3>> out;
    for (const auto& pi : permutations_of(motif.m)) {
        bool ok = true;
        for (int u = 0; u < motif.m && ok; ++u)
            for (int v = 0; v < motif.m && ok; ++v) {
                if (u == v) continue;
                if (motif.has_edge(u, v) != motif.has_edge(pi[u], pi[v])) ok = false;
            }
        if (ok) out.push_back(pi);
    }
    return out;
}

bool Motif::has_edge(int u, int v) const {
    return std::find(edges.begin(), edges.end(), std::pair{u, v}) != edges.end();
}

PairKind Motif::pair_kind(int u, int v) const {
    const bool uv = has_edge(u, v), vu = has_edge(v, u);
    if (uv && vu) return PairKind::Double;
    if (uv || vu) return PairKind::Single;
    return PairKind::Missing;
}

const Motif& motif_catalog(MotifName name) {
    static const std::map<MotifName, Motif> catalog = [] {
        std::map<MotifName, Motif> c;
        for (const auto& seed : catalog_seeds()) c.emplace(seed.name, build_motif(seed));
        return c;
    }();
    return catalog.at(name);
}

MotifName parse_motif_name(const std::string& s) {
    static const std::map<std::string, MotifName> names = {
        {"Ms", MotifName::Ms},     {"Md", MotifName::Md},     {"M1", MotifName::M1},
        {"M2", MotifName::M2},     {"M3", MotifName::M3},     {"M4", MotifName::M4},
        {"M5", MotifName::M5},     {"M6", MotifName::M6},     {"M7", MotifName::M7},
        {"M8", MotifName::M8},     {"M9", MotifName::M9},     {"M10", MotifName::M10},
        {"M11", MotifName::M11},   {"M12", MotifName::M12},   {"M13", MotifName::M13},
        {"Mcoll", MotifName::Mcoll}, {"Mexpa", MotifName::Mexpa},
    };
    auto it = names.find(s);
    if (it == names.end()) throw std::invalid_argument("unknown motif name: " + s);
    return it->second;
}

std::string to_string(MotifName name) {
    switch (name) {
        case MotifName::Ms: return "Ms";
        case MotifName::Md: return "Md";
        case MotifName::M1: return "M1";
        case MotifName::M2: return "M2";
        case MotifName::M3: return "M3";
        case MotifName::M4: return "M4";
        case MotifName::M5: return "M5";
        case MotifName::M6: return "M6";
        case MotifName::M7: return "M7";
        case MotifName::M8: return "M8";
        case MotifName::M9: return "M9";
        case MotifName::M10: return "M10";
        case MotifName::M11: return "M11";
        case MotifName::M12: return "M12";
        case MotifName::M13: return "M13";
        case MotifName::Mcoll: return "Mcoll";
        case MotifName::Mexpa: return "Mexpa";
    }
    return "?";
}

const std::vector<MotifName>& all_motif_names() {
    static const std::vector<MotifName> names = {
        MotifName::Ms, MotifName::Md,  MotifName::M1,  MotifName::M2,  MotifName::M3,
        MotifName::M4, MotifName::M5,  MotifName::M6,  MotifName::M7,  MotifName::M8,
        MotifName::M9, MotifName::M10, MotifName::M11, MotifName::M12, MotifName::M13,
        MotifName::Mcoll, MotifName::Mexpa,
    };
    return names;
}

}  // namespace motifspectral
