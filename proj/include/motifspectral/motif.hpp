#pragma once

#include <array>
#include <string>
#include <vector>

#include "motifspectral/csr.hpp"

namespace motifspectral {

enum class MotifName {
    Ms, Md,
    M1, M2, M3, M4, M5, M6, M7, M8, M9, M10, M11, M12, M13,
    Mcoll, Mexpa,
};

MotifName parse_motif_name(const std::string& s);   // throws on unknown names
std::string to_string(MotifName name);
const std::vector<MotifName>& all_motif_names();

/// How an unordered vertex pair of a motif is connected.
enum class PairKind : uint8_t {
    Missing,   // no edge either way
    Single,    // exactly one directed edge
    Double,    // edges both ways
};

/// Catalog entry for a motif on 2 or 3 vertices. Vertices are 0-based
/// internally. A permutation rep sigma assigns motif vertex u to tuple
/// position sigma[u]; position 0 is the row vertex, position m-1 the
/// column vertex, and (for m = 3) position 1 the summed-over middle.
struct Motif {
    MotifName name;
    int m;                                        // vertex count (2 or 3)
    std::vector<std::pair<int, int>> edges;       // directed, 0-based
    std::vector<int> anchors;                     // sorted, 0-based
    std::vector<std::array<int, 3>> automorphism_class_reps;

    int num_edges() const { return static_cast<int>(edges.size()); }
    bool has_edge(int u, int v) const;
    PairKind pair_kind(int u, int v) const;       // unordered
    bool is_anchored() const { return static_cast<int>(anchors.size()) < m; }
};

const Motif& motif_catalog(MotifName name);

/// All automorphisms of the motif graph (permutations pi with
/// (u,v) in E  <=>  (pi u, pi v) in E).
std::vector<std::array<int, 3>> motif_automorphisms(const Motif& motif);

}  // namespace motifspectral
