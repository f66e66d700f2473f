#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "motifspectral/motif.hpp"

using namespace motifspectral;

TEST_CASE("catalog names round-trip") {
    for (MotifName name : all_motif_names()) CHECK(parse_motif_name(to_string(name)) == name);
    CHECK_THROWS(parse_motif_name("M99"));
}

TEST_CASE("catalog entries are weakly connected with sane anchors") {
    for (MotifName name : all_motif_names()) {
        const Motif& m = motif_catalog(name);
        CHECK((m.m == 2 || m.m == 3));
        CHECK(m.anchors.size() >= 2);

        // weak connectivity of the motif graph
        std::set<int> reached = {0};
        bool grew = true;
        while (grew) {
            grew = false;
            for (auto [u, v] : m.edges) {
                if (reached.count(u) && !reached.count(v)) { reached.insert(v); grew = true; }
                if (reached.count(v) && !reached.count(u)) { reached.insert(u); grew = true; }
            }
        }
        CHECK(static_cast<int>(reached.size()) == m.m);

        // every vertex appears in some edge
        std::set<int> touched;
        for (auto [u, v] : m.edges) { touched.insert(u); touched.insert(v); }
        CHECK(static_cast<int>(touched.size()) == m.m);
    }
}

TEST_CASE("anchored motifs are exactly the collider and expander") {
    for (MotifName name : all_motif_names()) {
        const Motif& m = motif_catalog(name);
        const bool anchored = name == MotifName::Mcoll || name == MotifName::Mexpa;
        CHECK(m.is_anchored() == anchored);
        if (anchored) CHECK(m.anchors == std::vector<int>{0, 2});
    }
}

TEST_CASE("automorphism groups have the right orders") {
    auto order = [](MotifName n) {
        return motif_automorphisms(motif_catalog(n)).size();
    };
    CHECK(order(MotifName::Ms) == 1);
    CHECK(order(MotifName::Md) == 2);
    CHECK(order(MotifName::M1) == 3);   // cyclic rotations
    CHECK(order(MotifName::M2) == 1);
    CHECK(order(MotifName::M4) == 6);   // full symmetric group
    CHECK(order(MotifName::M5) == 1);
    CHECK(order(MotifName::M6) == 2);   // swap the reciprocated pair
    CHECK(order(MotifName::M8) == 2);   // swap the two targets
    CHECK(order(MotifName::M9) == 1);
    CHECK(order(MotifName::M13) == 2);
    CHECK(order(MotifName::Mcoll) == 2);
}

TEST_CASE("class representative counts match group orders") {
    // |S_MA^~| = |anchor-preserving permutations| / |Aut|
    for (MotifName name : all_motif_names()) {
        const Motif& m = motif_catalog(name);
        size_t anchor_preserving = 0;
        if (m.m == 2) anchor_preserving = 2;
        else if (!m.is_anchored()) anchor_preserving = 6;
        else anchor_preserving = 2;  // both anchors pinned to the ends
        const size_t autos = motif_automorphisms(m).size();
        CHECK(m.automorphism_class_reps.size() == anchor_preserving / autos);
    }
}

TEST_CASE("pair kinds classify edges") {
    const Motif& m2 = motif_catalog(MotifName::M2);
    CHECK(m2.pair_kind(0, 1) == PairKind::Double);
    CHECK(m2.pair_kind(1, 2) == PairKind::Single);
    CHECK(m2.pair_kind(0, 2) == PairKind::Single);
    const Motif& m8 = motif_catalog(MotifName::M8);
    CHECK(m8.pair_kind(1, 2) == PairKind::Missing);
}
