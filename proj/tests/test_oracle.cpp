#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "motifspectral/mam.hpp"

using namespace motifspectral;

namespace {

MamSpec spec(MotifName m, Closure c = Closure::Functional, Weighting w = Weighting::Mean) {
    return {{m}, c, w, Method::Auto};
}

}  // namespace

TEST_CASE("single edge symmetrizes") {
    DirectedGraph g(2, {{0, 1, 7.0}});
    SymmetricSparseMatrix m = brute_force_mam(g, spec(MotifName::Ms));
    CHECK(m.at(0, 1) == doctest::Approx(7.0));
    CHECK(m.at(0, 0) == 0.0);
    CHECK(m.at(1, 1) == 0.0);
}

TEST_CASE("reciprocated pair averages under the mean scheme") {
    DirectedGraph g(2, {{0, 1, 2.0}, {1, 0, 5.0}});
    CHECK(brute_force_mam(g, spec(MotifName::Md)).at(0, 1) == doctest::Approx(3.5));
}

TEST_CASE("three-cycle: mean and product weights of the single instance") {
    DirectedGraph g(3, {{0, 1, 1.0}, {1, 2, 2.0}, {2, 0, 3.0}});
    SymmetricSparseMatrix mean = brute_force_mam(g, spec(MotifName::M1));
    SymmetricSparseMatrix prod =
        brute_force_mam(g, spec(MotifName::M1, Closure::Functional, Weighting::Product));
    for (index_t i = 0; i < 3; ++i)
        for (index_t j = i + 1; j < 3; ++j) {
            CHECK(mean.at(i, j) == doctest::Approx(2.0));
            CHECK(prod.at(i, j) == doctest::Approx(6.0));
        }
}

TEST_CASE("empty graph gives the zero matrix") {
    DirectedGraph g(4, {});
    CHECK(brute_force_mam(g, spec(MotifName::M4)).stored_nnz() == 0);
    CHECK(brute_force_mam(DirectedGraph(0, {}), spec(MotifName::M1)).n() == 0);
}

TEST_CASE("unweighted entries count instances") {
    // two out-stars from 0: targets {1,2} and {1,3} and {2,3}
    DirectedGraph g(4, {{0, 1, 9.0}, {0, 2, 4.0}, {0, 3, 2.0}});
    SymmetricSparseMatrix m =
        brute_force_mam(g, spec(MotifName::M8, Closure::Functional, Weighting::Unweighted));
    CHECK(m.at(1, 2) == doctest::Approx(1.0));
    CHECK(m.at(1, 3) == doctest::Approx(1.0));
    CHECK(m.at(2, 3) == doctest::Approx(1.0));
    CHECK(m.at(0, 1) == doctest::Approx(2.0));  // star instances {1,2} and {1,3}
}

TEST_CASE("structural instances exclude supergraphs") {
    // 3-cycle plus a chord: the chord destroys structural M1 but not functional
    DirectedGraph g(3, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 0, 1.0}, {0, 2, 1.0}});
    SymmetricSparseMatrix func = brute_force_mam(g, spec(MotifName::M1, Closure::Functional));
    SymmetricSparseMatrix struc = brute_force_mam(g, spec(MotifName::M1, Closure::Structural));
    CHECK(func.at(0, 1) > 0.0);
    CHECK(struc.stored_nnz() == 0);
    for (index_t i = 0; i < 3; ++i)
        for (index_t j = i + 1; j < 3; ++j) CHECK(struc.at(i, j) <= func.at(i, j));
}

TEST_CASE("anchored motifs accumulate only anchor pairs") {
    // collider 0 -> 2 <- 1: only the pair {0,1} is anchored
    DirectedGraph g(3, {{0, 2, 2.0}, {1, 2, 4.0}});
    SymmetricSparseMatrix m = brute_force_mam(g, spec(MotifName::Mcoll));
    CHECK(m.at(0, 1) == doctest::Approx(3.0));
    CHECK(m.at(0, 2) == 0.0);
    CHECK(m.at(1, 2) == 0.0);

    SymmetricSparseMatrix e = brute_force_mam(g, spec(MotifName::Mexpa));
    CHECK(e.stored_nnz() == 0);
}

TEST_CASE("oracle bound guards the enumeration") {
    DirectedGraph g(13, {});
    CHECK_THROWS(brute_force_mam(g, spec(MotifName::M1)));
    CHECK_NOTHROW(brute_force_mam(g, spec(MotifName::M1), 13));
    MamSpec two = spec(MotifName::M1);
    two.motifs.push_back(MotifName::M2);
    CHECK_THROWS(brute_force_mam(DirectedGraph(3, {}), two));
}
