#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "motifspectral/symmetric.hpp"
#include "test_util.hpp"

using namespace motifspectral;

namespace {

SymmetricSparseMatrix sym(index_t n, std::vector<std::tuple<index_t, index_t, double>> trips) {
    std::vector<index_t> r, c;
    std::vector<double> v;
    for (auto [i, j, x] : trips) {
        r.push_back(i);
        c.push_back(j);
        v.push_back(x);
    }
    return SymmetricSparseMatrix::from_triplets(n, r, c, v);
}

}  // namespace

TEST_CASE("symmetric storage stores unordered pairs once") {
    SymmetricSparseMatrix m = sym(3, {{2, 0, 5.0}, {1, 2, 3.0}});
    CHECK(m.stored_nnz() == 2);
    CHECK(m.at(0, 2) == 5.0);
    CHECK(m.at(2, 0) == 5.0);
    CHECK(m.at(2, 1) == 3.0);
    CHECK(m.to_full().nnz() == 4);
    CHECK(m.to_full().is_symmetric());
    CHECK(m.degrees() == std::vector<double>{5.0, 3.0, 8.0});
}

TEST_CASE("largest component prefers size then smallest id") {
    // blocks of size 3 ({0,1,2}) and 2 ({3,4})
    SymmetricSparseMatrix m = sym(5, {{0, 1, 1}, {1, 2, 1}, {3, 4, 1}});
    CHECK(largest_component(m) == std::vector<index_t>{0, 1, 2});

    // two components of size 2: {0,3} and {1,2}; the one with vertex 0 wins
    SymmetricSparseMatrix tie = sym(4, {{0, 3, 1}, {1, 2, 1}});
    CHECK(largest_component(tie) == std::vector<index_t>{0, 3});

    // fully dense positive matrix: everything
    SymmetricSparseMatrix dense =
        sym(3, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}});
    CHECK(largest_component(dense) == std::vector<index_t>{0, 1, 2});

    // isolated vertices are singletons
    SymmetricSparseMatrix lonely = sym(3, {{1, 2, 1}});
    CHECK(largest_component(lonely) == std::vector<index_t>{1, 2});

    CHECK(largest_component(SymmetricSparseMatrix(0)).empty());
}

TEST_CASE("tie-break verified by exhaustive enumeration on small cases") {
    using namespace motifspectral::testing;
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        SplitMix64 rng = rng_stream(seed, 99);
        const index_t n = 2 + static_cast<index_t>(rng.next_below(6));
        std::vector<index_t> r, c;
        std::vector<double> v;
        for (index_t i = 0; i < n; ++i)
            for (index_t j = i + 1; j < n; ++j)
                if (rng.next_double() < 0.25) {
                    r.push_back(i);
                    c.push_back(j);
                    v.push_back(1.0);
                }
        SymmetricSparseMatrix m = SymmetricSparseMatrix::from_triplets(n, r, c, v);
        const std::vector<index_t> got = largest_component(m);

        // independent check: label components by BFS in id order
        std::vector<int> comp(n, -1);
        int nc = 0;
        for (index_t s = 0; s < n; ++s) {
            if (comp[s] >= 0) continue;
            std::vector<index_t> stack = {s};
            comp[s] = nc;
            while (!stack.empty()) {
                index_t u = stack.back();
                stack.pop_back();
                for (index_t w = 0; w < n; ++w)
                    if (comp[w] < 0 && m.at(u, w) != 0) {
                        comp[w] = nc;
                        stack.push_back(w);
                    }
            }
            ++nc;
        }
        std::vector<index_t> size(nc, 0);
        for (index_t u = 0; u < n; ++u) ++size[comp[u]];
        // BFS labels components in order of their smallest member, so the
        // first maximal one is the expected winner
        int best = 0;
        for (int cidx = 1; cidx < nc; ++cidx)
            if (size[cidx] > size[best]) best = cidx;
        std::vector<index_t> want;
        for (index_t u = 0; u < n; ++u)
            if (comp[u] == best) want.push_back(u);
        CHECK(got == want);
    }
}

TEST_CASE("restrict produces the reindexed principal submatrix") {
    SymmetricSparseMatrix m =
        sym(4, {{0, 0, 1}, {1, 1, 2}, {2, 2, 3}, {3, 3, 4}});
    std::vector<index_t> ids = {1, 3};
    SymmetricSparseMatrix r = restrict_to(m, ids);
    CHECK(r.n() == 2);
    CHECK(r.at(0, 0) == 2);
    CHECK(r.at(1, 1) == 4);

    // restrict to all ids is the identity operation
    std::vector<index_t> all = {0, 1, 2, 3};
    CHECK(restrict_to(m, all) == m);

    // relabeling moves (0,2) to (0,1)
    SymmetricSparseMatrix s = sym(3, {{0, 2, 5}});
    std::vector<index_t> pick = {0, 2};
    CHECK(restrict_to(s, pick).at(0, 1) == 5);

    std::vector<index_t> bad = {1, 7};
    CHECK_THROWS(restrict_to(m, bad));
    std::vector<index_t> unsorted = {2, 1};
    CHECK_THROWS(restrict_to(m, unsorted));
}

TEST_CASE("restriction composes") {
    using namespace motifspectral::testing;
    SplitMix64 rng = rng_stream(7, 5);
    std::vector<index_t> r, c;
    std::vector<double> v;
    const index_t n = 10;
    for (index_t i = 0; i < n; ++i)
        for (index_t j = i; j < n; ++j)
            if (rng.next_double() < 0.3) {
                r.push_back(i);
                c.push_back(j);
                v.push_back(1.0 + rng.next_double());
            }
    SymmetricSparseMatrix m = SymmetricSparseMatrix::from_triplets(n, r, c, v);
    std::vector<index_t> a = {0, 2, 3, 5, 7, 9};
    std::vector<index_t> b = {1, 2, 4};
    std::vector<index_t> composed;  // a[b]
    for (index_t i : b) composed.push_back(a[i]);
    CHECK(restrict_to(restrict_to(m, a), b) == restrict_to(m, composed));
}
