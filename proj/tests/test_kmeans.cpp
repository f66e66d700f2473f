#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "motifspectral/rng.hpp"
#include "motifspectral/spectral.hpp"

using namespace motifspectral;

namespace {

Eigen::MatrixXd two_clouds(index_t per_side, double separation, std::uint64_t seed) {
    SplitMix64 rng = rng_stream(seed, 1234);
    Eigen::MatrixXd pts(2 * per_side, 2);
    for (index_t i = 0; i < per_side; ++i) {
        pts(i, 0) = rng.next_double() * 0.1;
        pts(i, 1) = rng.next_double() * 0.1;
        pts(per_side + i, 0) = separation + rng.next_double() * 0.1;
        pts(per_side + i, 1) = rng.next_double() * 0.1;
    }
    return pts;
}

}  // namespace

TEST_CASE("well separated clouds split perfectly") {
    const Eigen::MatrixXd pts = two_clouds(20, 50.0, 7);
    const Partition p = kmeans_pp(pts, 2, 5, 100, 1e-10, 3);
    CHECK(p.k == 2);
    for (index_t i = 1; i < 20; ++i) CHECK(p.assignment[i] == p.assignment[0]);
    for (index_t i = 21; i < 40; ++i) CHECK(p.assignment[i] == p.assignment[20]);
    CHECK(p.assignment[0] != p.assignment[20]);
    // first-occurrence canonicalization puts label 0 first
    CHECK(p.assignment[0] == 0);
    CHECK(p.assignment[20] == 1);
}

TEST_CASE("k equal to the number of rows isolates every row") {
    Eigen::MatrixXd pts(4, 1);
    pts << 0.0, 10.0, 20.0, 30.0;
    const Partition p = kmeans_pp(pts, 4, 8, 100, 1e-10, 1);
    std::set<int> labels(p.assignment.begin(), p.assignment.end());
    CHECK(labels.size() == 4);
}

TEST_CASE("k = 1 gives a single cluster") {
    const Eigen::MatrixXd pts = two_clouds(10, 5.0, 2);
    const Partition p = kmeans_pp(pts, 1, 3, 50, 1e-10, 9);
    for (int label : p.assignment) CHECK(label == 0);
}

TEST_CASE("determinism and validation") {
    const Eigen::MatrixXd pts = two_clouds(15, 3.0, 4);
    const Partition a = kmeans_pp(pts, 3, 10, 200, 1e-10, 11);
    const Partition b = kmeans_pp(pts, 3, 10, 200, 1e-10, 11);
    CHECK(a.assignment == b.assignment);
    CHECK_THROWS(kmeans_pp(pts, 31, 1, 10, 1e-10, 0));  // k > rows
    CHECK_THROWS(kmeans_pp(pts, 2, 0, 10, 1e-10, 0));   // restarts < 1
}

TEST_CASE("duplicate points do not break seeding") {
    Eigen::MatrixXd pts = Eigen::MatrixXd::Zero(6, 2);
    pts.row(5) << 1.0, 1.0;
    const Partition p = kmeans_pp(pts, 2, 4, 50, 1e-10, 5);
    CHECK(p.assignment[5] != p.assignment[0]);
}
