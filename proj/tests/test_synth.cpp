#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "motifspectral/synth.hpp"

using namespace motifspectral;

TEST_CASE("poisson draws have the right first moments") {
    SplitMix64 rng = rng_stream(1, 2);
    for (double lambda : {0.0, 0.5, 5.0, 90.0, 700.0}) {
        const int reps = 4000;
        double sum = 0.0, sq = 0.0;
        for (int r = 0; r < reps; ++r) {
            const double x = static_cast<double>(poisson(rng, lambda));
            sum += x;
            sq += x * x;
        }
        const double mean = sum / reps;
        const double var = sq / reps - mean * mean;
        const double se = std::sqrt(std::max(lambda, 0.25) / reps);
        CHECK(std::abs(mean - lambda) < 5 * se);
        if (lambda > 0) CHECK(var == doctest::Approx(lambda).epsilon(0.15));
    }
}

TEST_CASE("dsbm basic laws") {
    // F = 0: empty graph
    DsbmParams zero{{3, 3}, {{0.0, 0.0}, {0.0, 0.0}}, std::nullopt, 1};
    CHECK(sample_dsbm(zero).graph.num_edges() == 0);

    // F = 1, one block of 4: complete digraph, 12 edges
    DsbmParams full{{4}, {{1.0}}, std::nullopt, 1};
    const DsbmSample s = sample_dsbm(full);
    CHECK(s.graph.num_edges() == 12);
    CHECK(s.planted.assignment == std::vector<int>{0, 0, 0, 0});

    // invalid connection entries
    DsbmParams bad{{2}, {{1.5}}, std::nullopt, 1};
    CHECK_THROWS(sample_dsbm(bad));
}

TEST_CASE("dsbm edge count concentrates at p n (n-1)") {
    const index_t n = 200;
    const double p = 0.3;
    const double mean = p * static_cast<double>(n) * static_cast<double>(n - 1);
    const double sigma = std::sqrt(mean * (1 - p));
    for (std::uint64_t seed : {11ULL, 22ULL, 33ULL}) {
        DsbmParams params{{n}, {{p}}, std::nullopt, seed};
        const double got = static_cast<double>(sample_dsbm(params).graph.num_edges());
        CHECK(std::abs(got - mean) < 4 * sigma);
    }
}

TEST_CASE("weighted dsbm removes zero-weight edges and keeps integers") {
    DsbmParams params{{50, 50}, {{0.5, 0.5}, {0.5, 0.5}},
                      std::vector<std::vector<double>>{{0.5, 0.5}, {0.5, 0.5}}, 5};
    const DsbmSample s = sample_dsbm(params);
    // with mean 0.5 many Poisson draws are zero, so far fewer edges than hits
    const double hit_mean = 0.5 * 100.0 * 99.0;
    CHECK(static_cast<double>(s.graph.num_edges()) < 0.6 * hit_mean);
    for (const Edge& e : s.graph.edges()) {
        CHECK(e.weight >= 1.0);
        CHECK(e.weight == std::floor(e.weight));
    }
}

TEST_CASE("samplers are bit-reproducible given the seed") {
    DsbmParams params{{30, 30}, {{0.2, 0.4}, {0.1, 0.3}},
                      std::vector<std::vector<double>>{{3, 1}, {2, 5}}, 77};
    CHECK(sample_dsbm(params).graph.edges() == sample_dsbm(params).graph.edges());
    CHECK(sample_er(100, 0.1, 9).edges() == sample_er(100, 0.1, 9).edges());
    CHECK(sample_ba(60, 3, 4).edges() == sample_ba(60, 3, 4).edges());

    DsbmParams other = params;
    other.seed = 78;
    CHECK(sample_dsbm(other).graph.edges() != sample_dsbm(params).graph.edges());
}

TEST_CASE("bsbm embeds blocks and splits partitions by side") {
    BsbmParams p{{2}, {3}, {{1.0}}, std::nullopt, 1};
    const BsbmSample s = sample_bsbm(p);
    CHECK(s.graph.num_edges() == 6);  // complete bipartite 2 x 3
    CHECK(s.sources == std::vector<index_t>{0, 1});
    CHECK(s.destinations == std::vector<index_t>{2, 3, 4});
    CHECK(s.planted_sources.assignment == std::vector<int>{0, 0, -1, -1, -1});
    CHECK(s.planted_destinations.assignment == std::vector<int>{-1, -1, 0, 0, 0});
    for (const Edge& e : s.graph.edges()) {
        CHECK(e.src < 2);
        CHECK(e.dst >= 2);
    }

    BsbmParams zero{{2}, {3}, {{0.0}}, std::nullopt, 1};
    CHECK(sample_bsbm(zero).graph.num_edges() == 0);
}

TEST_CASE("bsbm block densities track F times the positive-Poisson mass") {
    // connection and weight panels from a three-destination-block setup
    const double w1 = 0.8;
    BsbmParams p{{200, 200},
                 {200, 200, 200},
                 {{0.9, 0.3, 0.0}, {0.0, 0.3, 0.9}},
                 std::vector<std::vector<double>>{{w1, 1.0, 0.0}, {0.0, 1.0, w1}},
                 13};
    const BsbmSample s = sample_bsbm(p);

    // realized density of the (0,0) bipartite block
    double count = 0;
    for (const Edge& e : s.graph.edges())
        if (e.src < 200 && e.dst >= 400 && e.dst < 600) count += 1;
    const double pairs = 200.0 * 200.0;
    const double eff = 0.9 * (1.0 - std::exp(-w1));  // edge survives a positive draw
    const double sigma = std::sqrt(pairs * eff * (1 - eff));
    CHECK(std::abs(count - pairs * eff) < 4 * sigma);
}

TEST_CASE("er sampler hits its moments and edge cases") {
    CHECK(sample_er(50, 0.0, 1).num_edges() == 0);
    CHECK(sample_er(20, 1.0, 1).num_edges() == 20 * 19);

    const index_t n = 300;
    const double p = 0.05;
    const double mean = p * static_cast<double>(n * (n - 1));
    const double sigma = std::sqrt(mean * (1 - p));
    const DirectedGraph g = sample_er(n, p, 123);
    CHECK(std::abs(static_cast<double>(g.num_edges()) - mean) < 4 * sigma);
}

TEST_CASE("ba sampler emits reciprocated pairs with the exact edge count") {
    const index_t n = 100, m = 5;
    const DirectedGraph g = sample_ba(n, m, 3);
    CHECK(g.num_edges() == 2 * m * (n - m));  // m (n - m) undirected edges
    for (const Edge& e : g.edges()) CHECK(g.has_edge(e.dst, e.src));

    CHECK(sample_ba(5, 5, 1).num_edges() == 0);  // n = m: nothing added
    CHECK_THROWS(sample_ba(3, 5, 1));
}

TEST_CASE("ba degrees are heavier-tailed than er at matched size") {
    const index_t n = 400, m = 4;
    double ba_max = 0, er_max = 0;
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const DirectedGraph ba = sample_ba(n, m, seed);
        const DirectedGraph er =
            sample_er(n, static_cast<double>(ba.num_edges()) / (n * (n - 1.0)), seed);
        std::vector<index_t> bdeg(n, 0), edeg(n, 0);
        for (const Edge& e : ba.edges()) ++bdeg[e.src];
        for (const Edge& e : er.edges()) ++edeg[e.src];
        ba_max += static_cast<double>(*std::max_element(bdeg.begin(), bdeg.end()));
        er_max += static_cast<double>(*std::max_element(edeg.begin(), edeg.end()));
    }
    CHECK(ba_max > 1.5 * er_max);
}

TEST_CASE("planted partition sizes match the block sizes") {
    DsbmParams params{{10, 20, 30}, std::vector<std::vector<double>>(3, {0.2, 0.2, 0.2}),
                      std::nullopt, 2};
    const DsbmSample s = sample_dsbm(params);
    std::vector<int> counts(3, 0);
    for (int a : s.planted.assignment) ++counts[a];
    CHECK(counts == std::vector<int>{10, 20, 30});
}
