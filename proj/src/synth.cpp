#include "motifspectral/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace motifspectral {

namespace {

// stream purposes
constexpr std::uint64_t kPurposeBernoulli = 1;
constexpr std::uint64_t kPurposePoisson = 2;
constexpr std::uint64_t kPurposeEr = 3;
constexpr std::uint64_t kPurposeBa = 4;

}  // namespace

std::int64_t poisson(SplitMix64& rng, double lambda) {
    if (lambda < 0 || !std::isfinite(lambda)) throw std::invalid_argument("poisson: bad mean");
    std::int64_t total = 0;
    // chunking keeps exp(-lambda) well inside double range; exact by additivity
    while (lambda > 0) {
        const double part = std::min(lambda, 500.0);
        lambda -= part;
        double p = std::exp(-part);
        double f = p;
        const double u = rng.next_double();
        std::int64_t k = 0;
        while (u > f) {
            ++k;
            p *= part / static_cast<double>(k);
            f += p;
            if (p == 0.0) break;  // far tail; cumulative has saturated
        }
        total += k;
    }
    return total;
}

DsbmSample sample_dsbm(const DsbmParams& p) {
    const size_t k = p.block_sizes.size();
    if (k == 0) throw std::invalid_argument("dsbm: no blocks");
    if (p.connection.size() != k)
        throw std::invalid_argument("dsbm: connection matrix must be k x k");
    for (const auto& row : p.connection) {
        if (row.size() != k) throw std::invalid_argument("dsbm: connection matrix must be k x k");
        for (double f : row)
            if (!(f >= 0.0 && f <= 1.0))
                throw std::invalid_argument("dsbm: connection probabilities must lie in [0, 1]");
    }
    if (p.weights) {
        if (p.weights->size() != k) throw std::invalid_argument("dsbm: weight matrix must be k x k");
        for (const auto& row : *p.weights) {
            if (row.size() != k) throw std::invalid_argument("dsbm: weight matrix must be k x k");
            for (double w : row)
                if (!(w >= 0.0)) throw std::invalid_argument("dsbm: weight means must be >= 0");
        }
    }
    for (index_t s : p.block_sizes)
        if (s <= 0) throw std::invalid_argument("dsbm: block sizes must be positive");

    std::vector<int> group;  // block allocation per vertex
    for (size_t b = 0; b < k; ++b)
        group.insert(group.end(), p.block_sizes[b], static_cast<int>(b));
    const index_t n = static_cast<index_t>(group.size());

    // Bernoulli and Poisson draws come from separate streams, consumed in
    // row-major pair order; the Poisson stream advances only on edge hits
    SplitMix64 bern = rng_stream(p.seed, kPurposeBernoulli);
    SplitMix64 pois = rng_stream(p.seed, kPurposePoisson);

    std::vector<Edge> edges;
    for (index_t i = 0; i < n; ++i) {
        for (index_t j = 0; j < n; ++j) {
            if (i == j) continue;
            const double f = p.connection[group[i]][group[j]];
            if (f <= 0.0 || !bernoulli(bern, f)) continue;
            if (p.weights) {
                const std::int64_t w = poisson(pois, (*p.weights)[group[i]][group[j]]);
                if (w > 0) edges.push_back({i, j, static_cast<double>(w)});
            } else {
                edges.push_back({i, j, 1.0});
            }
        }
    }

    DsbmSample out;
    out.graph = DirectedGraph(n, std::move(edges));
    out.planted.k = static_cast<int>(k);
    out.planted.assignment = std::move(group);
    return out;
}

BsbmSample sample_bsbm(const BsbmParams& p) {
    const size_t ks = p.source_sizes.size(), kd = p.destination_sizes.size();
    if (ks == 0 || kd == 0) throw std::invalid_argument("bsbm: empty block list");
    if (p.connection.size() != ks)
        throw std::invalid_argument("bsbm: connection matrix must be kS x kD");
    for (const auto& row : p.connection)
        if (row.size() != kd) throw std::invalid_argument("bsbm: connection matrix must be kS x kD");
    if (p.weights) {
        if (p.weights->size() != ks) throw std::invalid_argument("bsbm: weight matrix must be kS x kD");
        for (const auto& row : *p.weights)
            if (row.size() != kd) throw std::invalid_argument("bsbm: weight matrix must be kS x kD");
    }

    DsbmParams d;
    d.seed = p.seed;
    d.block_sizes = p.source_sizes;
    d.block_sizes.insert(d.block_sizes.end(), p.destination_sizes.begin(),
                         p.destination_sizes.end());
    const size_t k = ks + kd;
    d.connection.assign(k, std::vector<double>(k, 0.0));
    for (size_t a = 0; a < ks; ++a)
        for (size_t b = 0; b < kd; ++b) d.connection[a][ks + b] = p.connection[a][b];
    if (p.weights) {
        d.weights.emplace(k, std::vector<double>(k, 0.0));
        for (size_t a = 0; a < ks; ++a)
            for (size_t b = 0; b < kd; ++b) (*d.weights)[a][ks + b] = (*p.weights)[a][b];
    }

    DsbmSample base = sample_dsbm(d);
    const index_t ns =
        std::accumulate(p.source_sizes.begin(), p.source_sizes.end(), index_t{0});
    const index_t n = base.graph.n();

    BsbmSample out;
    out.graph = std::move(base.graph);
    out.planted_sources.k = static_cast<int>(ks);
    out.planted_sources.assignment.assign(n, -1);
    out.planted_destinations.k = static_cast<int>(kd);
    out.planted_destinations.assignment.assign(n, -1);
    for (index_t v = 0; v < n; ++v) {
        if (v < ns) {
            out.planted_sources.assignment[v] = base.planted.assignment[v];
            out.sources.push_back(v);
        } else {
            out.planted_destinations.assignment[v] =
                base.planted.assignment[v] - static_cast<int>(ks);
            out.destinations.push_back(v);
        }
    }
    return out;
}

DirectedGraph sample_er(index_t n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("er: p must lie in [0, 1]");
    std::vector<Edge> edges;
    if (n > 0 && p > 0.0) {
        SplitMix64 rng = rng_stream(seed, kPurposeEr);
        const index_t pairs = n * (n - 1);
        if (p >= 1.0) {
            for (index_t i = 0; i < n; ++i)
                for (index_t j = 0; j < n; ++j)
                    if (i != j) edges.push_back({i, j, 1.0});
        } else {
            // geometric skips across the linearized off-diagonal pair space
            const double log1mp = std::log1p(-p);
            double idx = -1.0;
            while (true) {
                const double u = rng.next_double();
                idx += 1.0 + std::floor(std::log1p(-u) / log1mp);
                if (idx >= static_cast<double>(pairs)) break;
                const index_t t = static_cast<index_t>(idx);
                const index_t i = t / (n - 1);
                const index_t r = t % (n - 1);
                const index_t j = r + (r >= i ? 1 : 0);
                edges.push_back({i, j, 1.0});
            }
        }
    }
    return DirectedGraph(n, std::move(edges));
}

DirectedGraph sample_ba(index_t n, index_t m, std::uint64_t seed) {
    if (m > n) throw std::invalid_argument("ba: m must not exceed n");
    std::vector<Edge> edges;
    if (m > 0 && n > m) {
        SplitMix64 rng = rng_stream(seed, kPurposeBa);
        // ball holds one entry per unit of degree; the first added vertex
        // takes every zero-degree seed, so no epsilon handling is needed
        // beyond that step
        std::vector<index_t> ball;
        ball.reserve(static_cast<size_t>(2 * m * (n - m)));
        auto connect = [&](index_t v, index_t t) {
            edges.push_back({v, t, 1.0});
            edges.push_back({t, v, 1.0});
            ball.push_back(v);
            ball.push_back(t);
        };
        for (index_t t = 0; t < m; ++t) connect(m, t);
        std::set<index_t> targets;
        for (index_t v = m + 1; v < n; ++v) {
            targets.clear();
            while (static_cast<index_t>(targets.size()) < m)
                targets.insert(ball[rng.next_below(ball.size())]);
            for (index_t t : targets) connect(v, t);
        }
    }
    return DirectedGraph(n, std::move(edges));
}

}  // namespace motifspectral
