#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "motifspectral/rng.hpp"
#include "motifspectral/spectral.hpp"

namespace motifspectral {

namespace {

constexpr std::uint64_t kKmeansPurposeBase = 0x6b6d; // + restart index

double sq_dist(const Eigen::MatrixXd& points, index_t row, const Eigen::VectorXd& center) {
    return (points.row(row).transpose() - center).squaredNorm();
}

struct LloydResult {
    std::vector<int> labels;
    double wcss = std::numeric_limits<double>::infinity();
};

LloydResult run_restart(const Eigen::MatrixXd& points, int k, int max_iters, double tol,
                        SplitMix64 rng) {
    const index_t n = points.rows();
    const index_t dim = points.cols();

    // k-means++ seeding
    Eigen::MatrixXd centers(k, dim);
    std::vector<double> d2(n, std::numeric_limits<double>::infinity());
    centers.row(0) = points.row(static_cast<index_t>(rng.next_below(n)));
    for (int c = 1; c < k; ++c) {
        double total = 0.0;
        for (index_t i = 0; i < n; ++i) {
            d2[i] = std::min(d2[i], (points.row(i) - centers.row(c - 1)).squaredNorm());
            total += d2[i];
        }
        index_t pick;
        if (total > 0.0) {
            const double target = rng.next_double() * total;
            double run = 0.0;
            pick = n - 1;
            for (index_t i = 0; i < n; ++i) {
                run += d2[i];
                if (run >= target) { pick = i; break; }
            }
        } else {
            pick = static_cast<index_t>(rng.next_below(n));  // all points coincide
        }
        centers.row(c) = points.row(pick);
    }

    std::vector<int> labels(n, 0);
    std::vector<index_t> counts(k, 0);
    double prev_wcss = std::numeric_limits<double>::infinity();
    double wcss = prev_wcss;

    for (int iter = 0; iter < max_iters; ++iter) {
        // assign
        wcss = 0.0;
        std::fill(counts.begin(), counts.end(), index_t{0});
        for (index_t i = 0; i < n; ++i) {
            int best = 0;
            double bd = (points.row(i) - centers.row(0)).squaredNorm();
            for (int c = 1; c < k; ++c) {
                const double d = (points.row(i) - centers.row(c)).squaredNorm();
                if (d < bd) { bd = d; best = c; }
            }
            labels[i] = best;
            ++counts[best];
            wcss += bd;
        }

        // empty cluster: reseed at the point farthest from its own centroid
        for (int c = 0; c < k; ++c) {
            if (counts[c] != 0) continue;
            index_t far = 0;
            double fd = -1.0;
            for (index_t i = 0; i < n; ++i) {
                const double d = (points.row(i) - centers.row(labels[i])).squaredNorm();
                if (d > fd && counts[labels[i]] > 1) { fd = d; far = i; }
            }
            --counts[labels[far]];
            labels[far] = c;
            counts[c] = 1;
            centers.row(c) = points.row(far);
        }

        // update
        Eigen::MatrixXd sums = Eigen::MatrixXd::Zero(k, dim);
        for (index_t i = 0; i < n; ++i) sums.row(labels[i]) += points.row(i);
        for (int c = 0; c < k; ++c)
            if (counts[c] > 0) centers.row(c) = sums.row(c) / static_cast<double>(counts[c]);

        if (prev_wcss - wcss <= tol && iter > 0) break;
        prev_wcss = wcss;
    }

    // final assignment against the final centers
    wcss = 0.0;
    for (index_t i = 0; i < n; ++i) {
        int best = 0;
        double bd = sq_dist(points, i, centers.row(0).transpose());
        for (int c = 1; c < k; ++c) {
            const double d = sq_dist(points, i, centers.row(c).transpose());
            if (d < bd) { bd = d; best = c; }
        }
        labels[i] = best;
        wcss += bd;
    }
    return {std::move(labels), wcss};
}

}  // namespace

Partition kmeans_pp(const Eigen::MatrixXd& points, int k, int restarts, int max_iters, double tol,
                    std::uint64_t seed) {
    const index_t n = points.rows();
    if (k < 1) throw std::invalid_argument("kmeans: k must be positive");
    if (k > n) throw std::invalid_argument("kmeans: k exceeds the number of points");
    if (restarts < 1) throw std::invalid_argument("kmeans: restarts must be >= 1");

    LloydResult best;
    for (int r = 0; r < restarts; ++r) {
        LloydResult res = run_restart(points, k, max_iters, tol,
                                      rng_stream(seed, kKmeansPurposeBase + static_cast<std::uint64_t>(r)));
        if (res.wcss < best.wcss) best = std::move(res);  // ties keep the earlier restart
    }

    // canonicalize labels by first occurrence
    Partition p;
    p.k = k;
    std::vector<int> remap(k, -1);
    int next = 0;
    p.assignment.resize(n);
    for (index_t i = 0; i < n; ++i) {
        int& m = remap[best.labels[i]];
        if (m < 0) m = next++;
        p.assignment[i] = m;
    }
    return p;
}

}  // namespace motifspectral
