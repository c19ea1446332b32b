#include "kband/discrete.hpp"

#include "internal.hpp"
#include "kband/opt.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>

namespace kband {

using detail::kPi;

void validate(const PointConfig& config) {
    const auto n = config.points.cols();
    if (n < 1) throw std::invalid_argument("PointConfig: need at least one point");
    if (config.points.rows() != config.d)
        throw std::invalid_argument("PointConfig: row count must equal d");
    for (Eigen::Index i = 0; i < n; ++i)
        if (std::abs(config.points.col(i).norm() - 1.0) > 1e-10)
            throw std::invalid_argument("PointConfig: points must be unit norm");
}

namespace {

constexpr double kCoincidentDist = 1e-12;

double pair_distance_sum(const Eigen::MatrixXd& pts) {
    const Eigen::Index n = pts.cols();
    double sum = 0.0;
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j)
            sum += (pts.col(i) - pts.col(j)).norm();
    return sum;
}

double objective_of(const Eigen::MatrixXd& pts) {
    const double n = static_cast<double>(pts.cols());
    const double m2 = (pts.rowwise().sum() / n).squaredNorm();
    return m2 + 2.0 * pair_distance_sum(pts) / (n * n);
}

// Objective together with its Euclidean gradient. Coincident pairs get a
// zero subgradient.
double objective_and_gradient(const Eigen::MatrixXd& pts, Eigen::MatrixXd& grad) {
    const Eigen::Index n = pts.cols();
    const double nd = static_cast<double>(n);
    const Eigen::VectorXd mean = pts.rowwise().sum() / nd;

    grad.resize(pts.rows(), n);
    grad.colwise() = (2.0 / nd) * mean;

    double dist_sum = 0.0;
    const double w = 2.0 / (nd * nd);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const Eigen::VectorXd diff = pts.col(i) - pts.col(j);
            const double dist = diff.norm();
            dist_sum += dist;
            if (dist < kCoincidentDist) continue;
            grad.col(i) += (w / dist) * diff;
            grad.col(j) -= (w / dist) * diff;
        }
    }
    return mean.squaredNorm() + w * dist_sum;
}

void normalize_columns(Eigen::MatrixXd& pts) {
    for (Eigen::Index i = 0; i < pts.cols(); ++i) pts.col(i).normalize();
}

// Monotone projected gradient ascent with a backtracking step size.
double ascend(Eigen::MatrixXd& pts, int iters) {
    Eigen::MatrixXd grad;
    double value = objective_of(pts);
    double step = 0.1 * static_cast<double>(pts.cols());
    for (int it = 0; it < iters; ++it) {
        const double base = objective_and_gradient(pts, grad);
        (void)base;  // equals value up to the pair subgradient convention
        bool accepted = false;
        while (!accepted) {
            Eigen::MatrixXd trial = pts + step * grad;
            normalize_columns(trial);
            const double trial_value = objective_of(trial);
            if (trial_value > value) {
                pts.swap(trial);
                value = trial_value;
                step *= 1.3;
                accepted = true;
            } else {
                step *= 0.5;
                if (step < 1e-15) return value;  // stationary to machine noise
            }
        }
    }
    return value;
}

// Continuous optimum used to seed the discrete search; cheap settings, the
// seed only needs the right neighborhood. Cached per dimension.
BandParams seed_band(int d) {
    static std::mutex mutex;
    static std::map<int, BandParams> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    BandParams band{d, 0.0, 0.5 * kPi};
    try {
        BandOptimum opt = optimize_band(d, 16, 400, 1e-4);
        band = opt.params;
    } catch (const std::exception&) {
        // keep the hemisphere fallback
    }
    cache.emplace(d, band);
    return band;
}

Eigen::MatrixXd band_start(const BandParams& band, int n, std::uint64_t seed) {
    BandSampler sampler(band, seed);
    Eigen::MatrixXd pts(band.d, n);
    for (int i = 0; i < n; ++i) pts.col(i) = sampler.next().coords;
    return pts;
}

Eigen::MatrixXd uniform_start(int d, int n, std::uint64_t seed) {
    std::mt19937_64 eng(seed);
    auto uniform01 = [&]() { return static_cast<double>(eng() >> 11) * 0x1.0p-53; };
    Eigen::MatrixXd pts(d, n);
    for (int i = 0; i < n; ++i) {
        double norm2 = 0.0;
        do {
            for (int r = 0; r < d; ++r) {
                const double radius = std::sqrt(-2.0 * std::log(1.0 - uniform01()));
                pts(r, i) = radius * std::cos(2.0 * kPi * uniform01());
            }
            norm2 = pts.col(i).squaredNorm();
        } while (norm2 < 1e-16);
        pts.col(i) /= std::sqrt(norm2);
    }
    return pts;
}

}  // namespace

double config_objective(const PointConfig& config) {
    validate(config);
    return objective_of(config.points);
}

std::pair<PointConfig, double> optimize_config(int d, int n, std::uint64_t seed,
                                               int iters) {
    if (d < 3) throw std::invalid_argument("optimize_config: d must be >= 3");
    if (n < 1) throw std::invalid_argument("optimize_config: n must be >= 1");
    if (iters < 1) throw std::invalid_argument("optimize_config: iters must be >= 1");

    const BandParams band = seed_band(d);
    Eigen::MatrixXd banded = band_start(band, n, seed);
    Eigen::MatrixXd uniform = uniform_start(d, n, seed + 1);

    const double banded_value = ascend(banded, iters);
    const double uniform_value = ascend(uniform, iters);

    PointConfig best{d, banded_value >= uniform_value ? std::move(banded)
                                                      : std::move(uniform)};
    return {std::move(best), std::max(banded_value, uniform_value)};
}

std::int64_t vertesi_C_bruteforce(int n) {
    if (n < 1 || n > 4)
        throw std::invalid_argument(
            "vertesi_C_bruteforce: n must lie in [1, 4] (assignment space is "
            "4^m otherwise)");

    const int n_pairs = n * (n - 1) / 2;
    const int m = n + n_pairs;
    const std::int64_t words = std::int64_t{1} << m;

    // One side of assignments: the base signs s_i plus one sign per (i < j)
    // pair weighting the difference s_i - s_j. Identical structure on both
    // sides, so precompute once.
    std::vector<int> base_sum(words), pair_sum(words);
    for (std::int64_t word = 0; word < words; ++word) {
        int signs[4];
        for (int i = 0; i < n; ++i) signs[i] = (word >> i) & 1 ? 1 : -1;
        int total = 0;
        for (int i = 0; i < n; ++i) total += signs[i];
        base_sum[word] = total;

        int pair_total = 0;
        int bit = n;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++bit) {
                const int coeff = (word >> bit) & 1 ? 1 : -1;
                pair_total += coeff * (signs[i] - signs[j]);
            }
        pair_sum[word] = pair_total;
    }

    std::int64_t best = 0;
    for (std::int64_t aw = 0; aw < words; ++aw)
        for (std::int64_t bw = 0; bw < words; ++bw) {
            const std::int64_t s = std::int64_t{base_sum[aw]} * base_sum[bw] +
                                   pair_sum[bw] + pair_sum[aw];
            best = std::max(best, std::abs(s));
        }
    return best;
}

namespace {

// Contiguous block sums that let the jackknife drop one block cheaply.
struct BlockStats {
    std::vector<Eigen::VectorXd> point_sum;
    std::vector<double> pair_sum;    // chord sum of pairs inside the block
    std::vector<std::int64_t> n_points;
    std::vector<std::int64_t> n_pairs;
};

double combined_statistic(const Eigen::VectorXd& point_sum, double pair_sum,
                          std::int64_t n_points, std::int64_t n_pairs,
                          bool all_pairs) {
    const double n = static_cast<double>(n_points);
    const double m2 = (point_sum / n).squaredNorm();
    if (all_pairs) return m2 + 2.0 * pair_sum / (n * n);
    if (n_pairs == 0) return m2;
    return m2 + pair_sum / static_cast<double>(n_pairs);
}

}  // namespace

std::pair<double, double> mc_band_estimate(const BandParams& params,
                                           std::int64_t n_samples,
                                           std::uint64_t seed) {
    validate(params);
    if (n_samples < 2)
        throw std::invalid_argument("mc_band_estimate: need n_samples >= 2");

    BandSampler sampler(params, seed);
    Eigen::MatrixXd pts(params.d, n_samples);
    for (std::int64_t i = 0; i < n_samples; ++i) pts.col(i) = sampler.next().coords;

    const bool all_pairs = n_samples <= 4096;
    const int n_blocks = static_cast<int>(std::min<std::int64_t>(32, n_samples));

    // Block boundaries over points; pair blocks align with point blocks.
    std::vector<std::int64_t> edge(n_blocks + 1);
    for (int j = 0; j <= n_blocks; ++j) edge[j] = n_samples * j / n_blocks;

    BlockStats blocks;
    blocks.point_sum.assign(n_blocks, Eigen::VectorXd::Zero(params.d));
    blocks.pair_sum.assign(n_blocks, 0.0);
    blocks.n_points.assign(n_blocks, 0);
    blocks.n_pairs.assign(n_blocks, 0);

    for (int j = 0; j < n_blocks; ++j) {
        blocks.n_points[j] = edge[j + 1] - edge[j];
        for (std::int64_t i = edge[j]; i < edge[j + 1]; ++i)
            blocks.point_sum[j] += pts.col(i);
    }

    // cross_sum(i, j): chord sum over pairs with one point in block i and one
    // in block j (i < j). Lets the jackknife drop a block in O(B).
    Eigen::MatrixXd cross_sum = Eigen::MatrixXd::Zero(n_blocks, n_blocks);
    if (all_pairs) {
        std::vector<int> block_of(static_cast<std::size_t>(n_samples));
        for (int j = 0; j < n_blocks; ++j)
            for (std::int64_t i = edge[j]; i < edge[j + 1]; ++i) block_of[i] = j;
        for (std::int64_t i = 0; i < n_samples; ++i) {
            for (std::int64_t j = i + 1; j < n_samples; ++j) {
                const double dist = (pts.col(i) - pts.col(j)).norm();
                if (block_of[i] == block_of[j])
                    blocks.pair_sum[block_of[i]] += dist;
                else
                    cross_sum(block_of[i], block_of[j]) += dist;
            }
        }
    } else {
        for (int j = 0; j < n_blocks; ++j) {
            for (std::int64_t i = edge[j]; i + 1 < edge[j + 1]; i += 2) {
                blocks.pair_sum[j] += (pts.col(i) - pts.col(i + 1)).norm();
                ++blocks.n_pairs[j];
            }
        }
    }

    Eigen::VectorXd full_point_sum = Eigen::VectorXd::Zero(params.d);
    double full_pair_sum = cross_sum.sum();
    std::int64_t full_pairs = 0;
    for (int j = 0; j < n_blocks; ++j) {
        full_point_sum += blocks.point_sum[j];
        full_pair_sum += blocks.pair_sum[j];
        full_pairs += blocks.n_pairs[j];
    }
    const double estimate = combined_statistic(full_point_sum, full_pair_sum,
                                               n_samples, full_pairs, all_pairs);

    // Delete-one-block jackknife. In all-pairs mode dropping a block also
    // drops its own pairs and every cross pair touching it.
    std::vector<double> leave_out(n_blocks);
    for (int j = 0; j < n_blocks; ++j) {
        const Eigen::VectorXd ps = full_point_sum - blocks.point_sum[j];
        const std::int64_t np = n_samples - blocks.n_points[j];
        if (np == 0) {
            leave_out[j] = estimate;
            continue;
        }
        if (all_pairs) {
            double pair_sum = full_pair_sum - blocks.pair_sum[j] -
                              cross_sum.row(j).sum() - cross_sum.col(j).sum();
            leave_out[j] = combined_statistic(ps, pair_sum, np, 0, true);
        } else {
            leave_out[j] = combined_statistic(ps, full_pair_sum - blocks.pair_sum[j],
                                              np, full_pairs - blocks.n_pairs[j],
                                              false);
        }
    }

    double mean = 0.0;
    for (double v : leave_out) mean += v;
    mean /= n_blocks;
    double var = 0.0;
    for (double v : leave_out) var += (v - mean) * (v - mean);
    const double stderr_jk =
        std::sqrt(var * static_cast<double>(n_blocks - 1) / n_blocks);
    return {estimate, stderr_jk};
}

}  // namespace kband
