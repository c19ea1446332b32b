#pragma once

#include "kband/sphere.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <utility>

namespace kband {

/// n unit vectors in R^d, one per column. The symmetric ansatz a_i = b_i is
/// baked in: a single point set serves both sides of the bilinear form.
struct PointConfig {
    int d;
    Eigen::MatrixXd points;  // d x n, unit columns
};

/// Throws std::invalid_argument unless n >= 1 and every column is unit norm
/// within 1e-10.
void validate(const PointConfig& config);

/// |mean of points|^2 + (1/n^2) * sum_{i != j} |a_i - a_j|. O(n^2 d).
double config_objective(const PointConfig& config);

/// Projected gradient ascent over (S^{d-1})^n: ascend the Euclidean gradient,
/// renormalize each point, backtrack the step until the objective increases.
/// Coincident pairs (distance < 1e-12) contribute zero subgradient.
///
/// Starts from band samples at the continuous optimum (a*, b*) plus one
/// uniform-random restart; the best run wins. The value is monotone
/// non-decreasing across iterations and the best-so-far is always returned.
std::pair<PointConfig, double> optimize_config(int d, int n, std::uint64_t seed,
                                               int iters);

/// Exhaustive classical value of the structured Bell matrix on n base
/// settings: maximizes |sum a_i b_j + sum_{i<j}[alpha_ij (b_i - b_j) +
/// beta_ij (a_i - a_j)]| over all +-1 assignments of {a_i, beta_ij} and
/// {b_j, alpha_ij}. Restricted to n <= 4 (2^m * 2^m assignments, m = n(n+1)/2).
std::int64_t vertesi_C_bruteforce(int n);

/// Monte Carlo estimate of the band bound: draws n_samples points from
/// mu_{a,b} and evaluates the configuration statistic, with a standard error
/// from a 32-block delete-one jackknife. For n_samples <= 4096 the pair mean
/// runs over all pairs; above that it runs over disjoint consecutive pairs
/// (the full U-statistic would need ~n^2/2 distance evaluations).
/// Returns (estimate, standard_error).
std::pair<double, double> mc_band_estimate(const BandParams& params,
                                           std::int64_t n_samples,
                                           std::uint64_t seed);

}  // namespace kband
