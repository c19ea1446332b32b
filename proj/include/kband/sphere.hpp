#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <random>
#include <vector>

namespace kband {

/// Colatitude band Omega_a^b = {x in S^{d-1} : a <= phi_1(x) <= b} carrying
/// the uniform probability measure mu_{a,b}.
///
/// The search domain of the optimizer is 0 <= a < b <= pi/2; values of b up
/// to pi are accepted so the full-sphere validation case is representable.
struct BandParams {
    int d;      // ambient dimension, sphere is S^{d-1}
    double a;   // lower colatitude edge, radians
    double b;   // upper colatitude edge, radians
};

/// Throws std::invalid_argument unless d >= 3 and 0 <= a < b <= pi.
void validate(const BandParams& params);

/// A point on S^{d-1} with its first spherical coordinate cached.
/// coords is Cartesian with the polar axis last: coords[d-1] = cos(colatitude).
struct SpherePoint {
    Eigen::VectorXd coords;
    double colatitude;
};

/// Surface measure of the unit sphere S^k: 2 pi^{(k+1)/2} / Gamma((k+1)/2).
/// Evaluated through lgamma so large k stays finite.
double sphere_volume(int k);

/// Unnormalized colatitude weight of the band: integral of sin^{d-2}(phi)
/// over [a, b]. Closed form for d = 3, 4; adaptive quadrature otherwise.
double band_weight(const BandParams& params);

/// Chord length |x - y| for x at spherical coordinate (phi1, 0, ..., 0) and
/// y at (psi1, psi2, ...). Roundoff-negative radicands are clamped to zero:
/// the diagonal x = y lies inside the integration domain.
double chord(double phi1, double psi1, double psi2);

/// Draws from mu_{a,b}, deterministic in the seed.
///
/// The colatitude comes from a numerical inverse CDF of the density
/// proportional to sin^{d-2}(phi) on [a, b] (4096-interval monotone
/// cumulative table, refined locally to 1e-12 in phi); the remaining
/// coordinates are uniform on S^{d-2} via normalized Gaussian vectors.
class BandSampler {
public:
    BandSampler(const BandParams& params, std::uint64_t seed);

    SpherePoint next();

    /// Inverse CDF of the colatitude marginal; u in [0, 1].
    double colatitude_quantile(double u) const;

    const BandParams& params() const { return params_; }

private:
    double uniform01();   // [0, 1), from the top 53 bits
    double gaussian();    // Box-Muller on uniform01 pairs

    BandParams params_;
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool have_spare_ = false;

    // cumulative integral of sin^{d-2} from a to node i, nodes uniform in [a, b]
    std::vector<double> cum_;
    double step_;
    double weight_;
};

/// Convenience wrapper over BandSampler. count must be >= 1.
std::vector<SpherePoint> sample_band(const BandParams& params, std::int64_t count,
                                     std::uint64_t seed);

}  // namespace kband
