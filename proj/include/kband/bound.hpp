#pragma once

#include "kband/quad.hpp"
#include "kband/sphere.hpp"

namespace kband {

/// K(2) = sqrt(2), the only order with an exactly known constant.
inline constexpr double kGrothendieckK2 = 1.4142135623730951;

/// Krivine's upper bound K(3) <= 1.5163.
inline constexpr double kKrivineK3Upper = 1.5163;

/// CHSH lower bound K(3) >= sqrt(2).
inline constexpr double kChshK3Lower = kGrothendieckK2;

/// Decomposed lower bound for K(d) at one band: the squared barycenter norm
/// plus the mean chord under mu_{a,b}.
struct BoundReport {
    BandParams params;
    double moment_term;  // |integral of x dmu|^2, in [0, 1]
    double pair_term;    // double integral of |x - y| dmu dmu, in [0, 2]
    double total;        // moment_term + pair_term
    QuadResult quad;     // pair-term quadrature provenance
};

/// Squared norm of the band barycenter. Only the polar component survives by
/// symmetry, giving [ (sin^{d-1}b - sin^{d-1}a) / (d-1) ]^2 / band_weight^2.
/// Throws std::domain_error when band_weight < 1e-13 (degenerate band).
double moment_term(const BandParams& params);

/// Mean chord under mu_{a,b}:
///   vol(S^{d-3})/vol(S^{d-2}) * I3 / band_weight^2,
/// where I3 integrates |x-y| sin^{d-2}(phi1) sin^{d-2}(psi1) sin^{d-3}(psi2)
/// over [a,b] x [a,b] x [0,pi]. For d = 3 the psi2 factor is identically 1.
QuadResult pair_term(const BandParams& params, double rel_tol);

/// Lower bound for K(d): moment term plus pair term at one band.
BoundReport lower_bound(const BandParams& params, double rel_tol);

/// Mean chord of two independent uniform points on S^k, k >= 1:
/// [int_0^pi 2 sin(t/2) sin^{k-1}t dt] / [int_0^pi sin^{k-1}t dt].
double ring_chord_mean(int k, double rel_tol);

/// Degenerate-band (a -> b) limit of the bound: the measure concentrates on
/// the ring sin(phi) * S^{d-2}, giving cos^2(phi) + sin(phi) * ring mean.
/// Requires d >= 3 and phi in (0, pi/2].
double ring_bound(int d, double phi);

/// Briet-Buhrman-Toner baseline (pi/d) * (Gamma((d+1)/2) / Gamma(d/2))^2,
/// valid for d >= 2, evaluated through lgamma.
double bbt_bound(int d);

}  // namespace kband
