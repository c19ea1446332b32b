#include "kband/bound.hpp"

#include "internal.hpp"

#include <cmath>
#include <stdexcept>

namespace kband {

using detail::kPi;

namespace {

constexpr double kDegenerateWeight = 1e-13;

double checked_weight(const BandParams& params) {
    const double w = band_weight(params);
    if (w < kDegenerateWeight)
        throw std::domain_error(
            "degenerate band: band_weight below 1e-13 (use ring_bound for the "
            "a -> b limit)");
    return w;
}

}  // namespace

double moment_term(const BandParams& params) {
    validate(params);
    const double w = checked_weight(params);
    const int d = params.d;
    const double delta = (detail::ipow(std::sin(params.b), d - 1) -
                          detail::ipow(std::sin(params.a), d - 1)) /
                         (d - 1);
    const double ratio = delta / w;
    return ratio * ratio;
}

QuadResult pair_term(const BandParams& params, double rel_tol) {
    validate(params);
    const double w = checked_weight(params);
    const int d = params.d;
    const double prefactor = sphere_volume(d - 3) / sphere_volume(d - 2);

    auto f = [d](double phi1, double psi1, double psi2) {
        return chord(phi1, psi1, psi2) * detail::ipow(std::sin(phi1), d - 2) *
               detail::ipow(std::sin(psi1), d - 2) *
               detail::ipow(std::sin(psi2), d - 3);
    };
    const Box3 box{{params.a, params.a, 0.0}, {params.b, params.b, kPi}};
    QuadResult quad = integrate_3d(f, box, rel_tol);

    const double scale = prefactor / (w * w);
    quad.value *= scale;
    quad.error_estimate *= scale;
    return quad;
}

BoundReport lower_bound(const BandParams& params, double rel_tol) {
    BoundReport report;
    report.params = params;
    report.moment_term = moment_term(params);
    report.quad = pair_term(params, rel_tol);
    report.pair_term = report.quad.value;
    report.total = report.moment_term + report.pair_term;
    return report;
}

double ring_chord_mean(int k, double rel_tol) {
    if (k < 1) throw std::invalid_argument("ring_chord_mean: k must be >= 1");
    auto numerator = [k](double t) {
        return 2.0 * std::sin(0.5 * t) * detail::ipow(std::sin(t), k - 1);
    };
    auto denominator = [k](double t) { return detail::ipow(std::sin(t), k - 1); };
    const double num = integrate_1d(numerator, 0.0, kPi, rel_tol).value;
    const double den = integrate_1d(denominator, 0.0, kPi, rel_tol).value;
    return num / den;
}

double ring_bound(int d, double phi) {
    if (d < 3) throw std::invalid_argument("ring_bound: d must be >= 3");
    if (!(phi > 0.0 && phi <= 0.5 * kPi))
        throw std::invalid_argument("ring_bound: phi must lie in (0, pi/2]");
    const double c = std::cos(phi);
    return c * c + std::sin(phi) * ring_chord_mean(d - 2, 1e-10);
}

double bbt_bound(int d) {
    if (d < 2) throw std::invalid_argument("bbt_bound: d must be >= 2");
    const double log_ratio = std::lgamma(0.5 * (d + 1)) - std::lgamma(0.5 * d);
    return std::exp(std::log(kPi) - std::log(static_cast<double>(d)) +
                    2.0 * log_ratio);
}

}  // namespace kband
