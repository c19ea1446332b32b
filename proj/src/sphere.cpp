#include "kband/sphere.hpp"

#include "internal.hpp"
#include "kband/quad.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kband {

using detail::kPi;

void validate(const BandParams& params) {
    if (params.d < 3) throw std::invalid_argument("BandParams: d must be >= 3");
    if (!(params.a >= 0.0 && params.a < params.b && params.b <= kPi))
        throw std::invalid_argument("BandParams: need 0 <= a < b <= pi");
}

double sphere_volume(int k) {
    if (k < 0) throw std::invalid_argument("sphere_volume: k must be >= 0");
    const double half = 0.5 * (k + 1);
    return std::exp(std::log(2.0) + half * std::log(kPi) - std::lgamma(half));
}

double band_weight(const BandParams& params) {
    validate(params);
    const double a = params.a;
    const double b = params.b;
    switch (params.d) {
        case 3:
            return std::cos(a) - std::cos(b);
        case 4:
            return 0.5 * (b - a) - 0.25 * (std::sin(2.0 * b) - std::sin(2.0 * a));
        default: {
            const int p = params.d - 2;
            auto f = [p](double t) { return detail::ipow(std::sin(t), p); };
            return integrate_1d(f, a, b, 1e-13).value;
        }
    }
}

double chord(double phi1, double psi1, double psi2) {
    const double r = 2.0 - 2.0 * std::sin(phi1) * std::sin(psi1) * std::cos(psi2) -
                     2.0 * std::cos(phi1) * std::cos(psi1);
    return std::sqrt(std::max(0.0, r));
}

namespace {
constexpr int kTableIntervals = 4096;
constexpr double kQuantileTol = 1e-12;
}  // namespace

BandSampler::BandSampler(const BandParams& params, std::uint64_t seed)
    : params_(params), eng_(seed) {
    validate(params_);
    const int p = params_.d - 2;
    auto density = [p](double t) { return detail::ipow(std::sin(t), p); };
    step_ = (params_.b - params_.a) / kTableIntervals;
    cum_.resize(kTableIntervals + 1);
    cum_[0] = 0.0;
    for (int i = 0; i < kTableIntervals; ++i) {
        const double lo = params_.a + i * step_;
        cum_[i + 1] =
            cum_[i] + detail::gauss_panel(detail::kGl8X, detail::kGl8W, lo,
                                          lo + step_, density);
    }
    weight_ = cum_[kTableIntervals];
}

double BandSampler::colatitude_quantile(double u) const {
    u = std::clamp(u, 0.0, 1.0);
    const double target = u * weight_;
    const auto it = std::upper_bound(cum_.begin(), cum_.end(), target);
    const int i = std::clamp<int>(static_cast<int>(it - cum_.begin()) - 1, 0,
                                  kTableIntervals - 1);
    const double node = params_.a + i * step_;
    const int p = params_.d - 2;
    auto density = [p](double t) { return detail::ipow(std::sin(t), p); };
    auto cdf_local = [&](double x) {
        return cum_[i] +
               detail::gauss_panel(detail::kGl8X, detail::kGl8W, node, x, density) -
               target;
    };

    // Safeguarded Newton inside the bracketing table interval; falls back to
    // bisection whenever a step leaves the bracket. g is monotone, so a
    // Newton step below tolerance pins the root to the same tolerance.
    double lo = node;
    double hi = node + step_;
    double x = 0.5 * (lo + hi);
    while (hi - lo > kQuantileTol) {
        const double g = cdf_local(x);
        if (g > 0.0)
            hi = x;
        else
            lo = x;
        if (hi - lo <= kQuantileTol) break;
        const double slope = density(x);
        double next = (slope > 0.0) ? x - g / slope : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(next - x) <= 0.5 * kQuantileTol) return next;
        x = next;
    }
    return 0.5 * (lo + hi);
}

double BandSampler::uniform01() {
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
}

double BandSampler::gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    const double r = std::sqrt(-2.0 * std::log(1.0 - uniform01()));
    const double t = 2.0 * kPi * uniform01();
    spare_ = r * std::sin(t);
    have_spare_ = true;
    return r * std::cos(t);
}

SpherePoint BandSampler::next() {
    const int d = params_.d;
    const double phi = colatitude_quantile(uniform01());

    // Direction on S^{d-2} from a normalized Gaussian vector.
    Eigen::VectorXd dir(d - 1);
    double norm2 = 0.0;
    do {
        for (int i = 0; i < d - 1; ++i) dir[i] = gaussian();
        norm2 = dir.squaredNorm();
    } while (norm2 < 1e-16);
    dir /= std::sqrt(norm2);

    SpherePoint pt;
    pt.colatitude = phi;
    pt.coords.resize(d);
    pt.coords.head(d - 1) = std::sin(phi) * dir;
    pt.coords[d - 1] = std::cos(phi);
    return pt;
}

std::vector<SpherePoint> sample_band(const BandParams& params, std::int64_t count,
                                     std::uint64_t seed) {
    if (count < 1) throw std::invalid_argument("sample_band: count must be >= 1");
    BandSampler sampler(params, seed);
    std::vector<SpherePoint> out;
    out.reserve(static_cast<std::size_t>(count));
    for (std::int64_t i = 0; i < count; ++i) out.push_back(sampler.next());
    return out;
}

}  // namespace kband
