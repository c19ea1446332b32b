#include "kband/werner.hpp"

#include "kband/bound.hpp"

#include <cmath>
#include <stdexcept>

namespace kband {

std::string to_string(RegimeLabel label) {
    switch (label) {
        case RegimeLabel::Separable: return "separable";
        case RegimeLabel::EntangledLocalAll: return "entangled-local-all";
        case RegimeLabel::LocalProjective: return "local-projective";
        case RegimeLabel::UnknownWindow: return "unknown-window";
        case RegimeLabel::Nonlocal: return "nonlocal";
    }
    throw std::logic_error("unreachable regime label");
}

WernerThresholds thresholds(double k3_lower) {
    if (!(k3_lower >= kChshK3Lower && k3_lower <= kKrivineK3Upper))
        throw std::invalid_argument(
            "thresholds: k3_lower must lie in [sqrt(2), 1.5163], the "
            "CHSH/Krivine bracket");
    return {kWernerSeparableMax, kBarrettLocalAllMax, kAgtLocalProjectiveMax,
            1.0 / k3_lower};
}

std::vector<Regime> regime_partition(const WernerThresholds& t) {
    return {
        {RegimeLabel::Separable, 0.0, t.separable_max},
        {RegimeLabel::EntangledLocalAll, t.separable_max, t.lhv_all_max},
        {RegimeLabel::LocalProjective, t.lhv_all_max, t.lhv_projective_max},
        {RegimeLabel::UnknownWindow, t.lhv_projective_max, t.nonlocal_onset},
        {RegimeLabel::Nonlocal, t.nonlocal_onset, 1.0},
    };
}

Regime classify(double p, const WernerThresholds& t) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("classify: p must lie in [0, 1]");
    // Local regimes are closed on the right: p <= threshold stays local,
    // nonlocality starts strictly above 1/K3.
    const auto regimes = regime_partition(t);
    for (const Regime& r : regimes)
        if (p <= r.p_hi) return r;
    return regimes.back();
}

double bell_mean_value(const Eigen::MatrixXd& M, const Eigen::Matrix3Xd& a_vectors,
                       const Eigen::Matrix3Xd& b_vectors, double p) {
    if (a_vectors.cols() != M.rows() || b_vectors.cols() != M.cols())
        throw std::invalid_argument(
            "bell_mean_value: M must be (a columns) x (b columns)");
    for (Eigen::Index i = 0; i < a_vectors.cols(); ++i)
        if (std::abs(a_vectors.col(i).norm() - 1.0) > 1e-10)
            throw std::invalid_argument("bell_mean_value: a vectors must be unit");
    for (Eigen::Index j = 0; j < b_vectors.cols(); ++j)
        if (std::abs(b_vectors.col(j).norm() - 1.0) > 1e-10)
            throw std::invalid_argument("bell_mean_value: b vectors must be unit");
    return p * M.cwiseProduct(a_vectors.transpose() * b_vectors).sum();
}

}  // namespace kband
