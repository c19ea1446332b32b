#pragma once

#include <Eigen/Core>

#include <string>
#include <vector>

namespace kband {

/// rho^W_p is separable iff p <= 1/3 (Werner 1989).
inline constexpr double kWernerSeparableMax = 1.0 / 3.0;

/// LHV model for all measurements for p <= 5/12 (Barrett 2002).
inline constexpr double kBarrettLocalAllMax = 5.0 / 12.0;

/// LHV model for projective measurements for p <= 0.6595
/// (Acin-Gisin-Toner 2006).
inline constexpr double kAgtLocalProjectiveMax = 0.6595;

/// Regime boundaries on the Werner parameter p. The first three are
/// literature constants; the last is 1/K3 for the supplied K(3) lower bound.
struct WernerThresholds {
    double separable_max;
    double lhv_all_max;
    double lhv_projective_max;
    double nonlocal_onset;
};

enum class RegimeLabel {
    Separable,
    EntangledLocalAll,
    LocalProjective,
    UnknownWindow,
    Nonlocal,
};

/// "separable", "entangled-local-all", "local-projective", "unknown-window",
/// "nonlocal".
std::string to_string(RegimeLabel label);

/// One segment of the p number line. The five regimes partition [0, 1];
/// local regimes are closed on the right (p <= threshold stays local),
/// nonlocality starts strictly above 1/K3.
struct Regime {
    RegimeLabel label;
    double p_lo;
    double p_hi;
};

/// Thresholds for a K(3) lower bound. k3_lower must lie in
/// [sqrt(2), 1.5163], the CHSH / Krivine bracket.
WernerThresholds thresholds(double k3_lower);

/// The five regimes in order, covering [0, 1] exactly.
std::vector<Regime> regime_partition(const WernerThresholds& t);

/// The unique regime containing p in [0, 1].
Regime classify(double p, const WernerThresholds& t);

/// Mean value of the Bell operator for M on the Werner state:
/// p * sum_ij M_ij (a_i . b_j). The density-matrix trace reduces exactly to
/// this dot-product form, so no Pauli algebra is simulated.
/// a_vectors and b_vectors hold unit 3-vectors in columns; M must be
/// (a columns) x (b columns).
double bell_mean_value(const Eigen::MatrixXd& M, const Eigen::Matrix3Xd& a_vectors,
                       const Eigen::Matrix3Xd& b_vectors, double p);

}  // namespace kband
