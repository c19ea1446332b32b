#include "kband/werner.hpp"

#include "kband/bound.hpp"

#include <doctest.h>

#include <cmath>

using namespace kband;

TEST_SUITE_BEGIN("werner");

TEST_CASE("thresholds from published K(3) bounds") {
    CHECK(std::abs(thresholds(1.41758).nonlocal_onset - 0.705428) <= 1e-6);
    CHECK(std::abs(thresholds(1.417241).nonlocal_onset - 0.705596) <= 1e-6);
    CHECK(thresholds(std::sqrt(2.0)).nonlocal_onset ==
          doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("thresholds are ordered and bracket-validated") {
    const WernerThresholds t = thresholds(1.41758);
    CHECK(t.separable_max < t.lhv_all_max);
    CHECK(t.lhv_all_max < t.lhv_projective_max);
    CHECK(t.lhv_projective_max < t.nonlocal_onset);
    CHECK(t.nonlocal_onset < 1.0);

    CHECK_THROWS_AS(thresholds(1.3), std::invalid_argument);   // below CHSH
    CHECK_THROWS_AS(thresholds(1.6), std::invalid_argument);   // above Krivine
    CHECK_NOTHROW(thresholds(kChshK3Lower));
    CHECK_NOTHROW(thresholds(kKrivineK3Upper));
}

TEST_CASE("better K(3) bounds shrink the unknown window") {
    double prev = thresholds(std::sqrt(2.0)).nonlocal_onset;
    for (double k3 : {1.417, 1.41758, 1.45, 1.5, 1.5163}) {
        const double onset = thresholds(k3).nonlocal_onset;
        CHECK(onset < prev);
        prev = onset;
    }
}

TEST_CASE("classify puts p in the documented regime") {
    const WernerThresholds t = thresholds(1.41758);
    CHECK(classify(0.2, t).label == RegimeLabel::Separable);
    CHECK(classify(0.70, t).label == RegimeLabel::UnknownWindow);
    CHECK(classify(0.71, t).label == RegimeLabel::Nonlocal);

    // boundaries stay on the local side
    CHECK(classify(t.separable_max, t).label == RegimeLabel::Separable);
    CHECK(classify(t.lhv_all_max, t).label == RegimeLabel::EntangledLocalAll);
    CHECK(classify(t.nonlocal_onset, t).label == RegimeLabel::UnknownWindow);
    CHECK(classify(t.nonlocal_onset + 1e-12, t).label == RegimeLabel::Nonlocal);

    CHECK_THROWS_AS(classify(-0.1, t), std::invalid_argument);
    CHECK_THROWS_AS(classify(1.1, t), std::invalid_argument);
}

TEST_CASE("regime partition covers [0, 1] without gaps") {
    const WernerThresholds t = thresholds(1.45);
    const auto regimes = regime_partition(t);
    REQUIRE(regimes.size() == 5);
    CHECK(regimes.front().p_lo == 0.0);
    CHECK(regimes.back().p_hi == 1.0);
    for (std::size_t i = 0; i + 1 < regimes.size(); ++i) {
        CHECK(regimes[i].p_hi == regimes[i + 1].p_lo);
        CHECK(regimes[i].p_lo < regimes[i].p_hi);
    }
    CHECK(regimes[0].label == RegimeLabel::Separable);
    CHECK(regimes[4].label == RegimeLabel::Nonlocal);
    CHECK(to_string(regimes[1].label) == "entangled-local-all");
}

TEST_CASE("bell_mean_value: zero noise weight and aligned single setting") {
    Eigen::MatrixXd m1(1, 1);
    m1 << 1.0;
    Eigen::Matrix3Xd a(3, 1), b(3, 1);
    a.col(0) << 0.0, 0.0, 1.0;
    b.col(0) << 0.0, 0.0, 1.0;
    CHECK(bell_mean_value(m1, a, b, 0.0) == 0.0);
    CHECK(bell_mean_value(m1, a, b, 0.37) == doctest::Approx(0.37).epsilon(1e-15));
}

TEST_CASE("bell_mean_value: CHSH at the Tsirelson configuration") {
    Eigen::MatrixXd chsh(2, 2);
    chsh << 1.0, 1.0, 1.0, -1.0;
    const double s = 1.0 / std::sqrt(2.0);
    Eigen::Matrix3Xd a(3, 2), b(3, 2);
    a.col(0) << 0.0, 0.0, 1.0;
    a.col(1) << 1.0, 0.0, 0.0;
    b.col(0) << s, 0.0, s;
    b.col(1) << -s, 0.0, s;
    for (double p : {0.3, 0.705428, 1.0})
        CHECK(std::abs(bell_mean_value(chsh, a, b, p) - 2.0 * std::sqrt(2.0) * p) <=
              1e-12);
}

TEST_CASE("bell_mean_value is linear in p and M") {
    Eigen::MatrixXd m(2, 2);
    m << 0.3, -1.2, 0.7, 0.4;
    Eigen::Matrix3Xd a(3, 2), b(3, 2);
    a.col(0) << 1.0, 0.0, 0.0;
    a.col(1) << 0.0, 1.0, 0.0;
    b.col(0) << 0.0, 0.0, 1.0;
    b.col(1) << std::sqrt(0.5), std::sqrt(0.5), 0.0;
    const double base = bell_mean_value(m, a, b, 0.25);
    CHECK(bell_mean_value(m, a, b, 0.5) == doctest::Approx(2.0 * base).epsilon(1e-13));
    CHECK(bell_mean_value(3.0 * m, a, b, 0.25) ==
          doctest::Approx(3.0 * base).epsilon(1e-13));
}

TEST_CASE("bell_mean_value validation") {
    Eigen::MatrixXd m(2, 2);
    m << 1.0, 0.0, 0.0, 1.0;
    Eigen::Matrix3Xd one(3, 1), two(3, 2);
    one.col(0) << 0.0, 0.0, 1.0;
    two.col(0) << 0.0, 0.0, 1.0;
    two.col(1) << 0.0, 1.0, 0.0;
    CHECK_THROWS_AS(bell_mean_value(m, one, two, 0.5), std::invalid_argument);

    Eigen::Matrix3Xd bad = two;
    bad.col(1) << 0.0, 2.0, 0.0;
    CHECK_THROWS_AS(bell_mean_value(m, two, bad, 0.5), std::invalid_argument);
}

TEST_SUITE_END();
