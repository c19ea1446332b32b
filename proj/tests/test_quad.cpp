#include "kband/quad.hpp"

#include "kband/sphere.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace kband;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double eq7_integrand_d3(double phi, double psi, double psi2) {
    return chord(phi, psi, psi2) * std::sin(phi) * std::sin(psi);
}

// Uniform point on S^2 through an independent RNG path (no BandSampler).
Eigen::Vector3d uniform_s2(std::mt19937_64& eng) {
    std::normal_distribution<double> normal;
    Eigen::Vector3d v;
    do {
        v << normal(eng), normal(eng), normal(eng);
    } while (v.squaredNorm() < 1e-12);
    return v.normalized();
}

}  // namespace

TEST_SUITE_BEGIN("quad");

TEST_CASE("integrate_1d elementary integrals") {
    auto s = integrate_1d([](double t) { return std::sin(t); }, 0.0, kPi, 1e-10);
    CHECK(s.value == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(s.evaluations >= 1);

    auto p = integrate_1d([](double x) { return x * x; }, 0.0, 1.0, 1e-10);
    CHECK(p.value == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

    auto h = integrate_1d([](double t) { return 2.0 * std::sin(0.5 * t); }, 0.0,
                          kPi, 1e-10);
    CHECK(h.value == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("integrate_1d respects the accuracy contract on a kink") {
    auto r = integrate_1d([](double x) { return std::sqrt(x); }, 0.0, 1.0, 1e-8);
    CHECK(std::abs(r.value - 2.0 / 3.0) <=
          std::max(1e-8 * std::abs(r.value), 1e-14) * 10);
    CHECK(r.error_estimate >= 0.0);
}

TEST_CASE("integrate_1d input validation and budget") {
    auto f = [](double x) { return x; };
    CHECK_THROWS_AS(integrate_1d(f, 1.0, 0.0, 1e-8), std::invalid_argument);
    CHECK_THROWS_AS(integrate_1d(f, 0.0, 1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(integrate_1d(f, 0.0, 1.0, 0.1), std::invalid_argument);

    auto kinky = [](double x) { return std::sqrt(std::abs(x - 0.318309886)); };
    CHECK_THROWS_AS(integrate_1d(kinky, 0.0, 1.0, 1e-12, 3), BudgetError);
    try {
        integrate_1d(kinky, 0.0, 1.0, 1e-12, 3);
    } catch (const BudgetError& e) {
        CHECK(e.partial().evaluations > 0);
        CHECK(e.partial().value > 0.0);
    }
}

TEST_CASE("halving rel_tol moves the value less than the error estimate") {
    auto kinky = [](double x) { return std::sqrt(std::abs(x - 0.3)); };
    const auto coarse = integrate_1d(kinky, 0.0, 1.0, 1e-6);
    const auto fine = integrate_1d(kinky, 0.0, 1.0, 5e-7);
    CHECK(std::abs(coarse.value - fine.value) <= coarse.error_estimate);

    const Box3 box{{0.0, 0.0, 0.0}, {kPi, kPi, kPi}};
    const auto c3 = integrate_3d(eq7_integrand_d3, box, 1e-5);
    const auto f3 = integrate_3d(eq7_integrand_d3, box, 5e-6);
    CHECK(std::abs(c3.value - f3.value) <= c3.error_estimate);
}

TEST_CASE("integrate_3d constant and separable products") {
    const Box3 unit{{0.0, 0.0, 0.0}, {1.0, 1.0, 1.0}};
    auto one = integrate_3d([](double, double, double) { return 1.0; }, unit, 1e-8);
    CHECK(one.value == doctest::Approx(1.0).epsilon(1e-13));

    const Box3 box{{0.0, 0.0, 0.0}, {kPi / 2, kPi / 2, kPi}};
    auto sep = integrate_3d(
        [](double p, double q, double) { return std::sin(p) * std::sin(q); }, box,
        1e-8);
    CHECK(sep.value == doctest::Approx(kPi).epsilon(1e-7));
}

TEST_CASE("integrate_3d linearity in the integrand") {
    const Box3 box{{0.0, 0.2, 0.0}, {1.1, 1.4, kPi}};
    const double base = integrate_3d(eq7_integrand_d3, box, 1e-7).value;
    for (double alpha : {2.0, -1.0}) {
        auto scaled = integrate_3d(
            [alpha](double p, double q, double r) {
                return alpha * eq7_integrand_d3(p, q, r);
            },
            box, 1e-7);
        CHECK(scaled.value == doctest::Approx(alpha * base).epsilon(1e-7));
    }
}

TEST_CASE("integrate_3d is symmetric under swapping phi1 and psi1") {
    const Box3 box{{0.1, 0.1, 0.0}, {1.3, 1.3, kPi}};
    auto f4 = [](double p, double q, double r) {
        return chord(p, q, r) * std::pow(std::sin(p) * std::sin(q), 2.0) *
               std::sin(r);
    };
    auto swapped = [&](double p, double q, double r) { return f4(q, p, r); };
    const auto lhs = integrate_3d(f4, box, 1e-7);
    const auto rhs = integrate_3d(swapped, box, 1e-7);
    CHECK(std::abs(lhs.value - rhs.value) <=
          lhs.error_estimate + rhs.error_estimate + 1e-12);
}

TEST_CASE("integrate_3d is deterministic") {
    const Box3 box{{0.0, 0.0, 0.0}, {1.04819755, 1.04819755, kPi}};
    const auto r1 = integrate_3d(eq7_integrand_d3, box, 1e-7);
    const auto r2 = integrate_3d(eq7_integrand_d3, box, 1e-7);
    CHECK(r1.value == r2.value);
    CHECK(r1.error_estimate == r2.error_estimate);
    CHECK(r1.evaluations == r2.evaluations);
}

TEST_CASE("integrate_3d budget overrun throws instead of truncating") {
    const Box3 box{{0.0, 0.0, 0.0}, {kPi, kPi, kPi}};
    CHECK_THROWS_AS(integrate_3d(eq7_integrand_d3, box, 1e-12, 20'000), BudgetError);
}

TEST_CASE("mean chord of S^2 from the assembled pair integral vs Monte Carlo" *
          doctest::timeout(300)) {
    // Quadrature route: (1/pi) * I3 / W^2 with W = 2 must equal 4/3.
    const Box3 box{{0.0, 0.0, 0.0}, {kPi, kPi, kPi}};
    const auto quad = integrate_3d(eq7_integrand_d3, box, 1e-8);
    const double mean_chord = quad.value / (kPi * 4.0);
    CHECK(mean_chord == doctest::Approx(4.0 / 3.0).epsilon(1e-6));

    // Independent oracle: 10^7 uniform pairs on S^2.
    std::mt19937_64 eng(99);
    const std::int64_t n = 10'000'000;
    double sum = 0.0, sum2 = 0.0;
    for (std::int64_t i = 0; i < n; ++i) {
        const double dist = (uniform_s2(eng) - uniform_s2(eng)).norm();
        sum += dist;
        sum2 += dist * dist;
    }
    const double mc = sum / n;
    const double se = std::sqrt((sum2 - n * mc * mc) / (n - 1) / n);
    CHECK(std::abs(mean_chord - mc) <= 3.0 * se);
}

TEST_SUITE_END();
