#pragma once

#include <array>
#include <cmath>

// Numeric tables and helpers shared across the library internals.
namespace kband::detail {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// Gauss-Legendre nodes/weights on [-1, 1].
inline constexpr std::array<double, 5> kGl5X = {
    -0.90617984593866396, -0.53846931010568311, 0.0,
    0.53846931010568311, 0.90617984593866396};
inline constexpr std::array<double, 5> kGl5W = {
    0.23692688505618942, 0.47862867049936619, 0.568888888888889,
    0.47862867049936619, 0.23692688505618942};

inline constexpr std::array<double, 8> kGl8X = {
    -0.96028985649753618, -0.79666647741362673, -0.52553240991632899,
    -0.18343464249564978, 0.18343464249564978, 0.52553240991632899,
    0.79666647741362673, 0.96028985649753618};
inline constexpr std::array<double, 8> kGl8W = {
    0.10122853629037669, 0.22238103445337434, 0.31370664587788705,
    0.36268378337836177, 0.36268378337836177, 0.31370664587788705,
    0.22238103445337434, 0.10122853629037669};

inline constexpr std::array<double, 15> kGl15X = {
    -0.98799251802048538, -0.93727339240070595, -0.84820658341042721,
    -0.72441773136017007, -0.57097217260853883, -0.39415134707756339,
    -0.20119409399743451, 0.0, 0.20119409399743451, 0.39415134707756339,
    0.57097217260853883, 0.72441773136017007, 0.84820658341042721,
    0.93727339240070595, 0.98799251802048538};
inline constexpr std::array<double, 15> kGl15W = {
    0.030753241996118647, 0.070366047488108069, 0.10715922046717177,
    0.13957067792615391, 0.16626920581699378, 0.18616100001556188,
    0.19843148532711125, 0.2025782419255609, 0.19843148532711125,
    0.18616100001556188, 0.16626920581699378, 0.13957067792615391,
    0.10715922046717177, 0.070366047488108069, 0.030753241996118647};

// Integer power by repeated squaring; exact for n = 0 and cheap for the
// small exponents sin^{d-2} needs.
inline double ipow(double x, int n) {
    double r = 1.0;
    double base = x;
    for (int e = n; e > 0; e >>= 1) {
        if (e & 1) r *= base;
        base *= base;
    }
    return r;
}

template <std::size_t N>
double gauss_panel(const std::array<double, N>& xs, const std::array<double, N>& ws,
                   double lo, double hi, const auto& f) {
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    double sum = 0.0;
    for (std::size_t i = 0; i < N; ++i) sum += ws[i] * f(mid + half * xs[i]);
    return sum * half;
}

}  // namespace kband::detail
