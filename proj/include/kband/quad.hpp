#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace kband {

/// Result of a deterministic adaptive integration.
struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;   // sum of per-panel rule differences
    std::int64_t evaluations = 0;  // integrand calls
};

/// Axis-aligned integration box in radians.
struct Box3 {
    std::array<double, 3> lo;
    std::array<double, 3> hi;
};

/// Thrown when adaptive refinement hits its evaluation budget before
/// reaching the requested tolerance. Carries the best partial result.
class BudgetError : public std::runtime_error {
public:
    BudgetError(const std::string& what, QuadResult partial)
        : std::runtime_error(what), partial_(partial) {}
    const QuadResult& partial() const { return partial_; }

private:
    QuadResult partial_;
};

/// Adaptive Gauss-Legendre on [lo, hi]: 15-node panels, worst panel bisected
/// until the summed panel-difference estimate drops below
/// max(rel_tol * |value|, 1e-14). rel_tol must lie in (0, 1e-2].
/// panel_limit caps the number of panels; exceeding it throws BudgetError.
QuadResult integrate_1d(const std::function<double(double)>& f, double lo, double hi,
                        double rel_tol, std::int64_t panel_limit = 1'000'000);

/// Adaptive tensor Gauss-Legendre over box. Cells carry an embedded
/// 8^3-vs-5^3 error estimate and the worst cell is split into octants until
/// the total estimate drops below max(rel_tol * |value|, 1e-14).
///
/// The box is affinely rescaled to the unit cube before subdivision (thin
/// bands stay well conditioned) and the initial mesh pre-splits along the
/// plane phi1 = psi1 when it crosses the box, the kink locus of |x - y|.
///
/// Deterministic: cell contributions are re-summed in canonical (position)
/// order, so the result is bit-identical across runs. Exceeding eval_limit
/// throws BudgetError rather than truncating.
QuadResult integrate_3d(const std::function<double(double, double, double)>& f,
                        const Box3& box, double rel_tol,
                        std::int64_t eval_limit = 10'000'000);

}  // namespace kband
