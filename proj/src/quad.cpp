#include "kband/quad.hpp"

#include "internal.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

namespace kband {

namespace {

using detail::kGl15W;
using detail::kGl15X;
using detail::kGl5W;
using detail::kGl5X;
using detail::kGl8W;
using detail::kGl8X;

void check_rel_tol(double rel_tol) {
    if (!(rel_tol > 0.0 && rel_tol <= 1e-2))
        throw std::invalid_argument("rel_tol must lie in (0, 1e-2]");
}

// ---------------------------------------------------------------------------
// 1-D: 15-node panels, worst-first bisection
// ---------------------------------------------------------------------------

struct Panel {
    double lo, hi;
    double q_left, q_right;  // 15-node values on the two halves
    double err;              // |whole - (left + right)|
    std::int64_t id;

    double value() const { return q_left + q_right; }
};

struct PanelWorse {
    bool operator()(const Panel& a, const Panel& b) const {
        if (a.err != b.err) return a.err < b.err;
        return a.id > b.id;  // older panel first on ties
    }
};

}  // namespace

QuadResult integrate_1d(const std::function<double(double)>& f, double lo, double hi,
                        double rel_tol, std::int64_t panel_limit) {
    check_rel_tol(rel_tol);
    if (!(lo <= hi)) throw std::invalid_argument("integrate_1d: need lo <= hi");

    std::int64_t evals = 0;
    auto gl15 = [&](double l, double h) {
        evals += 15;
        return detail::gauss_panel(kGl15X, kGl15W, l, h, f);
    };

    std::int64_t next_id = 0;
    auto make_panel = [&](double l, double h, double q_whole) {
        const double mid = 0.5 * (l + h);
        Panel p{l, h, gl15(l, mid), gl15(mid, h), 0.0, next_id++};
        p.err = std::abs(q_whole - p.value());
        return p;
    };

    std::priority_queue<Panel, std::vector<Panel>, PanelWorse> active;
    std::vector<Panel> frozen;  // below roundoff width, no further refinement

    double total = 0.0;
    double total_err = 0.0;
    auto push = [&](const Panel& p) {
        total += p.value();
        total_err += p.err;
        active.push(p);
    };

    push(make_panel(lo, hi, gl15(lo, hi)));

    std::int64_t panels = 1;
    while (total_err > std::max(rel_tol * std::abs(total), 1e-14) &&
           !active.empty()) {
        const Panel worst = active.top();
        if (worst.hi - worst.lo < 1e-15 * (1.0 + std::abs(worst.lo))) {
            active.pop();
            frozen.push_back(worst);
            continue;
        }
        if (panels + 1 > panel_limit) {
            QuadResult partial{total, total_err, evals};
            throw BudgetError("integrate_1d: panel limit exceeded", partial);
        }
        active.pop();
        total -= worst.value();
        total_err -= worst.err;
        const double mid = 0.5 * (worst.lo + worst.hi);
        push(make_panel(worst.lo, mid, worst.q_left));
        push(make_panel(mid, worst.hi, worst.q_right));
        ++panels;
    }

    // Canonical reduction: sum in position order regardless of refinement
    // history, so identical inputs give bit-identical results.
    std::vector<Panel> leaves = std::move(frozen);
    while (!active.empty()) {
        leaves.push_back(active.top());
        active.pop();
    }
    std::sort(leaves.begin(), leaves.end(),
              [](const Panel& a, const Panel& b) { return a.lo < b.lo; });
    QuadResult out;
    for (const Panel& p : leaves) {
        out.value += p.value();
        out.error_estimate += p.err;
    }
    out.evaluations = evals;
    return out;
}

// ---------------------------------------------------------------------------
// 3-D: embedded 8^3 / 5^3 tensor cells on the unit cube, octant refinement
// ---------------------------------------------------------------------------

namespace {

struct Cell {
    std::array<double, 3> lo, hi;  // unit-cube coordinates
    double value;                  // 8^3 tensor rule
    double err;                    // |8^3 - 5^3|
    std::int64_t id;
};

struct CellWorse {
    bool operator()(const Cell& a, const Cell& b) const {
        if (a.err != b.err) return a.err < b.err;
        return a.id > b.id;
    }
};

constexpr std::int64_t kCellEvalCost = 8 * 8 * 8 + 5 * 5 * 5;

}  // namespace

QuadResult integrate_3d(const std::function<double(double, double, double)>& f,
                        const Box3& box, double rel_tol, std::int64_t eval_limit) {
    check_rel_tol(rel_tol);
    for (int k = 0; k < 3; ++k)
        if (!(box.lo[k] <= box.hi[k]))
            throw std::invalid_argument("integrate_3d: need lo <= hi on each axis");

    // Affine map unit cube -> box; thin bands become unit aspect before any
    // subdivision decisions are made.
    std::array<double, 3> width{};
    double jac = 1.0;
    for (int k = 0; k < 3; ++k) {
        width[k] = box.hi[k] - box.lo[k];
        jac *= width[k];
    }

    std::int64_t evals = 0;
    auto f_unit = [&](double u, double v, double w) {
        return f(box.lo[0] + width[0] * u, box.lo[1] + width[1] * v,
                 box.lo[2] + width[2] * w);
    };

    auto tensor = [&](const std::array<double, 3>& lo, const std::array<double, 3>& hi,
                      const auto& xs, const auto& ws) {
        const int n = static_cast<int>(xs.size());
        std::array<double, 3> mid, half;
        for (int k = 0; k < 3; ++k) {
            mid[k] = 0.5 * (lo[k] + hi[k]);
            half[k] = 0.5 * (hi[k] - lo[k]);
        }
        double sum = 0.0;
        for (int i = 0; i < n; ++i) {
            const double u = mid[0] + half[0] * xs[i];
            double sum_j = 0.0;
            for (int j = 0; j < n; ++j) {
                const double v = mid[1] + half[1] * xs[j];
                double sum_k = 0.0;
                for (int k = 0; k < n; ++k)
                    sum_k += ws[k] * f_unit(u, v, mid[2] + half[2] * xs[k]);
                sum_j += ws[j] * sum_k;
            }
            sum += ws[i] * sum_j;
        }
        evals += static_cast<std::int64_t>(n) * n * n;
        return sum * half[0] * half[1] * half[2];
    };

    std::int64_t next_id = 0;
    auto make_cell = [&](const std::array<double, 3>& lo,
                         const std::array<double, 3>& hi) {
        Cell c{lo, hi, 0.0, 0.0, next_id++};
        c.value = tensor(lo, hi, kGl8X, kGl8W);
        c.err = std::abs(c.value - tensor(lo, hi, kGl5X, kGl5W));
        return c;
    };

    std::priority_queue<Cell, std::vector<Cell>, CellWorse> active;
    std::vector<Cell> frozen;
    double total = 0.0;
    double total_err = 0.0;
    auto push = [&](const Cell& c) {
        total += c.value;
        total_err += c.err;
        active.push(c);
    };

    // Initial mesh: pre-split both of the first two axes where the kink plane
    // phi1 = psi1 crosses the box, so the kink runs through cell corners.
    std::vector<double> cuts0{0.0, 1.0}, cuts1{0.0, 1.0};
    const double overlap_lo = std::max(box.lo[0], box.lo[1]);
    const double overlap_hi = std::min(box.hi[0], box.hi[1]);
    if (overlap_lo < overlap_hi && width[0] > 0.0 && width[1] > 0.0) {
        const double c = 0.5 * (overlap_lo + overlap_hi);
        const double t0 = (c - box.lo[0]) / width[0];
        const double t1 = (c - box.lo[1]) / width[1];
        if (t0 > 0.0 && t0 < 1.0) cuts0 = {0.0, t0, 1.0};
        if (t1 > 0.0 && t1 < 1.0) cuts1 = {0.0, t1, 1.0};
    }

    // Thin bands leave |x - y| with a boundary layer at psi2 = 0 whose width
    // scales with the band, not the box; octant splits preserve the cell
    // aspect and can never isolate it. Grade the psi2 axis geometrically down
    // to the band scale instead.
    std::vector<double> cuts2{0.0, 1.0};
    const double band_scale = std::min(width[0], width[1]);
    if (band_scale > 0.0 && width[2] > 8.0 * band_scale) {
        cuts2.assign(1, 0.0);
        double t = band_scale / width[2];
        for (int k = 0; t < 0.25 && k < 24; ++k, t *= 4.0) cuts2.push_back(t);
        cuts2.push_back(1.0);
    }

    for (std::size_t i = 0; i + 1 < cuts0.size(); ++i)
        for (std::size_t j = 0; j + 1 < cuts1.size(); ++j)
            for (std::size_t k = 0; k + 1 < cuts2.size(); ++k)
                push(make_cell({cuts0[i], cuts1[j], cuts2[k]},
                               {cuts0[i + 1], cuts1[j + 1], cuts2[k + 1]}));

    while (total_err > std::max(rel_tol * std::abs(total), 5e-324) &&
           !active.empty()) {
        const Cell worst = active.top();
        const double max_width =
            std::max({worst.hi[0] - worst.lo[0], worst.hi[1] - worst.lo[1],
                      worst.hi[2] - worst.lo[2]});
        if (max_width < 1e-13) {
            active.pop();
            frozen.push_back(worst);
            continue;
        }
        if (evals + 8 * kCellEvalCost > eval_limit) {
            QuadResult partial{total * jac, total_err * jac, evals};
            throw BudgetError("integrate_3d: evaluation budget exceeded", partial);
        }
        active.pop();
        total -= worst.value;
        total_err -= worst.err;
        std::array<double, 3> mid;
        for (int k = 0; k < 3; ++k) mid[k] = 0.5 * (worst.lo[k] + worst.hi[k]);
        for (int oct = 0; oct < 8; ++oct) {
            std::array<double, 3> lo, hi;
            for (int k = 0; k < 3; ++k) {
                const bool upper = (oct >> k) & 1;
                lo[k] = upper ? mid[k] : worst.lo[k];
                hi[k] = upper ? worst.hi[k] : mid[k];
            }
            push(make_cell(lo, hi));
        }
    }

    std::vector<Cell> leaves = std::move(frozen);
    while (!active.empty()) {
        leaves.push_back(active.top());
        active.pop();
    }
    std::sort(leaves.begin(), leaves.end(), [](const Cell& a, const Cell& b) {
        if (a.lo[0] != b.lo[0]) return a.lo[0] < b.lo[0];
        if (a.lo[1] != b.lo[1]) return a.lo[1] < b.lo[1];
        return a.lo[2] < b.lo[2];
    });
    QuadResult out;
    for (const Cell& c : leaves) {
        out.value += c.value;
        out.error_estimate += c.err;
    }
    out.value *= jac;
    out.error_estimate *= jac;
    out.evaluations = evals;
    return out;
}

}  // namespace kband
