#include "kband/opt.hpp"

#include "internal.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <future>
#include <limits>
#include <thread>

namespace kband {

using detail::kPi;

std::optional<double> vertesi_reference(int d) {
    // Discrete-search values published by Vertesi (2008) for d = 3, 4, 5.
    switch (d) {
        case 3: return 1.41724;
        case 4: return 1.44521;
        case 5: return 1.46007;
        default: return std::nullopt;
    }
}

namespace {

constexpr double kDomainHi = 0.5 * kPi;
constexpr double kSimplexDiameterTol = 1e-7;
constexpr int kMaxNelderMeadIters = 500;

struct Candidate {
    double a = 0.0;
    double b = 0.0;
    double total = -std::numeric_limits<double>::infinity();
    std::optional<BoundReport> report;

    bool better_than(const Candidate& other) const {
        if (total != other.total) return total > other.total;
        if (a != other.a) return a < other.a;  // ties: lexicographically smallest
        return b < other.b;
    }
};

bool in_domain(double a, double b) {
    return a >= 0.0 && b <= kDomainHi && b - a >= 1e-9;
}

// Shared evaluation bookkeeping for one optimize_band call.
struct Search {
    int d;
    std::int64_t budget;
    std::int64_t used = 0;
    std::vector<TraceEntry> trace;
    Candidate best;

    // Counts against the budget; out-of-domain probes are free. Degenerate
    // bands and quadrature budget overruns poison the point instead of
    // aborting the search.
    Candidate evaluate(double a, double b, double rel_tol) {
        Candidate c;
        c.a = a;
        c.b = b;
        if (!in_domain(a, b) || exhausted()) return c;
        ++used;
        try {
            BoundReport report = lower_bound({d, a, b}, rel_tol);
            c.total = report.total;
            c.report = std::move(report);
        } catch (const std::domain_error&) {
        } catch (const BudgetError&) {
        }
        if (c.report) {
            trace.push_back({a, b, c.total});
            if (c.better_than(best)) best = c;
        }
        return c;
    }

    bool exhausted() const { return used >= budget; }
};

double simplex_diameter(const std::array<Candidate, 3>& v) {
    double diam = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            diam = std::max(diam, std::hypot(v[i].a - v[j].a, v[i].b - v[j].b));
    return diam;
}

// Standard Nelder-Mead (reflect 1, expand 2, contract 1/2, shrink 1/2) on
// (a, b), maximizing. Out-of-domain vertices score -inf.
// Returns true when the simplex collapsed below the diameter tolerance.
bool nelder_mead(Search& search, const Candidate& start, double step,
                 double rel_tol) {
    std::array<Candidate, 3> v;
    v[0] = search.evaluate(start.a, start.b, rel_tol);
    const double da = (start.a + step < start.b - 1e-6) ? step : -step;
    v[1] = search.evaluate(std::max(0.0, start.a + da), start.b, rel_tol);
    const double db = (start.b + step <= kDomainHi) ? step : -step;
    v[2] = search.evaluate(start.a, start.b + db, rel_tol);

    for (int iter = 0; iter < kMaxNelderMeadIters; ++iter) {
        std::sort(v.begin(), v.end(),
                  [](const Candidate& x, const Candidate& y) { return x.better_than(y); });
        if (simplex_diameter(v) < kSimplexDiameterTol) return true;
        if (search.exhausted()) return false;

        const double ca = 0.5 * (v[0].a + v[1].a);
        const double cb = 0.5 * (v[0].b + v[1].b);
        auto probe = [&](double coeff) {
            return search.evaluate(ca + coeff * (ca - v[2].a),
                                   cb + coeff * (cb - v[2].b), rel_tol);
        };

        Candidate reflected = probe(1.0);
        if (reflected.better_than(v[0])) {
            Candidate expanded = probe(2.0);
            v[2] = expanded.better_than(reflected) ? expanded : reflected;
            continue;
        }
        if (reflected.better_than(v[1])) {
            v[2] = reflected;
            continue;
        }
        Candidate contracted = reflected.better_than(v[2]) ? probe(0.5) : probe(-0.5);
        if (contracted.better_than(v[2]) || contracted.better_than(reflected)) {
            v[2] = contracted;
            continue;
        }
        // Shrink toward the best vertex.
        for (int i = 1; i < 3; ++i)
            v[i] = search.evaluate(0.5 * (v[0].a + v[i].a), 0.5 * (v[0].b + v[i].b),
                                   rel_tol);
        if (search.exhausted()) return false;
    }
    return false;
}

}  // namespace

BandOptimum optimize_band(int d, int grid, std::int64_t budget, double rel_tol) {
    if (d < 3) throw std::invalid_argument("optimize_band: d must be >= 3");
    if (grid < 8) throw std::invalid_argument("optimize_band: grid must be >= 8");
    if (budget < 1) throw std::invalid_argument("optimize_band: budget must be >= 1");
    if (!(rel_tol > 0.0 && rel_tol <= 1e-2))
        throw std::invalid_argument("optimize_band: rel_tol must lie in (0, 1e-2]");

    Search search{d, budget};
    const double h = kDomainHi / grid;
    const double coarse_tol = std::min(rel_tol * 100.0, 1e-2);

    // Stage 1: triangular grid scan at coarse tolerance, a = 0 included.
    struct GridPoint {
        double a, b;
        double total = -std::numeric_limits<double>::infinity();
    };
    std::vector<GridPoint> cells;
    for (int i = 0; i < grid; ++i)
        for (int j = i + 1; j <= grid; ++j) cells.push_back({i * h, j * h});
    const std::int64_t n_grid =
        std::min<std::int64_t>(static_cast<std::int64_t>(cells.size()), budget);

    const unsigned n_threads =
        std::max(1u, std::min(std::thread::hardware_concurrency(), 16u));
    std::vector<std::future<void>> jobs;
    std::atomic<std::int64_t> cursor{0};
    for (unsigned t = 0; t < n_threads; ++t) {
        jobs.push_back(std::async(std::launch::async, [&]() {
            for (std::int64_t i = cursor.fetch_add(1); i < n_grid;
                 i = cursor.fetch_add(1)) {
                try {
                    cells[i].total =
                        lower_bound({d, cells[i].a, cells[i].b}, coarse_tol).total;
                } catch (const std::exception&) {
                }
            }
        }));
    }
    for (auto& job : jobs) job.get();

    // Merge scan results in deterministic cell order.
    search.used = n_grid;
    Candidate grid_best;
    for (std::int64_t i = 0; i < n_grid; ++i) {
        if (!std::isfinite(cells[i].total)) continue;
        search.trace.push_back({cells[i].a, cells[i].b, cells[i].total});
        Candidate c{cells[i].a, cells[i].b, cells[i].total, std::nullopt};
        if (c.better_than(grid_best)) grid_best = c;
    }

    // Stage 2: Nelder-Mead from the top 3 cells at full tolerance.
    std::vector<GridPoint> ranked(cells.begin(), cells.begin() + n_grid);
    std::sort(ranked.begin(), ranked.end(), [](const GridPoint& x, const GridPoint& y) {
        if (x.total != y.total) return x.total > y.total;
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    });

    bool converged = n_grid == static_cast<std::int64_t>(cells.size());
    const int n_starts = static_cast<int>(std::min<std::size_t>(3, ranked.size()));
    for (int s = 0; s < n_starts; ++s) {
        if (!std::isfinite(ranked[s].total)) break;
        Candidate start{ranked[s].a, ranked[s].b, ranked[s].total, std::nullopt};
        converged = nelder_mead(search, start, 0.25 * h, rel_tol) && converged;
    }

    // A coarse grid value should never outrank the refined optimum; if one
    // does (quadrature noise at coarse tolerance), settle it at full tolerance.
    if (std::isfinite(grid_best.total) && grid_best.total > search.best.total &&
        !search.exhausted())
        search.evaluate(grid_best.a, grid_best.b, rel_tol);

    BandOptimum out;
    out.trace = std::move(search.trace);
    out.converged = converged;
    Candidate final_best = search.best;
    if (!final_best.report && std::isfinite(grid_best.total)) {
        // Budget died before any full-tolerance evaluation; re-evaluate the
        // best coarse cell so the report is always populated.
        try {
            final_best.report = lower_bound({d, grid_best.a, grid_best.b}, coarse_tol);
            final_best.a = grid_best.a;
            final_best.b = grid_best.b;
            final_best.total = final_best.report->total;
        } catch (const std::exception&) {
        }
    }
    if (!final_best.report)
        throw std::runtime_error("optimize_band: no evaluable band found");
    out.params = final_best.report->params;
    out.report = *final_best.report;
    return out;
}

std::vector<TableRow> sweep_table(int d_min, int d_max, double rel_tol, int grid,
                                  std::int64_t budget) {
    if (d_min < 3 || d_min > d_max)
        throw std::invalid_argument("sweep_table: need 3 <= d_min <= d_max");
    std::vector<TableRow> rows;
    for (int d = d_min; d <= d_max; ++d) {
        TableRow row;
        row.d = d;
        row.bbt = bbt_bound(d);
        row.vertesi_ref = vertesi_reference(d);
        try {
            BandOptimum opt = optimize_band(d, grid, budget, rel_tol);
            row.a_star = opt.params.a;
            row.b_star = opt.params.b;
            row.ours = opt.report.total;
        } catch (const std::exception&) {
            row.a_star = row.b_star = row.ours =
                std::numeric_limits<double>::quiet_NaN();
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace kband
