#pragma once

#include "kband/bound.hpp"

#include <optional>
#include <vector>

namespace kband {

/// One evaluated candidate during the band search.
struct TraceEntry {
    double a;
    double b;
    double total;
};

/// Result of maximizing the band bound over {(a, b) : 0 <= a < b <= pi/2}.
struct BandOptimum {
    BandParams params;              // best band found
    BoundReport report;             // full-tolerance report at the optimum
    std::vector<TraceEntry> trace;  // every evaluation, in search order
    bool converged = true;          // false when the budget ran out first
};

/// One row of the d-sweep comparison table.
struct TableRow {
    int d;
    double a_star;
    double b_star;
    double ours;                       // our band optimum
    double bbt;                        // Briet-Buhrman-Toner baseline
    std::optional<double> vertesi_ref; // published discrete value, d = 3..5 only
};

/// Published discrete-search values for d = 3, 4, 5; nullopt otherwise.
std::optional<double> vertesi_reference(int d);

/// Maximizes the band bound for one d.
///
/// Stage 1: grid x grid scan of the triangle (a = 0 included, b up to pi/2)
/// at coarse tolerance rel_tol * 100. Stage 2: Nelder-Mead refinement from
/// the top 3 cells at full rel_tol, each run terminating once the simplex
/// diameter falls below 1e-7. Ties break toward lexicographically smallest
/// (a, b). budget caps the total number of bound evaluations; when it runs
/// out the best-so-far is returned with converged = false.
BandOptimum optimize_band(int d, int grid, std::int64_t budget, double rel_tol);

/// One table row per d in [d_min, d_max], ascending. Rows are computed
/// independently; a failing row is reported with NaNs instead of aborting
/// the sweep.
std::vector<TableRow> sweep_table(int d_min, int d_max, double rel_tol,
                                  int grid = 64, std::int64_t budget = 5000);

}  // namespace kband
