#pragma once

#include "kband/bound.hpp"
#include "kband/opt.hpp"
#include "kband/werner.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace kband {

enum class Format { Text, Csv, Json };

/// Parses "text" / "csv" / "json"; throws std::invalid_argument otherwise.
Format parse_format(const std::string& name);

/// Fixed-width float formatting used by the text and CSV renderers:
/// 9 significant digits, so regressions show up well before they reach
/// acceptance tolerance. JSON keeps full round-trip precision instead.
std::string format_double(double x);

/// Everything the `discrete` command reports.
struct DiscreteReport {
    int d;
    int n;
    int iters;
    std::uint64_t seed;
    BandParams band;          // band used for init and the MC estimate
    double discrete_value;    // best configuration objective found
    double mc_estimate;       // MC statistic at the band
    double mc_stderr;
    std::vector<std::pair<int, std::int64_t>> brute_force;  // (n, C) rows
};

std::string render_bound(const BoundReport& report, Format format);
std::string render_optimum(const BandOptimum& optimum, Format format);
std::string render_table(const std::vector<TableRow>& rows, Format format);
std::string render_werner(double k3_lower, const WernerThresholds& t, Format format);
std::string render_discrete(const DiscreteReport& report, Format format);

/// Minimal SVG number line of the regime partition.
std::string render_werner_svg(const WernerThresholds& t);

}  // namespace kband
