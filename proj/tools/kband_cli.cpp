// kband: lower bounds for Grothendieck constants K(d) from spherical band
// measures, with discrete cross-checks and Werner-state threshold reports.

#include "kband/bound.hpp"
#include "kband/discrete.hpp"
#include "kband/opt.hpp"
#include "kband/render.hpp"
#include "kband/werner.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBudget = 2;

struct Options {
    int d = 3;
    int d_min = 3;
    int d_max = 9;
    double a = 0.0;
    double b = 0.0;
    double rel_tol = 1e-8;
    std::uint64_t seed = 42;
    std::int64_t samples = 1000;
    int iters = 500;
    std::int64_t budget = 5000;
    int grid = 64;
    double k3 = 1.41758;
    std::string format = "text";
    std::string out_path;
    std::string svg_path;
};

int write_output(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        return kExitOk;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output path: " << out_path << "\n";
        return kExitUsage;
    }
    out << payload;
    return out ? kExitOk : kExitUsage;
}

int run_bound(const Options& opt) {
    const kband::BoundReport report =
        kband::lower_bound({opt.d, opt.a, opt.b}, opt.rel_tol);
    return write_output(kband::render_bound(report, kband::parse_format(opt.format)),
                        opt.out_path);
}

int run_optimize(const Options& opt) {
    const kband::BandOptimum optimum =
        kband::optimize_band(opt.d, opt.grid, opt.budget, opt.rel_tol);
    const int status = write_output(
        kband::render_optimum(optimum, kband::parse_format(opt.format)),
        opt.out_path);
    if (status != kExitOk) return status;
    if (!optimum.converged) {
        std::cerr << "warning: optimizer budget exhausted before convergence\n";
        return kExitBudget;
    }
    return kExitOk;
}

int run_table(const Options& opt) {
    const auto rows =
        kband::sweep_table(opt.d_min, opt.d_max, opt.rel_tol, opt.grid, opt.budget);
    return write_output(kband::render_table(rows, kband::parse_format(opt.format)),
                        opt.out_path);
}

int run_discrete(const Options& opt) {
    auto [config, value] = kband::optimize_config(
        opt.d, static_cast<int>(opt.samples), opt.seed, opt.iters);

    // The MC estimate runs on the band used to seed the search unless the
    // caller pinned one with --a/--b.
    kband::BandParams band{opt.d, opt.a, opt.b};
    if (!(opt.b > opt.a)) {
        const kband::BandOptimum seed_opt = kband::optimize_band(opt.d, 16, 400, 1e-4);
        band = seed_opt.params;
    }
    auto [mc, mc_err] = kband::mc_band_estimate(
        band, std::max<std::int64_t>(opt.samples, 2), opt.seed);

    kband::DiscreteReport report;
    report.d = opt.d;
    report.n = static_cast<int>(opt.samples);
    report.iters = opt.iters;
    report.seed = opt.seed;
    report.band = band;
    report.discrete_value = value;
    report.mc_estimate = mc;
    report.mc_stderr = mc_err;
    for (int n = 1; n <= 4; ++n)
        report.brute_force.emplace_back(n, kband::vertesi_C_bruteforce(n));

    return write_output(
        kband::render_discrete(report, kband::parse_format(opt.format)),
        opt.out_path);
}

int run_werner(const Options& opt) {
    const kband::WernerThresholds t = kband::thresholds(opt.k3);
    const int status = write_output(
        kband::render_werner(opt.k3, t, kband::parse_format(opt.format)),
        opt.out_path);
    if (status != kExitOk) return status;
    if (!opt.svg_path.empty()) {
        std::ofstream svg(opt.svg_path, std::ios::binary);
        if (!svg) {
            std::cerr << "error: cannot open svg path: " << opt.svg_path << "\n";
            return kExitUsage;
        }
        svg << kband::render_werner_svg(t);
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"kband: Grothendieck constant lower bounds from spherical bands"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--rel-tol", opt.rel_tol, "quadrature relative tolerance")
            ->check(CLI::Range(1e-15, 1e-2));
        cmd->add_option("--format", opt.format, "output format: text, csv or json")
            ->check(CLI::IsMember({"text", "csv", "json"}));
        cmd->add_option("--out", opt.out_path, "write output to this path");
        cmd->add_option("--seed", opt.seed, "RNG seed");
    };

    CLI::App* bound = app.add_subcommand("bound", "evaluate the bound at one band");
    bound->add_option("--d", opt.d, "dimension")->required();
    bound->add_option("--a", opt.a, "lower colatitude edge (radians)");
    bound->add_option("--b", opt.b, "upper colatitude edge (radians)")->required();
    add_common(bound);

    CLI::App* optimize = app.add_subcommand("optimize", "maximize the bound over bands");
    optimize->add_option("--d", opt.d, "dimension")->required();
    optimize->add_option("--grid", opt.grid, "coarse scan resolution");
    optimize->add_option("--budget", opt.budget, "bound evaluation budget");
    add_common(optimize);

    CLI::App* table = app.add_subcommand("table", "sweep d and compare baselines");
    table->add_option("--d-min", opt.d_min, "first dimension");
    table->add_option("--d-max", opt.d_max, "last dimension");
    table->add_option("--grid", opt.grid, "coarse scan resolution");
    table->add_option("--budget", opt.budget, "bound evaluation budget per row");
    add_common(table);

    CLI::App* discrete =
        app.add_subcommand("discrete", "point-configuration search and MC checks");
    discrete->add_option("--d", opt.d, "dimension")->required();
    discrete->add_option("--samples", opt.samples, "points / MC sample count");
    discrete->add_option("--iters", opt.iters, "gradient ascent iterations");
    discrete->add_option("--a", opt.a, "band lower edge for the MC estimate");
    discrete->add_option("--b", opt.b, "band upper edge for the MC estimate");
    add_common(discrete);

    CLI::App* werner = app.add_subcommand("werner", "Werner-state threshold report");
    werner->add_option("--k3", opt.k3, "K(3) lower bound to convert");
    werner->add_option("--svg", opt.svg_path, "also write an SVG number line");
    add_common(werner);

    CLI11_PARSE(app, argc, argv);

    try {
        if (bound->parsed()) return run_bound(opt);
        if (optimize->parsed()) return run_optimize(opt);
        if (table->parsed()) return run_table(opt);
        if (discrete->parsed()) return run_discrete(opt);
        if (werner->parsed()) return run_werner(opt);
    } catch (const kband::BudgetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
