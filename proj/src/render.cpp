#include "kband/render.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace kband {

using ordered_json = nlohmann::ordered_json;

Format parse_format(const std::string& name) {
    if (name == "text") return Format::Text;
    if (name == "csv") return Format::Csv;
    if (name == "json") return Format::Json;
    throw std::invalid_argument("unknown format: " + name +
                                " (expected text, csv or json)");
}

std::string format_double(double x) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.9g", x);
    return buf;
}

namespace {

// key/value lines with the values column aligned
std::string text_block(const std::vector<std::pair<std::string, std::string>>& rows) {
    std::size_t width = 0;
    for (const auto& [key, value] : rows) width = std::max(width, key.size());
    std::string out;
    for (const auto& [key, value] : rows) {
        out += key;
        out.append(width - key.size() + 2, ' ');
        out += value;
        out += '\n';
    }
    return out;
}

std::string csv_line(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += fields[i];
    }
    out += '\n';
    return out;
}

std::string table_line(const std::vector<std::string>& fields,
                       const std::vector<std::size_t>& widths) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += "  ";
        out += fields[i];
        if (i + 1 < fields.size() && fields[i].size() < widths[i])
            out.append(widths[i] - fields[i].size(), ' ');
    }
    out += '\n';
    return out;
}

std::string aligned_table(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> widths;
    for (const auto& row : rows) {
        if (widths.size() < row.size()) widths.resize(row.size(), 0);
        for (std::size_t i = 0; i < row.size(); ++i)
            widths[i] = std::max(widths[i], row[i].size());
    }
    std::string out;
    for (const auto& row : rows) out += table_line(row, widths);
    return out;
}

}  // namespace

std::string render_bound(const BoundReport& report, Format format) {
    switch (format) {
        case Format::Json: {
            ordered_json j;
            j["d"] = report.params.d;
            j["a"] = report.params.a;
            j["b"] = report.params.b;
            j["moment_term"] = report.moment_term;
            j["pair_term"] = report.pair_term;
            j["total"] = report.total;
            j["quad_error"] = report.quad.error_estimate;
            j["evaluations"] = report.quad.evaluations;
            return j.dump(2) + "\n";
        }
        case Format::Csv:
            return csv_line({"d", "a", "b", "moment_term", "pair_term", "total",
                             "quad_error", "evaluations"}) +
                   csv_line({std::to_string(report.params.d),
                             format_double(report.params.a),
                             format_double(report.params.b),
                             format_double(report.moment_term),
                             format_double(report.pair_term),
                             format_double(report.total),
                             format_double(report.quad.error_estimate),
                             std::to_string(report.quad.evaluations)});
        case Format::Text:
            return text_block({
                {"d", std::to_string(report.params.d)},
                {"a", format_double(report.params.a)},
                {"b", format_double(report.params.b)},
                {"moment_term", format_double(report.moment_term)},
                {"pair_term", format_double(report.pair_term)},
                {"total", format_double(report.total)},
                {"quad_error", format_double(report.quad.error_estimate)},
                {"evaluations", std::to_string(report.quad.evaluations)},
            });
    }
    throw std::logic_error("unreachable format");
}

std::string render_optimum(const BandOptimum& optimum, Format format) {
    const BoundReport& r = optimum.report;
    switch (format) {
        case Format::Json: {
            ordered_json j;
            j["d"] = r.params.d;
            j["a_star"] = r.params.a;
            j["b_star"] = r.params.b;
            j["moment_term"] = r.moment_term;
            j["pair_term"] = r.pair_term;
            j["total"] = r.total;
            j["quad_error"] = r.quad.error_estimate;
            j["evaluations"] = r.quad.evaluations;
            j["converged"] = optimum.converged;
            j["trace_size"] = optimum.trace.size();
            return j.dump(2) + "\n";
        }
        case Format::Csv:
            return csv_line({"d", "a_star", "b_star", "moment_term", "pair_term",
                             "total", "quad_error", "evaluations", "converged",
                             "trace_size"}) +
                   csv_line({std::to_string(r.params.d), format_double(r.params.a),
                             format_double(r.params.b), format_double(r.moment_term),
                             format_double(r.pair_term), format_double(r.total),
                             format_double(r.quad.error_estimate),
                             std::to_string(r.quad.evaluations),
                             optimum.converged ? "true" : "false",
                             std::to_string(optimum.trace.size())});
        case Format::Text:
            return text_block({
                {"d", std::to_string(r.params.d)},
                {"a_star", format_double(r.params.a)},
                {"b_star", format_double(r.params.b)},
                {"moment_term", format_double(r.moment_term)},
                {"pair_term", format_double(r.pair_term)},
                {"total", format_double(r.total)},
                {"quad_error", format_double(r.quad.error_estimate)},
                {"evaluations", std::to_string(r.quad.evaluations)},
                {"converged", optimum.converged ? "true" : "false"},
                {"trace_size", std::to_string(optimum.trace.size())},
            });
    }
    throw std::logic_error("unreachable format");
}

std::string render_table(const std::vector<TableRow>& rows, Format format) {
    switch (format) {
        case Format::Json: {
            ordered_json arr = ordered_json::array();
            for (const TableRow& row : rows) {
                ordered_json j;
                j["d"] = row.d;
                j["a_star"] = row.a_star;
                j["b_star"] = row.b_star;
                j["ours"] = row.ours;
                j["bbt"] = row.bbt;
                if (row.vertesi_ref)
                    j["vertesi_ref"] = *row.vertesi_ref;
                else
                    j["vertesi_ref"] = nullptr;
                arr.push_back(std::move(j));
            }
            return arr.dump(2) + "\n";
        }
        case Format::Csv: {
            std::string out =
                csv_line({"d", "a_star", "b_star", "ours", "bbt", "vertesi_ref"});
            for (const TableRow& row : rows)
                out += csv_line({std::to_string(row.d), format_double(row.a_star),
                                 format_double(row.b_star), format_double(row.ours),
                                 format_double(row.bbt),
                                 row.vertesi_ref ? format_double(*row.vertesi_ref)
                                                 : ""});
            return out;
        }
        case Format::Text: {
            std::vector<std::vector<std::string>> cells;
            cells.push_back({"d", "a_star", "b_star", "ours", "bbt", "vertesi_ref"});
            for (const TableRow& row : rows)
                cells.push_back({std::to_string(row.d), format_double(row.a_star),
                                 format_double(row.b_star), format_double(row.ours),
                                 format_double(row.bbt),
                                 row.vertesi_ref ? format_double(*row.vertesi_ref)
                                                 : "-"});
            return aligned_table(cells);
        }
    }
    throw std::logic_error("unreachable format");
}

std::string render_werner(double k3_lower, const WernerThresholds& t, Format format) {
    const auto regimes = regime_partition(t);
    switch (format) {
        case Format::Json: {
            ordered_json j;
            j["k3_lower"] = k3_lower;
            j["thresholds"] = {
                {"separable_max", t.separable_max},
                {"lhv_all_max", t.lhv_all_max},
                {"lhv_projective_max", t.lhv_projective_max},
                {"nonlocal_onset", t.nonlocal_onset},
            };
            ordered_json arr = ordered_json::array();
            for (const Regime& r : regimes) {
                ordered_json seg;
                seg["label"] = to_string(r.label);
                seg["p_lo"] = r.p_lo;
                seg["p_hi"] = r.p_hi;
                arr.push_back(std::move(seg));
            }
            j["regimes"] = std::move(arr);
            return j.dump(2) + "\n";
        }
        case Format::Csv: {
            std::string out = csv_line({"label", "p_lo", "p_hi"});
            for (const Regime& r : regimes)
                out += csv_line({to_string(r.label), format_double(r.p_lo),
                                 format_double(r.p_hi)});
            return out;
        }
        case Format::Text: {
            std::string out = text_block({
                {"k3_lower", format_double(k3_lower)},
                {"nonlocal_onset", format_double(t.nonlocal_onset)},
            });
            out += '\n';
            std::vector<std::vector<std::string>> cells;
            cells.push_back({"label", "p_lo", "p_hi"});
            for (const Regime& r : regimes)
                cells.push_back({to_string(r.label), format_double(r.p_lo),
                                 format_double(r.p_hi)});
            out += aligned_table(cells);
            return out;
        }
    }
    throw std::logic_error("unreachable format");
}

std::string render_discrete(const DiscreteReport& report, Format format) {
    switch (format) {
        case Format::Json: {
            ordered_json j;
            j["d"] = report.d;
            j["n"] = report.n;
            j["iters"] = report.iters;
            j["seed"] = report.seed;
            j["band"] = {{"a", report.band.a}, {"b", report.band.b}};
            j["discrete_value"] = report.discrete_value;
            j["mc_estimate"] = report.mc_estimate;
            j["mc_stderr"] = report.mc_stderr;
            ordered_json arr = ordered_json::array();
            for (const auto& [n, c] : report.brute_force)
                arr.push_back({{"n", n}, {"c", c}});
            j["brute_force"] = std::move(arr);
            return j.dump(2) + "\n";
        }
        case Format::Csv: {
            std::vector<std::string> header{"d",       "n",         "iters",
                                            "seed",    "band_a",    "band_b",
                                            "discrete_value", "mc_estimate",
                                            "mc_stderr"};
            std::vector<std::string> row{
                std::to_string(report.d),          std::to_string(report.n),
                std::to_string(report.iters),      std::to_string(report.seed),
                format_double(report.band.a),      format_double(report.band.b),
                format_double(report.discrete_value),
                format_double(report.mc_estimate), format_double(report.mc_stderr)};
            for (const auto& [n, c] : report.brute_force) {
                header.push_back("bruteforce_c" + std::to_string(n));
                row.push_back(std::to_string(c));
            }
            return csv_line(header) + csv_line(row);
        }
        case Format::Text: {
            std::vector<std::pair<std::string, std::string>> rows{
                {"d", std::to_string(report.d)},
                {"n", std::to_string(report.n)},
                {"iters", std::to_string(report.iters)},
                {"seed", std::to_string(report.seed)},
                {"band_a", format_double(report.band.a)},
                {"band_b", format_double(report.band.b)},
                {"discrete_value", format_double(report.discrete_value)},
                {"mc_estimate", format_double(report.mc_estimate)},
                {"mc_stderr", format_double(report.mc_stderr)},
            };
            for (const auto& [n, c] : report.brute_force)
                rows.push_back({"bruteforce_c" + std::to_string(n), std::to_string(c)});
            return text_block(rows);
        }
    }
    throw std::logic_error("unreachable format");
}

std::string render_werner_svg(const WernerThresholds& t) {
    const auto regimes = regime_partition(t);
    const double x0 = 60.0, x1 = 740.0, y = 70.0;
    auto x_of = [&](double p) { return x0 + p * (x1 - x0); };
    static const char* kColors[] = {"#4daf4a", "#a6d854", "#ffd92f", "#cccccc",
                                    "#e41a1c"};

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"150\" "
           "viewBox=\"0 0 800 150\">\n";
    svg << "  <text x=\"60\" y=\"25\" font-size=\"13\">Werner state regimes over "
           "p</text>\n";
    int ci = 0;
    for (const Regime& r : regimes) {
        svg << "  <rect x=\"" << format_double(x_of(r.p_lo)) << "\" y=\"" << y
            << "\" width=\"" << format_double(x_of(r.p_hi) - x_of(r.p_lo))
            << "\" height=\"22\" fill=\"" << kColors[ci++ % 5] << "\"/>\n";
    }
    for (const Regime& r : regimes) {
        svg << "  <line x1=\"" << format_double(x_of(r.p_hi)) << "\" y1=\"" << y - 8
            << "\" x2=\"" << format_double(x_of(r.p_hi)) << "\" y2=\"" << y + 30
            << "\" stroke=\"black\"/>\n";
        svg << "  <text x=\"" << format_double(x_of(r.p_hi) - 18) << "\" y=\""
            << y - 12 << "\" font-size=\"10\">" << format_double(r.p_hi)
            << "</text>\n";
        svg << "  <text x=\"" << format_double(0.5 * (x_of(r.p_lo) + x_of(r.p_hi)))
            << "\" y=\"" << y + 45 << "\" font-size=\"9\" text-anchor=\"middle\">"
            << to_string(r.label) << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace kband
