// Command-line front end: wires historical CSV files into the analyses and
// writes reports and charts into a caller-chosen directory.
//
// Subcommands: rolling-vol, validate, thresholds, real-returns.
// Diagnostics go to stderr; data goes to files (or stdout with --stdout).
// Exit status is 0 iff every requested output was written.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "levfund/analysis.hpp"
#include "levfund/chart.hpp"
#include "levfund/csv.hpp"
#include "levfund/market_data.hpp"
#include "levfund/model.hpp"
#include "levfund/report_csv.hpp"

namespace {

using namespace levfund;

struct RunConfig {
    std::string command;
    std::string input;
    std::string out_dir = ".";
    std::string format = "both";  // csv | chart | both
    bool to_stdout = false;

    std::size_t window = 1260;  // rolling window, trading days
    std::size_t stride = 21;

    std::vector<double> leverages = {2.0, 3.0};
    std::vector<std::size_t> horizons = {252, 1260, 2520};

    std::vector<double> inflations = {0.0, 0.01, 0.02, 0.03, 0.04};
    FeePair fees;
    double base_real = kDefaultBaseRealLogReturn;
    double grid_min = 0.005;
    double grid_max = 0.04;
    double grid_step = 0.0005;
};

bool want_csv(const RunConfig& cfg) {
    return cfg.format == "csv" || cfg.format == "both";
}

bool want_chart(const RunConfig& cfg) {
    return cfg.format == "chart" || cfg.format == "both";
}

void write_output(const RunConfig& cfg, const std::string& name,
                  const std::string& content) {
    write_text_file(std::filesystem::path(cfg.out_dir) / name, content);
}

void write_chart(const RunConfig& cfg, const std::string& stem,
                 const ChartDocument& doc) {
    write_output(cfg, stem + ".svg", doc.svg);
    write_output(cfg, stem + "_points.csv", doc.points_csv);
}

std::vector<double> sqrt_v_grid(const RunConfig& cfg) {
    if (!(cfg.grid_min > 0.0) || !(cfg.grid_step > 0.0) || cfg.grid_max < cfg.grid_min) {
        throw std::invalid_argument("grid requires 0 < grid-min <= grid-max and grid-step > 0");
    }
    std::vector<double> grid;
    for (int i = 0;; ++i) {
        const double v = cfg.grid_min + i * cfg.grid_step;
        if (v > cfg.grid_max + cfg.grid_step * 1e-9) break;
        grid.push_back(v);
    }
    return grid;
}

int cmd_rolling_vol(const RunConfig& cfg) {
    const PriceSeries prices = load_daily(cfg.input);
    const ChangeSeries changes = daily_changes(prices);
    const std::vector<Date> dates = change_dates(prices);
    const auto points = rolling_volatility(changes, dates, cfg.window, cfg.stride);

    const std::string csv = rolling_vol_csv(points);
    if (cfg.to_stdout) {
        std::cout << csv;
        return 0;
    }
    if (want_csv(cfg)) write_output(cfg, "rolling_vol.csv", csv);
    if (want_chart(cfg)) {
        ChartSeries series;
        series.name = "sqrt(v), " + std::to_string(cfg.window) + "-day window";
        for (const RollingVolPoint& p : points) {
            series.points.push_back({year_fraction(p.end_date), p.sqrt_mean_sq_change});
        }
        const ChartOptions opts{"Rolling volatility of daily returns", "year",
                                "sqrt(v)"};
        write_chart(cfg, "rolling_vol",
                    render_line_chart(std::span(&series, 1), opts));
    }
    return 0;
}

int cmd_validate(const RunConfig& cfg) {
    const PriceSeries prices = load_daily(cfg.input);
    const ChangeSeries changes = daily_changes(prices);
    const std::vector<Date> dates = change_dates(prices);
    const ValidationResult result = validate_approximation(
        changes, dates, cfg.leverages, cfg.horizons, cfg.stride);

    if (cfg.to_stdout) {
        std::cout << validation_summary_csv(result.summary);
        return 0;
    }
    if (want_csv(cfg)) {
        write_output(cfg, "validate_records.csv", validation_records_csv(result.records));
        write_output(cfg, "validate_skipped.csv", validation_skipped_csv(result.skipped));
        write_output(cfg, "validate_summary.csv", validation_summary_csv(result.summary));
    }
    if (want_chart(cfg)) {
        // One series per (L, n); only disagreeing windows are plotted.
        std::vector<ChartSeries> series;
        for (const ValidationSummary& sum : result.summary) {
            ChartSeries s;
            s.name = "L=" + format_double(sum.leverage) + " n=" +
                     std::to_string(sum.horizon);
            for (const ValidationRecord& rec : result.records) {
                if (rec.leverage != sum.leverage || rec.horizon != sum.horizon ||
                    rec.agree) {
                    continue;
                }
                s.points.push_back({year_fraction(rec.end_date), *rec.err_metric});
            }
            if (!s.points.empty()) series.push_back(std::move(s));
        }
        if (series.empty()) {
            std::cerr << "note: no sign disagreements; skipping validate chart\n";
        } else {
            const ChartOptions opts{"Approximation disagreements", "year",
                                    "log10 max(|exact|, |approx|)"};
            write_chart(cfg, "validate_disagreements",
                        render_line_chart(series, opts));
        }
    }
    return 0;
}

int cmd_thresholds(const RunConfig& cfg) {
    const ThresholdReport report =
        threshold_report(cfg.inflations, cfg.fees, cfg.base_real);
    const std::vector<double> grid = sqrt_v_grid(cfg);
    const LeverageCurves curves =
        optimal_leverage_curves(cfg.inflations, grid, cfg.base_real);

    if (cfg.to_stdout) {
        std::cout << thresholds_csv(report);
        return 0;
    }
    if (want_csv(cfg)) {
        write_output(cfg, "thresholds.csv", thresholds_csv(report));
        write_output(cfg, "optimal_leverage.csv", leverage_curves_csv(curves));
    }
    if (want_chart(cfg)) {
        ChartSeries lower, upper;
        lower.name = "sqrt(v-)";
        upper.name = "sqrt(v+)";
        for (const ThresholdRow& row : report.rows) {
            if (!row.interval) continue;
            lower.points.push_back(
                {row.annual_log_return, std::sqrt(row.interval->v_minus)});
            upper.points.push_back(
                {row.annual_log_return, std::sqrt(row.interval->v_plus)});
        }
        if (lower.points.empty()) {
            std::cerr << "note: dominance interval absent for every inflation rate; "
                         "skipping thresholds chart\n";
        } else {
            std::vector<ChartSeries> bounds{upper, lower};
            const ChartOptions opts{"Dominance bounds on daily volatility",
                                    "annual log-return", "sqrt(v)"};
            write_chart(cfg, "thresholds", render_line_chart(bounds, opts));
        }

        std::vector<ChartSeries> curve_series;
        for (std::size_t row = 0; row < curves.inflations.size(); ++row) {
            ChartSeries s;
            s.name = "inflation " + format_double(curves.inflations[row]);
            for (std::size_t col = 0; col < curves.sqrt_v_grid.size(); ++col) {
                s.points.push_back({curves.sqrt_v_grid[col], curves.values[row][col]});
            }
            curve_series.push_back(std::move(s));
        }
        const ChartOptions opts{"Optimal leverage multiple", "sqrt(v)",
                                "optimal L"};
        write_chart(cfg, "optimal_leverage", render_line_chart(curve_series, opts));
    }
    return 0;
}

int cmd_real_returns(const RunConfig& cfg) {
    const std::vector<AnnualRecord> records = load_annual(cfg.input);
    const RealReturnSeries series = real_returns(records);

    const std::string csv = real_returns_csv(series);
    if (cfg.to_stdout) {
        std::cout << csv;
        return 0;
    }
    if (want_csv(cfg)) {
        write_output(cfg, "real_returns.csv", csv);
        write_output(cfg, "real_returns_summary.csv", real_returns_summary_csv(series));
    }
    if (want_chart(cfg)) {
        ChartSeries s;
        s.name = "cumulative real log-return";
        double cum = 0.0;
        for (std::size_t k = 0; k < series.size(); ++k) {
            cum += series.logs[k];
            s.points.push_back({double(series.start_years[k] + 1), cum});
        }
        const ChartOptions opts{"Cumulative annual real log-returns", "year",
                                "cumulative log-return"};
        write_chart(cfg, "real_returns", render_line_chart(std::span(&s, 1), opts));
    }
    return 0;
}

void add_common_flags(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--out", cfg.out_dir, "Output directory (created if missing)")
        ->capture_default_str();
    cmd->add_option("--format", cfg.format, "Outputs to produce: csv, chart or both")
        ->check(CLI::IsMember({"csv", "chart", "both"}))
        ->capture_default_str();
    cmd->add_flag("--stdout", cfg.to_stdout,
                  "Write the main CSV to standard output instead of files");
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"Analytics for daily-leveraged index funds over historical CSV data"};
    app.require_subcommand(1);

    CLI::App* roll = app.add_subcommand(
        "rolling-vol", "Rolling sqrt(mean squared daily change) over a daily price CSV");
    roll->add_option("--input", cfg.input, "Daily price CSV (header: date,adj_close)")
        ->required();
    roll->add_option("--window", cfg.window, "Rolling window in trading days")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    roll->add_option("--stride", cfg.stride, "Days between window placements")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    add_common_flags(roll, cfg);

    CLI::App* val = app.add_subcommand(
        "validate",
        "Compare exact compounded excess returns with the quadratic approximation");
    val->add_option("--input", cfg.input, "Daily price CSV (header: date,adj_close)")
        ->required();
    val->add_option("--leverages", cfg.leverages, "Leverage multiples to check")
        ->delimiter(',')
        ->capture_default_str();
    val->add_option("--horizons", cfg.horizons, "Window lengths in trading days")
        ->delimiter(',')
        ->capture_default_str();
    val->add_option("--stride", cfg.stride, "Days between window placements")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    add_common_flags(val, cfg);

    CLI::App* thr = app.add_subcommand(
        "thresholds",
        "Dominance bounds on mean squared daily change, per inflation rate");
    thr->add_option("--inflations", cfg.inflations,
                    "Annual inflation rates as decimals (0.02 = 2%)")
        ->delimiter(',')
        ->capture_default_str();
    thr->add_option("--r0", cfg.fees.base, "Annual expense ratio, unleveraged fund")
        ->capture_default_str();
    thr->add_option("--r1", cfg.fees.leveraged, "Annual expense ratio, leveraged fund")
        ->capture_default_str();
    thr->add_option("--base-real", cfg.base_real,
                    "Long-term mean annual real log-return")
        ->capture_default_str();
    thr->add_option("--grid-min", cfg.grid_min, "Smallest sqrt(v) for the curve table")
        ->capture_default_str();
    thr->add_option("--grid-max", cfg.grid_max, "Largest sqrt(v) for the curve table")
        ->capture_default_str();
    thr->add_option("--grid-step", cfg.grid_step, "sqrt(v) grid spacing")
        ->capture_default_str();
    add_common_flags(thr, cfg);

    CLI::App* rr = app.add_subcommand(
        "real-returns",
        "Dividend- and inflation-adjusted annual returns from an annual CSV");
    rr->add_option("--input", cfg.input, "Annual CSV (header: year,P,D,J)")->required();
    add_common_flags(rr, cfg);

    CLI11_PARSE(app, argc, argv);

    try {
        if (!cfg.to_stdout) {
            std::filesystem::create_directories(cfg.out_dir);
        }
        if (roll->parsed()) return cmd_rolling_vol(cfg);
        if (val->parsed()) return cmd_validate(cfg);
        if (thr->parsed()) return cmd_thresholds(cfg);
        if (rr->parsed()) return cmd_real_returns(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
