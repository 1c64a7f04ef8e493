// analysis.hpp
//
// Windowed sweeps over historical daily changes and the summary reports built
// on the closed-form model: rolling realized volatility, the empirical check
// of the quadratic excess approximation against exact compounding, dominance
// thresholds per inflation rate, and optimal-leverage curve tables.
//
// Window placements are independent; results are ordered deterministically by
// window-end date.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "levfund/model.hpp"

namespace levfund {

// Dates aligned with a change series: entry i is the date of the later close
// of change i, i.e. prices.dates[i + 1].
std::vector<Date> change_dates(const PriceSeries& prices);

// ----------------------------------------------------------------------------
// Rolling realized volatility
// ----------------------------------------------------------------------------

// sqrt(mean squared daily change) over one trailing window.
struct RollingVolPoint {
    Date end_date;
    double sqrt_mean_sq_change = 0.0;
};

// One point per window placement: ends at window-1, window-1+stride, ...
// Requires 1 <= window <= changes.size(), stride >= 1, and dates aligned with
// the changes. Each point is computed from its own window only.
std::vector<RollingVolPoint> rolling_volatility(const ChangeSeries& changes,
                                                std::span<const Date> dates,
                                                std::size_t window,
                                                std::size_t stride);

// ----------------------------------------------------------------------------
// Approximation validation (exact compounding vs. quadratic excess)
// ----------------------------------------------------------------------------

// One window placement and leverage multiple, fees fixed at zero on both
// legs. agree is false only on strict sign opposition (a zero product counts
// as agreement); err_metric = log10(max(|exact|, |approx|)) is recorded only
// for disagreements.
struct ValidationRecord {
    Date end_date;
    std::size_t horizon = 0;  // window length n in trading days
    double leverage = 0.0;
    double exact_diff = 0.0;  // exact leveraged minus unleveraged log-return
    double approx = 0.0;      // n * excess_per_day
    bool agree = true;
    std::optional<double> err_metric;
};

// A window skipped because some day wiped the leveraged fund out.
struct SkippedWindow {
    Date end_date;
    std::size_t horizon = 0;
    double leverage = 0.0;
    std::size_t day_index = 0;  // index into the full change series
    std::string reason;
};

struct ValidationSummary {
    double leverage = 0.0;
    std::size_t horizon = 0;
    std::size_t windows_checked = 0;
    std::size_t disagreements = 0;
    std::optional<double> max_err_metric;
};

struct ValidationResult {
    std::vector<ValidationRecord> records;
    std::vector<SkippedWindow> skipped;
    std::vector<ValidationSummary> summary;  // one row per (leverage, horizon)
};

// Sweeps every horizon in `horizons` across the series at the given stride
// and compares the exact compounded excess with the quadratic approximation
// for every leverage multiple in `leverages`.
ValidationResult validate_approximation(const ChangeSeries& changes,
                                        std::span<const Date> dates,
                                        std::span<const double> leverages,
                                        std::span<const std::size_t> horizons,
                                        std::size_t stride);

// ----------------------------------------------------------------------------
// Dominance thresholds and optimal-leverage curves
// ----------------------------------------------------------------------------

// Dominance bounds for one long-term inflation assumption. The optimal
// leverage columns are evaluated at the interval endpoints.
struct ThresholdRow {
    double inflation = 0.0;
    double annual_log_return = 0.0;
    double daily_log_return = 0.0;
    std::optional<DominanceInterval> interval;
    std::optional<double> optimal_leverage_at_v_minus;
    std::optional<double> optimal_leverage_at_v_plus;
};

struct ThresholdReport {
    FeePair fees;
    double base_real = 0.0;
    std::vector<ThresholdRow> rows;  // in the input inflation order
};

ThresholdReport threshold_report(std::span<const double> inflations,
                                 const FeePair& fees, double base_real);

// Optimal leverage multiple per (inflation, sqrt(v)) grid cell. Rows are
// ordered by inflation descending so that row order matches the top-to-bottom
// order of the plotted curves.
struct LeverageCurves {
    std::vector<double> inflations;           // descending
    std::vector<double> sqrt_v_grid;          // as supplied
    std::vector<std::vector<double>> values;  // values[row][col]
};

LeverageCurves optimal_leverage_curves(std::span<const double> inflations,
                                       std::span<const double> sqrt_v_grid,
                                       double base_real);

}  // namespace levfund
