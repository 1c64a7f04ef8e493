#include "levfund/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "levfund/market_data.hpp"

namespace levfund {

std::vector<Date> change_dates(const PriceSeries& prices) {
    validate_price_series(prices);
    return std::vector<Date>(prices.dates.begin() + 1, prices.dates.end());
}

namespace {

void check_window_args(std::size_t series_len, std::size_t dates_len,
                       std::size_t window, std::size_t stride) {
    if (window < 1 || stride < 1) {
        throw std::invalid_argument("window and stride must be >= 1");
    }
    if (window > series_len) {
        throw std::invalid_argument("window of " + std::to_string(window) +
                                    " days exceeds series length " +
                                    std::to_string(series_len));
    }
    if (dates_len != series_len) {
        throw std::invalid_argument("dates must align with changes: " +
                                    std::to_string(dates_len) + " vs " +
                                    std::to_string(series_len));
    }
}

}  // namespace

std::vector<RollingVolPoint> rolling_volatility(const ChangeSeries& changes,
                                                std::span<const Date> dates,
                                                std::size_t window,
                                                std::size_t stride) {
    check_window_args(changes.size(), dates.size(), window, stride);
    std::vector<RollingVolPoint> points;
    for (std::size_t end = window - 1; end < changes.size(); end += stride) {
        double sq_sum = 0.0;
        for (std::size_t i = end + 1 - window; i <= end; ++i) {
            sq_sum += changes.values[i] * changes.values[i];
        }
        points.push_back(RollingVolPoint{dates[end], std::sqrt(sq_sum / double(window))});
    }
    return points;
}

ValidationResult validate_approximation(const ChangeSeries& changes,
                                        std::span<const Date> dates,
                                        std::span<const double> leverages,
                                        std::span<const std::size_t> horizons,
                                        std::size_t stride) {
    if (leverages.empty() || horizons.empty()) {
        throw std::invalid_argument("need at least one leverage and one horizon");
    }
    for (std::size_t n : horizons) {
        check_window_args(changes.size(), dates.size(), n, stride);
    }

    ValidationResult result;
    for (std::size_t n : horizons) {
        for (std::size_t end = n - 1; end < changes.size(); end += stride) {
            const std::size_t begin = end + 1 - n;
            const std::span<const double> window(changes.values.data() + begin, n);
            const WindowStats stats = window_stats(window);
            const double base_leg = leveraged_log_return(window, 1.0, 0.0);
            for (double leverage : leverages) {
                ValidationRecord rec;
                rec.end_date = dates[end];
                rec.horizon = n;
                rec.leverage = leverage;
                try {
                    rec.exact_diff =
                        leveraged_log_return(window, leverage, 0.0) - base_leg;
                } catch (const WipeoutError& e) {
                    result.skipped.push_back(SkippedWindow{
                        dates[end], n, leverage, begin + e.day_index(), e.what()});
                    continue;
                }
                rec.approx = double(n) * excess_per_day(stats, leverage);
                rec.agree = rec.exact_diff * rec.approx >= 0.0;
                if (!rec.agree) {
                    rec.err_metric = std::log10(
                        std::max(std::abs(rec.exact_diff), std::abs(rec.approx)));
                }
                result.records.push_back(rec);
            }
        }
    }

    for (double leverage : leverages) {
        for (std::size_t n : horizons) {
            ValidationSummary sum;
            sum.leverage = leverage;
            sum.horizon = n;
            for (const ValidationRecord& rec : result.records) {
                if (rec.leverage != leverage || rec.horizon != n) continue;
                ++sum.windows_checked;
                if (!rec.agree) {
                    ++sum.disagreements;
                    if (!sum.max_err_metric || *rec.err_metric > *sum.max_err_metric) {
                        sum.max_err_metric = rec.err_metric;
                    }
                }
            }
            result.summary.push_back(sum);
        }
    }
    return result;
}

ThresholdReport threshold_report(std::span<const double> inflations,
                                 const FeePair& fees, double base_real) {
    validate_fees(fees);
    if (fees.leveraged < fees.base) throw FeeOrderError(fees.base, fees.leveraged);

    ThresholdReport report;
    report.fees = fees;
    report.base_real = base_real;
    for (double inflation : inflations) {
        ThresholdRow row;
        row.inflation = inflation;
        row.annual_log_return = projected_annual_log_return(inflation, base_real);
        row.daily_log_return = row.annual_log_return / kTradingDaysPerYear;
        row.interval = dominance_interval(row.daily_log_return, fees);
        if (row.interval) {
            const double u = row.daily_log_return;
            if (row.interval->v_minus > 0.0) {
                row.optimal_leverage_at_v_minus = u / row.interval->v_minus + 0.5;
            }
            if (row.interval->v_plus > 0.0) {
                row.optimal_leverage_at_v_plus = u / row.interval->v_plus + 0.5;
            }
        }
        report.rows.push_back(row);
    }
    return report;
}

LeverageCurves optimal_leverage_curves(std::span<const double> inflations,
                                       std::span<const double> sqrt_v_grid,
                                       double base_real) {
    for (double s : sqrt_v_grid) {
        if (!(s > 0.0)) {
            throw std::invalid_argument("sqrt(v) grid values must be positive");
        }
    }
    LeverageCurves curves;
    curves.inflations.assign(inflations.begin(), inflations.end());
    std::sort(curves.inflations.begin(), curves.inflations.end(), std::greater<>());
    curves.sqrt_v_grid.assign(sqrt_v_grid.begin(), sqrt_v_grid.end());
    for (double inflation : curves.inflations) {
        const double u = projected_daily_log_return(inflation, base_real);
        std::vector<double> row;
        row.reserve(curves.sqrt_v_grid.size());
        for (double s : curves.sqrt_v_grid) {
            row.push_back(u / (s * s) + 0.5);
        }
        curves.values.push_back(std::move(row));
    }
    return curves;
}

}  // namespace levfund
