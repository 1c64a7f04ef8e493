#include "levfund/report_csv.hpp"

#include <cmath>

#include "levfund/csv.hpp"

namespace levfund {

namespace {

const char* bool_str(bool b) {
    return b ? "true" : "false";
}

}  // namespace

std::string rolling_vol_csv(std::span<const RollingVolPoint> points) {
    std::string out = "end_date,sqrt_v\n";
    for (const RollingVolPoint& p : points) {
        out += to_string(p.end_date) + "," + format_double(p.sqrt_mean_sq_change) + "\n";
    }
    return out;
}

std::string validation_records_csv(std::span<const ValidationRecord> records) {
    std::string out = "end_date,n,L,exact_diff,approx,agree,err_metric\n";
    for (const ValidationRecord& r : records) {
        out += to_string(r.end_date) + "," + std::to_string(r.horizon) + "," +
               format_double(r.leverage) + "," + format_double(r.exact_diff) + "," +
               format_double(r.approx) + "," + bool_str(r.agree) + ",";
        if (r.err_metric) out += format_double(*r.err_metric);
        out += "\n";
    }
    return out;
}

std::string validation_skipped_csv(std::span<const SkippedWindow> skipped) {
    std::string out = "end_date,n,L,day_index,reason\n";
    for (const SkippedWindow& s : skipped) {
        out += to_string(s.end_date) + "," + std::to_string(s.horizon) + "," +
               format_double(s.leverage) + "," + std::to_string(s.day_index) + "," +
               s.reason + "\n";
    }
    return out;
}

std::string validation_summary_csv(std::span<const ValidationSummary> summary) {
    std::string out = "L,n,windows,disagreements,max_err_metric\n";
    for (const ValidationSummary& s : summary) {
        out += format_double(s.leverage) + "," + std::to_string(s.horizon) + "," +
               std::to_string(s.windows_checked) + "," +
               std::to_string(s.disagreements) + ",";
        if (s.max_err_metric) out += format_double(*s.max_err_metric);
        out += "\n";
    }
    return out;
}

std::string thresholds_csv(const ThresholdReport& report) {
    std::string out =
        "inflation,annual_log_return,u,interval_present,v_minus,v_plus,"
        "sqrt_v_minus,sqrt_v_plus,optimal_L_at_v_minus,optimal_L_at_v_plus\n";
    for (const ThresholdRow& row : report.rows) {
        out += format_double(row.inflation) + "," +
               format_double(row.annual_log_return) + "," +
               format_double(row.daily_log_return) + "," +
               bool_str(row.interval.has_value()) + ",";
        if (row.interval) {
            out += format_double(row.interval->v_minus) + "," +
                   format_double(row.interval->v_plus) + "," +
                   format_double(std::sqrt(row.interval->v_minus)) + "," +
                   format_double(std::sqrt(row.interval->v_plus)) + ",";
            out += row.optimal_leverage_at_v_minus
                       ? format_double(*row.optimal_leverage_at_v_minus)
                       : std::string();
            out += ",";
            out += row.optimal_leverage_at_v_plus
                       ? format_double(*row.optimal_leverage_at_v_plus)
                       : std::string();
        } else {
            out += ",,,,,";
        }
        out += "\n";
    }
    return out;
}

std::string leverage_curves_csv(const LeverageCurves& curves) {
    std::string out = "inflation,sqrt_v,optimal_L\n";
    for (std::size_t row = 0; row < curves.inflations.size(); ++row) {
        for (std::size_t col = 0; col < curves.sqrt_v_grid.size(); ++col) {
            out += format_double(curves.inflations[row]) + "," +
                   format_double(curves.sqrt_v_grid[col]) + "," +
                   format_double(curves.values[row][col]) + "\n";
        }
    }
    return out;
}

std::string real_returns_csv(const RealReturnSeries& series) {
    std::string out = "year,gross_real_return,log_real_return,cum_log_return\n";
    double cum = 0.0;
    for (std::size_t k = 0; k < series.size(); ++k) {
        cum += series.logs[k];
        out += std::to_string(series.start_years[k]) + "," +
               format_double(series.gross[k]) + "," + format_double(series.logs[k]) +
               "," + format_double(cum) + "\n";
    }
    return out;
}

std::string real_returns_summary_csv(const RealReturnSeries& series) {
    std::string out = "first_year,last_year,years,mean_annual_real_log_return\n";
    if (series.size() > 0) {
        out += std::to_string(series.start_years.front()) + "," +
               std::to_string(series.start_years.back() + 1) + "," +
               std::to_string(series.size()) + "," +
               format_double(trend_slope(series)) + "\n";
    }
    return out;
}

}  // namespace levfund
