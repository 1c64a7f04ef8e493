// market_data.hpp
//
// Ingestion of local historical data files and the derived series built from
// them: daily changes, annual dividend- and inflation-adjusted returns, and
// long-run log-return projections.
//
// Two CSV schemas are accepted (UTF-8, comma-separated, '.' decimal point,
// LF or CRLF):
//   daily:  header `date,adj_close` minimally; extra columns such as
//           open/high/low/close/volume are ignored, so raw exports from the
//           usual daily-price sources load unmodified. Dates are strict ISO.
//   annual: header `year,P,D,J` where P is the average monthly close, D the
//           dividend per share and J the January consumer price index.
//
// Loaded datasets are immutable and shareable across threads.

#pragma once

#include <filesystem>
#include <vector>

#include "levfund/model.hpp"

namespace levfund {

// One row of the annual dataset.
struct AnnualRecord {
    int year = 0;
    double price = 0.0;     // average monthly close of the index (P)
    double dividend = 0.0;  // dividend per share (D)
    double cpi = 0.0;       // January consumer price index (J)
};

// Gross real return per year plus its natural log. Entry k covers the year
// starting at start_years[k]; length = annual records - 1.
struct RealReturnSeries {
    std::vector<int> start_years;
    std::vector<double> gross;
    std::vector<double> logs;

    std::size_t size() const { return gross.size(); }
};

// Loads a daily bar file into a validated PriceSeries: rows sorted ascending
// by date, duplicate dates rejected, closes positive, at least 2 rows.
// Errors carry the path and the 1-based line number of the offending row.
PriceSeries load_daily(const std::filesystem::path& path);

// Writes a PriceSeries back out in the minimal daily schema. Closes are
// formatted so that a reload reproduces the series bit-exactly.
void save_daily(const std::filesystem::path& path, const PriceSeries& series);

// Loads the annual dataset: validated, ascending, contiguous years.
std::vector<AnnualRecord> load_annual(const std::filesystem::path& path);

// Real return for year k: ((P[k+1] + D[k]) / P[k]) * (J[k] / J[k+1]).
// Throws std::invalid_argument with fewer than 2 records.
RealReturnSeries real_returns(const std::vector<AnnualRecord>& records);

// Mean annual real log-return, i.e. the slope of the linear trend of the
// cumulative log-return sum. Throws std::invalid_argument when empty.
double trend_slope(const RealReturnSeries& series);

// Projected annual log-return for a given long-term inflation rate:
// base_real + log(1 + inflation).
double projected_annual_log_return(double inflation, double base_real);

// The same projection as a mean daily log-return (annual / trading_days).
double projected_daily_log_return(double inflation, double base_real,
                                  double trading_days = kTradingDaysPerYear);

// Default base for the projections: the long-run mean annual real log-return
// observed on the composite index series. A configured input, not recomputed.
inline constexpr double kDefaultBaseRealLogReturn = 0.0658;

}  // namespace levfund
