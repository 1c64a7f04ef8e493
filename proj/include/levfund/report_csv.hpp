// CSV serialization of the analysis reports. Headers are part of the stable
// interface; numbers are written in shortest round-trip form, so identical
// reports serialize byte-identically.

#pragma once

#include <span>
#include <string>

#include "levfund/analysis.hpp"
#include "levfund/market_data.hpp"

namespace levfund {

// header: end_date,sqrt_v
std::string rolling_vol_csv(std::span<const RollingVolPoint> points);

// header: end_date,n,L,exact_diff,approx,agree,err_metric
// err_metric is empty on agreeing rows.
std::string validation_records_csv(std::span<const ValidationRecord> records);

// header: end_date,n,L,day_index,reason
std::string validation_skipped_csv(std::span<const SkippedWindow> skipped);

// header: L,n,windows,disagreements,max_err_metric
std::string validation_summary_csv(std::span<const ValidationSummary> summary);

// header: inflation,annual_log_return,u,interval_present,v_minus,v_plus,
//         sqrt_v_minus,sqrt_v_plus,optimal_L_at_v_minus,optimal_L_at_v_plus
// Interval columns are empty when the interval is absent.
std::string thresholds_csv(const ThresholdReport& report);

// header: inflation,sqrt_v,optimal_L — rows by inflation descending.
std::string leverage_curves_csv(const LeverageCurves& curves);

// header: year,gross_real_return,log_real_return,cum_log_return
std::string real_returns_csv(const RealReturnSeries& series);

// header: first_year,last_year,years,mean_annual_real_log_return
std::string real_returns_summary_csv(const RealReturnSeries& series);

}  // namespace levfund
