// model.hpp
//
// Closed-form model of daily-leveraged index funds: compounded fee-adjusted
// log-returns, the quadratic approximation of the excess log-return of a
// leveraged fund over its unleveraged counterpart, and the interval of mean
// squared daily change where no leverage multiple wins net of fees.
//
// All functions are pure; types are immutable value types. Safe to call
// concurrently from any number of threads.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "levfund/date.hpp"

namespace levfund {

// Trading-day count used to convert annual expense ratios and annual
// log-returns to daily ones. Overridable per call for sensitivity runs.
inline constexpr double kTradingDaysPerYear = 252.0;

// ============================================================================
// Domain types
// ============================================================================

// Dated sequence of adjusted closing prices for one index.
// Invariants: length >= 2, dates strictly increasing, every close > 0.
struct PriceSeries {
    std::vector<Date> dates;
    std::vector<double> closes;

    std::size_t size() const { return closes.size(); }
};

// Daily fractional changes X[i] = close[i+1]/close[i] - 1.
// Every change > -1 since closes are positive.
struct ChangeSeries {
    std::vector<double> values;

    std::size_t size() const { return values.size(); }
    std::span<const double> span() const { return values; }
};

// Summary of a contiguous window of daily changes:
//   n                trading-day count
//   mean_log_return  mean of log(1 + X[i])   (per-day drift)
//   mean_sq_change   mean of X[i]^2          (squared daily volatility)
struct WindowStats {
    std::size_t n = 0;
    double mean_log_return = 0.0;
    double mean_sq_change = 0.0;
};

// Annual expense ratios: base fund vs. leveraged fund, as decimal fractions
// per year. Both must satisfy 0 <= r < trading_days so the daily fee factor
// 1 - r/trading_days stays positive.
struct FeePair {
    double base = 0.000945;       // typical unleveraged S&P 500 ETF
    double leveraged = 0.0095;    // typical daily leveraged S&P 500 ETF
};

// Interval [v_minus, v_plus] of mean squared daily change where no daily
// leverage multiple beats the unleveraged fund net of fees.
struct DominanceInterval {
    double v_minus = 0.0;
    double v_plus = 0.0;
};

// ============================================================================
// Errors
// ============================================================================

// A day where 1 + leverage * change <= 0: the leveraged fund is wiped out and
// the compounding model is undefined. Never clamped.
class WipeoutError : public std::runtime_error {
public:
    WipeoutError(std::size_t day_index, double leveraged_change);
    std::size_t day_index() const { return day_index_; }

private:
    std::size_t day_index_;
};

// Window with v = 0 (all changes zero): the optimal-leverage formulas divide
// by v, so these inputs are rejected rather than producing infinities.
class ZeroVolatilityError : public std::domain_error {
public:
    ZeroVolatilityError();
};

// Dominance bounds are only derived for leveraged fee >= base fee.
class FeeOrderError : public std::domain_error {
public:
    FeeOrderError(double base, double leveraged);
};

// ============================================================================
// Operations
// ============================================================================

// Full invariant check: at least 2 closes, dates aligned with closes and
// strictly increasing, every close positive. Throws std::invalid_argument.
void validate_price_series(const PriceSeries& prices);

// Daily fractional changes from a price series (length = prices - 1).
// Throws std::invalid_argument when the series violates its invariants.
ChangeSeries daily_changes(const PriceSeries& prices);

// Compounded log-return of the daily leveraged fund over the window:
//   sum(log(1 + leverage * X[i])) + n * log(1 - annual_fee/trading_days).
// Throws WipeoutError if any 1 + leverage * X[i] <= 0.
double leveraged_log_return(std::span<const double> changes, double leverage,
                            double annual_fee,
                            double trading_days = kTradingDaysPerYear);

// Window summary (n, mean log-return, mean squared change).
// Throws std::invalid_argument on an empty window or a change <= -1.
WindowStats window_stats(std::span<const double> changes);

// Per-day log fee differential log((1 - y/td)/(1 - x/td)). Antisymmetric:
// fee_gap(x, y) == -fee_gap(y, x). Positive when x (the fund whose fee is
// subtracted against) is the more expensive one.
double fee_gap(double x, double y, double trading_days = kTradingDaysPerYear);

// Second-order expansion of log(1 + x): x - x^2/2.
double quadratic_log_approx(double x);

// Per-day approximate excess log-return of the leveraged fund over the
// unleveraged one, before fees: (L - 1) * (u - L*v/2).
double excess_per_day(const WindowStats& stats, double leverage);

// Total approximate fee-adjusted excess over the window:
//   n * (excess_per_day + fee_gap(base, leveraged)).
double approx_total_excess(const WindowStats& stats, double leverage,
                           const FeePair& fees,
                           double trading_days = kTradingDaysPerYear);

// Leverage multiple maximizing excess_per_day: u/v + 1/2.
// Throws ZeroVolatilityError when v == 0.
double optimal_leverage(const WindowStats& stats);

// Value of excess_per_day at the optimal leverage: (v/2) * (u/v - 1/2)^2.
// This is the best any leverage multiple can do at the given (u, v).
// Throws ZeroVolatilityError when v == 0.
double max_excess_per_day(const WindowStats& stats);

// The interval of v where the maximal excess stays below the fee gap, i.e.
// where the unleveraged fund dominates every leverage multiple:
//   v_pm = 2 * (sqrt(f) +- sqrt(f + u))^2,  f = fee_gap(leveraged, base).
// Returns nullopt when f + u < 0, in which case the maximal excess exceeds
// the fee gap for every v > 0 and no such interval exists.
// Throws FeeOrderError when leveraged fee < base fee.
std::optional<DominanceInterval> dominance_interval(
    double mean_log_return, const FeePair& fees,
    double trading_days = kTradingDaysPerYear);

// True iff no leverage multiple beats the unleveraged fund at these window
// statistics net of fees: max_excess_per_day(stats) <= fee gap. Equivalent to
// v lying inside the dominance interval when that interval exists.
bool unleveraged_dominates(const WindowStats& stats, const FeePair& fees,
                           double trading_days = kTradingDaysPerYear);

// Fee preconditions shared by the functions above; throws on violation.
void validate_fee(double annual_fee, double trading_days = kTradingDaysPerYear);
void validate_fees(const FeePair& fees, double trading_days = kTradingDaysPerYear);

}  // namespace levfund
