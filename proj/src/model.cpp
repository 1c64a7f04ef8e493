#include "levfund/model.hpp"

#include <cmath>
#include <string>

namespace levfund {

namespace {

std::string fmt(double x) {
    return std::to_string(x);
}

}  // namespace

WipeoutError::WipeoutError(std::size_t day_index, double leveraged_change)
    : std::runtime_error("leveraged fund wiped out at day index " +
                         std::to_string(day_index) + " (1 + L*X = " +
                         fmt(1.0 + leveraged_change) + " <= 0)"),
      day_index_(day_index) {}

ZeroVolatilityError::ZeroVolatilityError()
    : std::domain_error("window has zero mean squared change; "
                        "optimal leverage is undefined at v = 0") {}

FeeOrderError::FeeOrderError(double base, double leveraged)
    : std::domain_error("dominance bounds require leveraged fee >= base fee (got base " +
                        fmt(base) + ", leveraged " + fmt(leveraged) + ")") {}

void validate_fee(double annual_fee, double trading_days) {
    if (!(annual_fee >= 0.0) || !(annual_fee < trading_days)) {
        throw std::invalid_argument("annual expense ratio must lie in [0, " +
                                    fmt(trading_days) + "): got " + fmt(annual_fee));
    }
}

void validate_fees(const FeePair& fees, double trading_days) {
    validate_fee(fees.base, trading_days);
    validate_fee(fees.leveraged, trading_days);
}

void validate_price_series(const PriceSeries& prices) {
    if (prices.size() < 2) {
        throw std::invalid_argument("price series needs at least 2 closes, got " +
                                    std::to_string(prices.size()));
    }
    if (prices.dates.size() != prices.closes.size()) {
        throw std::invalid_argument("price series has " +
                                    std::to_string(prices.dates.size()) + " dates for " +
                                    std::to_string(prices.closes.size()) + " closes");
    }
    for (std::size_t i = 0; i < prices.size(); ++i) {
        if (!(prices.closes[i] > 0.0)) {
            throw std::invalid_argument("nonpositive close at index " + std::to_string(i));
        }
        if (i > 0 && !(prices.dates[i - 1] < prices.dates[i])) {
            throw std::invalid_argument("dates not strictly increasing at index " +
                                        std::to_string(i));
        }
    }
}

ChangeSeries daily_changes(const PriceSeries& prices) {
    validate_price_series(prices);
    ChangeSeries out;
    out.values.reserve(prices.size() - 1);
    for (std::size_t i = 0; i + 1 < prices.size(); ++i) {
        out.values.push_back(prices.closes[i + 1] / prices.closes[i] - 1.0);
    }
    return out;
}

double leveraged_log_return(std::span<const double> changes, double leverage,
                            double annual_fee, double trading_days) {
    validate_fee(annual_fee, trading_days);
    double sum = 0.0;
    for (std::size_t i = 0; i < changes.size(); ++i) {
        const double scaled = leverage * changes[i];
        if (scaled <= -1.0) throw WipeoutError(i, scaled);
        sum += std::log1p(scaled);
    }
    // Daily fee factor compounds once per trading day.
    sum += double(changes.size()) * std::log1p(-annual_fee / trading_days);
    return sum;
}

WindowStats window_stats(std::span<const double> changes) {
    if (changes.empty()) throw std::invalid_argument("empty window of daily changes");
    double log_sum = 0.0;
    double sq_sum = 0.0;
    for (std::size_t i = 0; i < changes.size(); ++i) {
        const double x = changes[i];
        if (x <= -1.0) {
            throw std::invalid_argument("daily change <= -1 at index " + std::to_string(i));
        }
        log_sum += std::log1p(x);
        sq_sum += x * x;
    }
    const double n = double(changes.size());
    return WindowStats{changes.size(), log_sum / n, sq_sum / n};
}

double fee_gap(double x, double y, double trading_days) {
    validate_fee(x, trading_days);
    validate_fee(y, trading_days);
    // log((1 - y/td)/(1 - x/td)) without forming the near-1 quotient.
    return std::log1p(-y / trading_days) - std::log1p(-x / trading_days);
}

double quadratic_log_approx(double x) {
    return x - 0.5 * x * x;
}

double excess_per_day(const WindowStats& stats, double leverage) {
    return (leverage - 1.0) *
           (stats.mean_log_return - 0.5 * leverage * stats.mean_sq_change);
}

double approx_total_excess(const WindowStats& stats, double leverage,
                           const FeePair& fees, double trading_days) {
    return double(stats.n) *
           (excess_per_day(stats, leverage) +
            fee_gap(fees.base, fees.leveraged, trading_days));
}

double optimal_leverage(const WindowStats& stats) {
    if (stats.mean_sq_change <= 0.0) throw ZeroVolatilityError();
    return stats.mean_log_return / stats.mean_sq_change + 0.5;
}

double max_excess_per_day(const WindowStats& stats) {
    if (stats.mean_sq_change <= 0.0) throw ZeroVolatilityError();
    const double ratio = stats.mean_log_return / stats.mean_sq_change - 0.5;
    return 0.5 * stats.mean_sq_change * ratio * ratio;
}

std::optional<DominanceInterval> dominance_interval(double mean_log_return,
                                                    const FeePair& fees,
                                                    double trading_days) {
    validate_fees(fees, trading_days);
    if (fees.leveraged < fees.base) throw FeeOrderError(fees.base, fees.leveraged);
    const double gap = fee_gap(fees.leveraged, fees.base, trading_days);
    const double shifted = gap + mean_log_return;
    if (shifted < 0.0) return std::nullopt;
    const double root_gap = std::sqrt(gap);
    const double root_shifted = std::sqrt(shifted);
    const double lo = root_gap - root_shifted;
    const double hi = root_gap + root_shifted;
    return DominanceInterval{2.0 * lo * lo, 2.0 * hi * hi};
}

bool unleveraged_dominates(const WindowStats& stats, const FeePair& fees,
                           double trading_days) {
    validate_fees(fees, trading_days);
    if (fees.leveraged < fees.base) throw FeeOrderError(fees.base, fees.leveraged);
    return max_excess_per_day(stats) <= fee_gap(fees.leveraged, fees.base, trading_days);
}

}  // namespace levfund
