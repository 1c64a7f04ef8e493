// Unit tests for the closed-form leveraged-fund model. Expected values were
// frozen from an independent high-precision evaluation of the formulas.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "levfund/model.hpp"
#include "test_helpers.hpp"

using namespace levfund;
using doctest::Approx;

namespace {

PriceSeries series_of(std::vector<double> closes) {
    PriceSeries p;
    p.dates = testing::make_dates(closes.size());
    p.closes = std::move(closes);
    return p;
}

double abs_err(double a, double b) {
    return std::abs(a - b);
}

}  // namespace

TEST_CASE("daily_changes") {
    SUBCASE("direct arithmetic") {
        const ChangeSeries c = daily_changes(series_of({100.0, 101.0, 99.99}));
        REQUIRE(c.size() == 2);
        CHECK(abs_err(c.values[0], 0.01) <= 1e-14);
        CHECK(abs_err(c.values[1], -0.01) <= 1e-14);
    }
    SUBCASE("constant price") {
        const ChangeSeries c = daily_changes(series_of({50.0, 50.0}));
        REQUIRE(c.size() == 1);
        CHECK(c.values[0] == 0.0);
    }
    SUBCASE("single step") {
        const ChangeSeries c = daily_changes(series_of({100.0, 102.0}));
        CHECK(abs_err(c.values[0], 0.02) <= 1e-15);
    }
    SUBCASE("too short") {
        CHECK_THROWS_AS(daily_changes(series_of({100.0})), std::invalid_argument);
    }
    SUBCASE("nonpositive close") {
        CHECK_THROWS_AS(daily_changes(series_of({100.0, -1.0, 50.0})),
                        std::invalid_argument);
    }
    SUBCASE("invariant violations") {
        PriceSeries misaligned = series_of({100.0, 101.0});
        misaligned.dates.pop_back();
        CHECK_THROWS_AS(daily_changes(misaligned), std::invalid_argument);

        PriceSeries unordered = series_of({100.0, 101.0, 102.0});
        std::swap(unordered.dates[0], unordered.dates[2]);
        CHECK_THROWS_AS(daily_changes(unordered), std::invalid_argument);
    }
}

TEST_CASE("leveraged_log_return") {
    SUBCASE("product-then-log oracle") {
        const std::vector<double> changes{0.01, -0.01};
        CHECK(abs_err(leveraged_log_return(changes, 2.0, 0.0),
                      -4.000800213397354e-4) <= 1e-9);
    }
    SUBCASE("fee drag only") {
        const std::vector<double> zeros(252, 0.0);
        CHECK(abs_err(leveraged_log_return(zeros, 1.0, 0.0095),
                      -9.500179071960817e-3) <= 1e-8);
    }
    SUBCASE("wipeout is a hard error") {
        const std::vector<double> changes{0.1};
        CHECK_THROWS_AS(leveraged_log_return(changes, -11.0, 0.0), WipeoutError);
        try {
            leveraged_log_return(changes, -11.0, 0.0);
        } catch (const WipeoutError& e) {
            CHECK(e.day_index() == 0);
        }
    }
    SUBCASE("fee out of range") {
        const std::vector<double> changes{0.01};
        CHECK_THROWS_AS(leveraged_log_return(changes, 1.0, -0.1), std::invalid_argument);
        CHECK_THROWS_AS(leveraged_log_return(changes, 1.0, 252.0), std::invalid_argument);
    }
    SUBCASE("matches direct product on random series") {
        std::mt19937_64 rng(7);
        std::normal_distribution<double> normal(1e-4, 0.004);
        for (int rep = 0; rep < 20; ++rep) {
            ChangeSeries c;
            for (int i = 0; i < 400; ++i) c.values.push_back(std::expm1(normal(rng)));
            for (double lev : {-2.0, 0.5, 1.0, 2.0, 3.0}) {
                double product = 1.0;
                for (double x : c.values) product *= 1.0 + lev * x;
                const double direct = std::log(product);
                const double got = leveraged_log_return(c.values, lev, 0.0);
                CHECK(got == Approx(direct).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("window_stats") {
    SUBCASE("two-point window") {
        const std::vector<double> changes{0.01, -0.01};
        const WindowStats s = window_stats(changes);
        CHECK(s.n == 2);
        CHECK(abs_err(s.mean_log_return, -5.000250016667917e-5) <= 1e-10);
        CHECK(s.mean_sq_change == Approx(1.0e-4).epsilon(1e-14));
    }
    SUBCASE("all zeros") {
        const std::vector<double> changes{0.0, 0.0, 0.0};
        const WindowStats s = window_stats(changes);
        CHECK(s.mean_log_return == 0.0);
        CHECK(s.mean_sq_change == 0.0);
    }
    SUBCASE("single element") {
        const std::vector<double> changes{0.02};
        const WindowStats s = window_stats(changes);
        CHECK(s.mean_log_return == Approx(1.980262729617971e-2).epsilon(1e-12));
        CHECK(s.mean_sq_change == Approx(4.0e-4).epsilon(1e-14));
    }
    SUBCASE("empty window") {
        CHECK_THROWS_AS(window_stats(std::span<const double>{}), std::invalid_argument);
    }
    SUBCASE("change at or below -1") {
        const std::vector<double> changes{-1.0};
        CHECK_THROWS_AS(window_stats(changes), std::invalid_argument);
    }
}

TEST_CASE("fee_gap") {
    SUBCASE("typical fee pair") {
        CHECK(abs_err(fee_gap(0.0095, 0.000945), 3.394911627016424e-5) <= 1e-10);
        CHECK(abs_err(fee_gap(0.000945, 0.0095), -3.394911627016424e-5) <= 1e-10);
    }
    SUBCASE("identity") {
        for (double r : {0.0, 0.000945, 0.0095, 1.0}) {
            CHECK(fee_gap(r, r) == 0.0);
        }
    }
    SUBCASE("antisymmetry on random pairs") {
        std::mt19937_64 rng(11);
        std::uniform_real_distribution<double> fee(0.0, 0.05);
        for (int i = 0; i < 1000; ++i) {
            const double x = fee(rng);
            const double y = fee(rng);
            CHECK(std::abs(fee_gap(x, y) + fee_gap(y, x)) <= 1e-15);
        }
    }
    SUBCASE("out of range") {
        CHECK_THROWS_AS(fee_gap(-0.01, 0.0), std::invalid_argument);
        CHECK_THROWS_AS(fee_gap(0.0, 252.0), std::invalid_argument);
    }
}

TEST_CASE("quadratic_log_approx") {
    CHECK(quadratic_log_approx(0.0) == 0.0);
    CHECK(quadratic_log_approx(0.01) == Approx(0.00995).epsilon(1e-15));

    SUBCASE("remainder bound at +-0.05") {
        for (double x : {0.05, -0.05}) {
            const double err = std::abs(std::log1p(x) - quadratic_log_approx(x));
            const double bound = std::abs(x * x * x) / (3.0 * (1.0 - std::abs(x)));
            CHECK(err <= bound);
        }
    }
    SUBCASE("remainder bound for |x| <= 0.1") {
        std::mt19937_64 rng(13);
        std::uniform_real_distribution<double> xs(-0.1, 0.1);
        for (int i = 0; i < 1000; ++i) {
            const double x = xs(rng);
            const double err = std::abs(std::log1p(x) - quadratic_log_approx(x));
            const double bound = std::abs(x * x * x) / (3.0 * (1.0 - std::abs(x)));
            // few ulps of |x| of evaluation noise; dominates the margin as x -> 0
            CHECK(err <= bound + 4.0 * 1.1e-16 * std::abs(x));
        }
    }
}

TEST_CASE("excess_per_day") {
    SUBCASE("unleveraged excess is zero") {
        CHECK(excess_per_day(WindowStats{10, 3e-4, 1e-4}, 1.0) == 0.0);
        CHECK(excess_per_day(WindowStats{10, -2e-4, 5e-5}, 1.0) == 0.0);
    }
    SUBCASE("direct arithmetic") {
        CHECK(excess_per_day(WindowStats{1, 3e-4, 1e-4}, 2.0) ==
              Approx(2e-4).epsilon(1e-12));
        CHECK(excess_per_day(WindowStats{2, -5.000250016667917e-5, 1e-4}, 2.0) ==
              Approx(-1.500025001666792e-4).epsilon(1e-12));
    }
}

TEST_CASE("approx_total_excess") {
    SUBCASE("no leverage, equal fees") {
        CHECK(approx_total_excess(WindowStats{252, 3e-4, 1e-4}, 1.0,
                                  FeePair{0.002, 0.002}) == 0.0);
    }
    SUBCASE("pairs with the exact difference") {
        const std::vector<double> changes{0.01, -0.01};
        const WindowStats s = window_stats(changes);
        const double approx = approx_total_excess(s, 2.0, FeePair{0.0, 0.0});
        CHECK(abs_err(approx, -3.000050003333583e-4) <= 1e-12);
        const double exact = leveraged_log_return(changes, 2.0, 0.0) -
                             leveraged_log_return(changes, 1.0, 0.0);
        CHECK(abs_err(exact, -3.000750210063770e-4) <= 1e-12);
        CHECK(approx * exact > 0.0);  // same sign
    }
    SUBCASE("pure fee differential") {
        const WindowStats flat{252, 0.0, 0.0};
        CHECK(abs_err(approx_total_excess(flat, 3.0, FeePair{0.000945, 0.0095}),
                      -8.555177300081388e-3) <= 1e-7);
    }
}

TEST_CASE("optimal_leverage") {
    SUBCASE("zero-mean window") {
        CHECK(optimal_leverage(WindowStats{5, 0.0, 3e-4}) == 0.5);
    }
    SUBCASE("long-run inputs") {
        CHECK(abs_err(optimal_leverage(WindowStats{252, 0.0658 / 252, 0.0158 * 0.0158}),
                      1.545950613327636) <= 1e-4);
        CHECK(abs_err(optimal_leverage(WindowStats{252, 0.0856 / 252, 1e-4}),
                      3.896825396825397) <= 1e-4);
    }
    SUBCASE("degenerate volatility") {
        CHECK_THROWS_AS(optimal_leverage(WindowStats{5, 1e-4, 0.0}),
                        ZeroVolatilityError);
    }
    SUBCASE("grid search agrees") {
        std::mt19937_64 rng(17);
        std::uniform_real_distribution<double> us(-1e-3, 1e-3);
        for (int rep = 0; rep < 20; ++rep) {
            const double u = us(rng);
            std::uniform_real_distribution<double> vs(std::abs(u) / 8.0 + 1e-6, 1e-3);
            const double v = vs(rng);
            const WindowStats s{252, u, v};
            double best_l = -10.0;
            double best_g = excess_per_day(s, best_l);
            for (double lev = -10.0; lev <= 10.0; lev += 1e-3) {
                const double g = excess_per_day(s, lev);
                if (g > best_g) {
                    best_g = g;
                    best_l = lev;
                }
            }
            CHECK(abs_err(best_l, optimal_leverage(s)) <= 1e-3);
        }
    }
}

TEST_CASE("max_excess_per_day") {
    SUBCASE("vanishes at v = 2u") {
        const double u = 3.7e-4;
        CHECK(max_excess_per_day(WindowStats{10, u, 2.0 * u}) == 0.0);
    }
    SUBCASE("direct arithmetic") {
        CHECK(abs_err(max_excess_per_day(WindowStats{252, 0.0658 / 252, 1e-4}),
                      2.228395061728395e-4) <= 1e-9);
    }
    SUBCASE("equals the excess at the optimal leverage") {
        std::mt19937_64 rng(19);
        std::uniform_real_distribution<double> us(-1e-3, 1e-3);
        std::uniform_real_distribution<double> vs(1e-6, 1e-3);
        for (int i = 0; i < 200; ++i) {
            const WindowStats s{100, us(rng), vs(rng)};
            const double h = max_excess_per_day(s);
            const double g = excess_per_day(s, optimal_leverage(s));
            CHECK(h == Approx(g).epsilon(1e-12));
        }
    }
    SUBCASE("degenerate volatility") {
        CHECK_THROWS_AS(max_excess_per_day(WindowStats{5, 1e-4, 0.0}),
                        ZeroVolatilityError);
    }
    SUBCASE("envelope over all leverage multiples") {
        std::mt19937_64 rng(23);
        std::uniform_real_distribution<double> us(-1e-3, 1e-3);
        std::uniform_real_distribution<double> vs(1e-6, 1e-3);
        for (int i = 0; i < 100; ++i) {
            const WindowStats s{100, us(rng), vs(rng)};
            const double h = max_excess_per_day(s);
            for (double lev = -10.0; lev <= 10.0; lev += 0.05) {
                CHECK(excess_per_day(s, lev) <= h + 1e-15);
            }
        }
    }
    SUBCASE("decreasing below 2|u|, increasing above") {
        for (double u : {4e-4, -4e-4}) {
            const double pivot = 2.0 * std::abs(u);
            auto h_at = [&](double v) { return max_excess_per_day(WindowStats{1, u, v}); };
            for (double frac = 0.1; frac < 0.85; frac += 0.1) {
                CHECK(h_at(frac * pivot) > h_at((frac + 0.1) * pivot));
            }
            for (double mult = 1.0; mult < 8.0; mult += 0.5) {
                CHECK(h_at(pivot * (mult + 0.5)) > h_at(pivot * mult));
            }
        }
    }
}

TEST_CASE("dominance_interval") {
    const double u658 = 0.0658 / 252.0;

    SUBCASE("equal fees collapse the interval to 2u") {
        const auto interval = dominance_interval(u658, FeePair{0.0095, 0.0095});
        REQUIRE(interval.has_value());
        CHECK(interval->v_minus == Approx(5.222222222222222e-4).epsilon(1e-12));
        CHECK(interval->v_plus == Approx(5.222222222222222e-4).epsilon(1e-12));
    }
    SUBCASE("default fees") {
        const auto interval = dominance_interval(u658, FeePair{});
        REQUIRE(interval.has_value());
        CHECK(abs_err(interval->v_minus, 2.576781529360876e-4) <= 1e-8);
        CHECK(abs_err(interval->v_plus, 1.058359221669671e-3) <= 1e-8);
        CHECK(abs_err(std::sqrt(interval->v_minus), 1.605235661627562e-2) <= 1e-6);
        CHECK(abs_err(std::sqrt(interval->v_plus), 3.253243338069980e-2) <= 1e-6);
    }
    SUBCASE("absent when the mean is too negative") {
        const FeePair fees{0.0, 0.0095};
        const double u = -2.0 * fee_gap(fees.leveraged, fees.base);
        CHECK_FALSE(dominance_interval(u, fees).has_value());
    }
    SUBCASE("unsupported fee order") {
        CHECK_THROWS_AS(dominance_interval(u658, FeePair{0.0095, 0.000945}),
                        FeeOrderError);
    }
    SUBCASE("endpoints satisfy h = fee gap, random inputs") {
        std::mt19937_64 rng(29);
        std::uniform_real_distribution<double> us(-1e-4, 1e-3);
        std::uniform_real_distribution<double> base(0.0, 0.01);
        std::uniform_real_distribution<double> extra(1e-4, 0.01);
        for (int i = 0; i < 500; ++i) {
            FeePair fees;
            fees.base = base(rng);
            fees.leveraged = fees.base + extra(rng);
            const double u = us(rng);
            const double gap = fee_gap(fees.leveraged, fees.base);
            const auto interval = dominance_interval(u, fees);
            if (!interval) {
                CHECK(gap + u < 0.0);
                continue;
            }
            auto h_at = [&](double v) { return max_excess_per_day(WindowStats{1, u, v}); };
            CHECK(h_at(interval->v_minus) == Approx(gap).epsilon(1e-12));
            CHECK(h_at(interval->v_plus) == Approx(gap).epsilon(1e-12));
            // strictly below the gap inside, strictly above outside
            const double mid = 0.5 * (interval->v_minus + interval->v_plus);
            CHECK(h_at(mid) < gap);
            if (interval->v_minus > 0.0) CHECK(h_at(interval->v_minus / 2.0) > gap);
            CHECK(h_at(2.0 * interval->v_plus) > gap);
        }
    }
}

TEST_CASE("unleveraged_dominates") {
    const double u658 = 0.0658 / 252.0;
    SUBCASE("inside and outside the default-fee interval") {
        CHECK(unleveraged_dominates(WindowStats{252, u658, 0.02 * 0.02}, FeePair{}));
        CHECK_FALSE(
            unleveraged_dominates(WindowStats{252, u658, 0.01 * 0.01}, FeePair{}));
    }
    SUBCASE("boundary with equal fees") {
        const double u = 2.61111e-4;
        CHECK(unleveraged_dominates(WindowStats{252, u, 2.0 * u},
                                    FeePair{0.0095, 0.0095}));
    }
    SUBCASE("matches interval membership") {
        std::mt19937_64 rng(31);
        std::uniform_real_distribution<double> us(-1e-4, 1e-3);
        std::uniform_real_distribution<double> vs(1e-6, 2e-3);
        std::uniform_real_distribution<double> base(0.0, 0.01);
        std::uniform_real_distribution<double> extra(0.0, 0.01);
        for (int i = 0; i < 1000; ++i) {
            FeePair fees;
            fees.base = base(rng);
            fees.leveraged = fees.base + extra(rng);
            const double u = us(rng);
            const double v = vs(rng);
            const auto interval = dominance_interval(u, fees);
            const bool member =
                interval && v >= interval->v_minus && v <= interval->v_plus;
            CHECK(unleveraged_dominates(WindowStats{1, u, v}, fees) == member);
        }
    }
    SUBCASE("propagates zero volatility") {
        CHECK_THROWS_AS(unleveraged_dominates(WindowStats{1, 1e-4, 0.0}, FeePair{}),
                        ZeroVolatilityError);
    }
}

TEST_CASE("sign agreement whenever the approximation clears the remainder bound") {
    std::mt19937_64 rng(37);
    std::normal_distribution<double> normal(2e-4, 0.012);
    std::uniform_int_distribution<int> len(5, 300);
    int checked = 0;
    for (int rep = 0; rep < 300; ++rep) {
        ChangeSeries c;
        const int n = len(rng);
        for (int i = 0; i < n; ++i) c.values.push_back(std::expm1(normal(rng)));
        for (double lev : {-1.0, 2.0, 3.0}) {
            const double bound = testing::cumulative_remainder_bound(c, lev);
            const WindowStats s = window_stats(c.values);
            const double approx = approx_total_excess(s, lev, FeePair{0.0, 0.0});
            if (std::abs(approx) <= bound) continue;
            const double exact = leveraged_log_return(c.values, lev, 0.0) -
                                 leveraged_log_return(c.values, 1.0, 0.0);
            CHECK(approx * exact > 0.0);
            ++checked;
        }
    }
    CHECK(checked > 100);  // the guard must actually exercise the claim
}

TEST_CASE("log-return at L=1 with no fee equals n times the mean log-return") {
    std::mt19937_64 rng(41);
    std::normal_distribution<double> normal(1e-4, 0.01);
    for (int rep = 0; rep < 50; ++rep) {
        ChangeSeries c;
        for (int i = 0; i < 500; ++i) c.values.push_back(std::expm1(normal(rng)));
        const WindowStats s = window_stats(c.values);
        const double direct = leveraged_log_return(c.values, 1.0, 0.0);
        CHECK(direct == Approx(double(s.n) * s.mean_log_return).epsilon(1e-12));
    }
}
