#include "levfund/market_data.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "levfund/csv.hpp"

namespace levfund {

namespace {

[[noreturn]] void fail_row(const std::filesystem::path& path, int line_no,
                           const std::string& what) {
    throw std::runtime_error(path.string() + ":" + std::to_string(line_no) + ": " + what);
}

}  // namespace

PriceSeries load_daily(const std::filesystem::path& path) {
    const CsvFile csv = read_csv(path);
    const int date_col = csv.column("date");
    const int close_col = csv.column("adj_close") >= 0 ? csv.column("adj_close")
                                                       : csv.column("adjclose");
    if (date_col < 0 || close_col < 0) {
        throw std::runtime_error(path.string() +
                                 ": header must contain 'date' and 'adj_close' columns");
    }

    struct Bar {
        Date date;
        double close;
        int line_no;
    };
    std::vector<Bar> bars;
    bars.reserve(csv.rows.size());
    for (const CsvRow& row : csv.rows) {
        if (int(row.fields.size()) <= std::max(date_col, close_col)) {
            fail_row(path, row.line_no, "too few columns");
        }
        Bar bar;
        bar.line_no = row.line_no;
        try {
            bar.date = parse_date(row.fields[std::size_t(date_col)]);
            bar.close = parse_double_field(row.fields[std::size_t(close_col)]);
        } catch (const std::exception& e) {
            fail_row(path, row.line_no, e.what());
        }
        if (!(bar.close > 0.0)) {
            fail_row(path, row.line_no,
                     "nonpositive adjusted close: " + format_double(bar.close));
        }
        bars.push_back(bar);
    }
    if (bars.size() < 2) {
        throw std::runtime_error(path.string() + ": need at least 2 data rows, got " +
                                 std::to_string(bars.size()));
    }

    std::stable_sort(bars.begin(), bars.end(),
                     [](const Bar& a, const Bar& b) { return a.date < b.date; });
    for (std::size_t i = 0; i + 1 < bars.size(); ++i) {
        if (bars[i].date == bars[i + 1].date) {
            fail_row(path, bars[i + 1].line_no,
                     "duplicate date " + to_string(bars[i + 1].date));
        }
    }

    PriceSeries out;
    out.dates.reserve(bars.size());
    out.closes.reserve(bars.size());
    for (const Bar& bar : bars) {
        out.dates.push_back(bar.date);
        out.closes.push_back(bar.close);
    }
    return out;
}

void save_daily(const std::filesystem::path& path, const PriceSeries& series) {
    std::string text = "date,adj_close\n";
    for (std::size_t i = 0; i < series.size(); ++i) {
        text += to_string(series.dates[i]);
        text += ',';
        text += format_double(series.closes[i]);
        text += '\n';
    }
    write_text_file(path, text);
}

std::vector<AnnualRecord> load_annual(const std::filesystem::path& path) {
    const CsvFile csv = read_csv(path);
    const int year_col = csv.column("year");
    const int p_col = csv.column("p");
    const int d_col = csv.column("d");
    const int j_col = csv.column("j");
    if (year_col < 0 || p_col < 0 || d_col < 0 || j_col < 0) {
        throw std::runtime_error(path.string() + ": header must be 'year,P,D,J'");
    }

    std::vector<AnnualRecord> records;
    std::vector<int> line_nos;
    records.reserve(csv.rows.size());
    for (const CsvRow& row : csv.rows) {
        const int max_col = std::max(std::max(year_col, p_col), std::max(d_col, j_col));
        if (int(row.fields.size()) <= max_col) fail_row(path, row.line_no, "too few columns");
        AnnualRecord rec;
        try {
            rec.year = int(parse_int_field(row.fields[std::size_t(year_col)]));
            rec.price = parse_double_field(row.fields[std::size_t(p_col)]);
            rec.dividend = parse_double_field(row.fields[std::size_t(d_col)]);
            rec.cpi = parse_double_field(row.fields[std::size_t(j_col)]);
        } catch (const std::exception& e) {
            fail_row(path, row.line_no, e.what());
        }
        if (!(rec.price > 0.0)) fail_row(path, row.line_no, "nonpositive P");
        if (!(rec.dividend >= 0.0)) fail_row(path, row.line_no, "negative D");
        if (!(rec.cpi > 0.0)) fail_row(path, row.line_no, "nonpositive J");
        records.push_back(rec);
        line_nos.push_back(row.line_no);
    }
    if (records.empty()) {
        throw std::runtime_error(path.string() + ": no data rows");
    }

    std::vector<std::size_t> order(records.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return records[a].year < records[b].year;
    });
    std::vector<AnnualRecord> sorted;
    sorted.reserve(records.size());
    for (std::size_t idx : order) sorted.push_back(records[idx]);
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
        if (sorted[i + 1].year != sorted[i].year + 1) {
            throw std::runtime_error(
                path.string() + ": years must be contiguous; gap or duplicate between " +
                std::to_string(sorted[i].year) + " and " + std::to_string(sorted[i + 1].year));
        }
    }
    return sorted;
}

RealReturnSeries real_returns(const std::vector<AnnualRecord>& records) {
    if (records.size() < 2) {
        throw std::invalid_argument("real returns need at least 2 annual records, got " +
                                    std::to_string(records.size()));
    }
    RealReturnSeries out;
    out.start_years.reserve(records.size() - 1);
    out.gross.reserve(records.size() - 1);
    out.logs.reserve(records.size() - 1);
    for (std::size_t k = 0; k + 1 < records.size(); ++k) {
        const AnnualRecord& cur = records[k];
        const AnnualRecord& next = records[k + 1];
        const double gross =
            ((next.price + cur.dividend) / cur.price) * (cur.cpi / next.cpi);
        if (!(gross > 0.0)) {
            throw std::invalid_argument("nonpositive gross real return for year " +
                                        std::to_string(cur.year));
        }
        out.start_years.push_back(cur.year);
        out.gross.push_back(gross);
        out.logs.push_back(std::log(gross));
    }
    return out;
}

double trend_slope(const RealReturnSeries& series) {
    if (series.size() == 0) {
        throw std::invalid_argument("empty real-return series");
    }
    const double total = std::accumulate(series.logs.begin(), series.logs.end(), 0.0);
    return total / double(series.size());
}

double projected_annual_log_return(double inflation, double base_real) {
    if (!(inflation > -1.0)) {
        throw std::invalid_argument("inflation rate must exceed -1, got " +
                                    format_double(inflation));
    }
    return base_real + std::log1p(inflation);
}

double projected_daily_log_return(double inflation, double base_real,
                                  double trading_days) {
    return projected_annual_log_return(inflation, base_real) / trading_days;
}

}  // namespace levfund
