#include "levfund/date.hpp"

#include <chrono>
#include <cstdio>
#include <stdexcept>

namespace levfund {

namespace {

namespace chr = std::chrono;

chr::year_month_day to_ymd(const Date& d) {
    return chr::year_month_day{chr::year{d.year}, chr::month{unsigned(d.month)},
                               chr::day{unsigned(d.day)}};
}

bool parse_fields(std::string_view text, Date& out) {
    // Fixed layout: 4 digits, '-', 2 digits, '-', 2 digits.
    if (text.size() != 10 || text[4] != '-' || text[7] != '-') return false;
    auto digits = [&](size_t pos, size_t len, int& value) {
        value = 0;
        for (size_t i = pos; i < pos + len; ++i) {
            char c = text[i];
            if (c < '0' || c > '9') return false;
            value = value * 10 + (c - '0');
        }
        return true;
    };
    return digits(0, 4, out.year) && digits(5, 2, out.month) && digits(8, 2, out.day);
}

}  // namespace

Date parse_date(std::string_view text) {
    Date d;
    if (!parse_fields(text, d) || !to_ymd(d).ok()) {
        throw std::invalid_argument("invalid ISO date (expected YYYY-MM-DD): '" +
                                    std::string(text) + "'");
    }
    return d;
}

bool is_valid_date(std::string_view text) {
    Date d;
    return parse_fields(text, d) && to_ymd(d).ok();
}

std::string to_string(const Date& d) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", d.year, d.month, d.day);
    return buf;
}

double year_fraction(const Date& d) {
    const chr::sys_days day = to_ymd(d);
    const chr::sys_days year_start = chr::year_month_day{chr::year{d.year}, chr::January, chr::day{1}};
    const chr::sys_days next_year = chr::year_month_day{chr::year{d.year + 1}, chr::January, chr::day{1}};
    const double length = double((next_year - year_start).count());
    return d.year + double((day - year_start).count()) / length;
}

Date next_day(const Date& d) {
    const chr::year_month_day ymd{chr::sys_days{to_ymd(d)} + chr::days{1}};
    return Date{int(ymd.year()), int(unsigned(ymd.month())), int(unsigned(ymd.day()))};
}

}  // namespace levfund
