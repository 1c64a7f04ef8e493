// Calendar dates for price series. ISO 8601 (YYYY-MM-DD) only.

#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace levfund {

struct Date {
    int year = 1970;
    int month = 1;
    int day = 1;

    auto operator<=>(const Date&) const = default;
};

// Strict ISO parse: exactly YYYY-MM-DD, and the date must exist on the
// civil calendar (leap years included). Throws std::invalid_argument.
Date parse_date(std::string_view text);

// True if the parse above would succeed.
bool is_valid_date(std::string_view text);

std::string to_string(const Date& d);

// Date as a fractional year (e.g. 1960-07-02 -> ~1960.5), used for chart axes.
double year_fraction(const Date& d);

// Next civil day; handles month/year rollover.
Date next_day(const Date& d);

}  // namespace levfund
