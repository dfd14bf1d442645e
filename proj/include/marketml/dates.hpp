#pragma once

#include <compare>
#include <string>
#include <string_view>

namespace marketml {

/// Naive calendar date. No time zone; ordering is plain calendar order.
struct Date {
    int year = 0;
    int month = 0;  // 1..12
    int day = 0;    // 1..31

    auto operator<=>(const Date&) const = default;
};

enum class DateFormat {
    Auto,     // try Iso, then DayMonthYear2, then DayMonYear4
    Iso,      // 2025-01-24
    Dmy2,     // 24-01-25 (two-digit year, read as 20YY)
    DMon4,    // 24-Jan-2025
};

bool is_valid_date(const Date& d);

/// Parses a date token. Throws std::invalid_argument on anything unparsable
/// or not a real calendar date.
Date parse_date(std::string_view text, DateFormat format = DateFormat::Auto);

std::string to_iso(const Date& d);

}  // namespace marketml
