#include "marketml/dates.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <stdexcept>

namespace marketml {

namespace {

const std::array<std::string_view, 12> kMonthNames = {
    "jan", "feb", "mar", "apr", "may", "jun",
    "jul", "aug", "sep", "oct", "nov", "dec"};

int days_in_month(int year, int month) {
    static constexpr int kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (month == 2) {
        bool leap = (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
        return leap ? 29 : 28;
    }
    return kDays[month - 1];
}

bool parse_int(std::string_view s, int& out) {
    if (s.empty()) return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

int month_from_name(std::string_view name) {
    std::string lower(name);
    for (char& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    for (std::size_t i = 0; i < kMonthNames.size(); ++i) {
        if (lower == kMonthNames[i]) return static_cast<int>(i) + 1;
    }
    return 0;
}

bool try_parse(std::string_view text, DateFormat format, Date& out) {
    // All three formats are dash-separated triples.
    std::size_t p1 = text.find('-');
    if (p1 == std::string_view::npos) return false;
    std::size_t p2 = text.find('-', p1 + 1);
    if (p2 == std::string_view::npos || text.find('-', p2 + 1) != std::string_view::npos)
        return false;
    std::string_view a = text.substr(0, p1);
    std::string_view b = text.substr(p1 + 1, p2 - p1 - 1);
    std::string_view c = text.substr(p2 + 1);

    Date d;
    switch (format) {
        case DateFormat::Iso: {
            if (a.size() != 4 || b.size() != 2 || c.size() != 2) return false;
            if (!parse_int(a, d.year) || !parse_int(b, d.month) || !parse_int(c, d.day))
                return false;
            break;
        }
        case DateFormat::Dmy2: {
            if (a.size() != 2 || b.size() != 2 || c.size() != 2) return false;
            int yy;
            if (!parse_int(a, d.day) || !parse_int(b, d.month) || !parse_int(c, yy))
                return false;
            d.year = 2000 + yy;  // data is contemporary; two-digit years read as 20YY
            break;
        }
        case DateFormat::DMon4: {
            if (a.size() != 2 || b.size() != 3 || c.size() != 4) return false;
            d.month = month_from_name(b);
            if (d.month == 0) return false;
            if (!parse_int(a, d.day) || !parse_int(c, d.year)) return false;
            break;
        }
        case DateFormat::Auto:
            return try_parse(text, DateFormat::Iso, out) ||
                   try_parse(text, DateFormat::Dmy2, out) ||
                   try_parse(text, DateFormat::DMon4, out);
    }
    if (!is_valid_date(d)) return false;
    out = d;
    return true;
}

}  // namespace

bool is_valid_date(const Date& d) {
    return d.year >= 1 && d.month >= 1 && d.month <= 12 && d.day >= 1 &&
           d.day <= days_in_month(d.year, d.month);
}

Date parse_date(std::string_view text, DateFormat format) {
    Date d;
    if (!try_parse(text, format, d)) {
        throw std::invalid_argument("unparsable date: \"" + std::string(text) + "\"");
    }
    return d;
}

std::string to_iso(const Date& d) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", d.year, d.month, d.day);
    return buf;
}

}  // namespace marketml
