#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace marketml {

/// Exact decimal number as parsed from text: mantissa and number of digits
/// after the point. "8383.2" -> {83832, 1}, "6101.24" -> {610124, 2}.
/// Keeps the source representation so CSV round-trips are byte-exact;
/// converted to double only when feeding the numeric pipeline.
struct Decimal {
    std::int64_t mantissa = 0;
    std::uint8_t scale = 0;

    double to_double() const;
    std::string to_string() const;

    /// Numeric comparison (independent of scale).
    static int compare(const Decimal& a, const Decimal& b);

    friend bool operator==(const Decimal& a, const Decimal& b) { return compare(a, b) == 0; }
    friend bool operator<(const Decimal& a, const Decimal& b) { return compare(a, b) < 0; }
    friend bool operator<=(const Decimal& a, const Decimal& b) { return compare(a, b) <= 0; }
    friend bool operator>(const Decimal& a, const Decimal& b) { return compare(a, b) > 0; }
    friend bool operator>=(const Decimal& a, const Decimal& b) { return compare(a, b) >= 0; }
};

/// Parses "123", "-4.5", "6101.24". Throws std::invalid_argument on junk,
/// empty input, or overflow.
Decimal parse_decimal(std::string_view text);

}  // namespace marketml
