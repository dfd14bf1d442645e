#include "marketml/decimal.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace marketml {

double Decimal::to_double() const {
    return static_cast<double>(mantissa) / std::pow(10.0, scale);
}

std::string Decimal::to_string() const {
    std::string digits = std::to_string(mantissa < 0 ? -mantissa : mantissa);
    if (scale > 0) {
        if (digits.size() <= scale) {
            digits.insert(0, scale + 1 - digits.size(), '0');
        }
        digits.insert(digits.size() - scale, 1, '.');
    }
    if (mantissa < 0) digits.insert(0, 1, '-');
    return digits;
}

int Decimal::compare(const Decimal& a, const Decimal& b) {
    // Widen both mantissas to a common scale. Prices fit easily in 128 bits.
    __int128 ma = a.mantissa, mb = b.mantissa;
    for (int i = a.scale; i < b.scale; ++i) ma *= 10;
    for (int i = b.scale; i < a.scale; ++i) mb *= 10;
    return ma < mb ? -1 : (ma > mb ? 1 : 0);
}

Decimal parse_decimal(std::string_view text) {
    auto fail = [&]() -> Decimal {
        throw std::invalid_argument("unparsable number: \"" + std::string(text) + "\"");
    };

    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        negative = s[0] == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) return fail();

    std::int64_t mantissa = 0;
    int scale = -1;  // -1 until the point is seen
    for (char c : s) {
        if (c == '.') {
            if (scale >= 0) return fail();
            scale = 0;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(c))) return fail();
        if (mantissa > (INT64_MAX - 9) / 10) return fail();  // overflow
        mantissa = mantissa * 10 + (c - '0');
        if (scale >= 0) ++scale;
    }
    if (scale == 0 && s.back() == '.') return fail();  // "123."
    if (s.front() == '.') return fail();               // ".5"
    if (scale > 18) return fail();

    Decimal d;
    d.mantissa = negative ? -mantissa : mantissa;
    d.scale = static_cast<std::uint8_t>(scale < 0 ? 0 : scale);
    return d;
}

}  // namespace marketml
