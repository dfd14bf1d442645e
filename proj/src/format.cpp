#include "marketml/format.hpp"

#include <charconv>
#include <cstdio>

namespace marketml {

std::string format_double(double value) {
    char buf[40];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    (void)ec;
    return std::string(buf, ptr);
}

std::string format_fixed(double value, int precision) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", precision, value);
    return buf;
}

}  // namespace marketml
