#include "marketml/rng.hpp"

#include <cmath>

namespace marketml {

namespace {

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

std::uint64_t Rng::next_below(std::uint64_t n) {
    if (n <= 1) return 0;
    // Rejection sampling on the top of the range to avoid modulo bias.
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t v;
    do {
        v = next_u64();
    } while (v >= limit);
    return v % n;
}

double Rng::next_normal() {
    while (true) {
        double u = 2.0 * next_double() - 1.0;
        double v = 2.0 * next_double() - 1.0;
        double s = u * u + v * v;
        if (s > 0.0 && s < 1.0) {
            return u * std::sqrt(-2.0 * std::log(s) / s);
        }
    }
}

std::uint64_t Rng::derive(std::uint64_t master, std::uint64_t index) {
    return mix64(master ^ mix64(index + 0x9E3779B97F4A7C15ULL));
}

}  // namespace marketml
