#pragma once

#include <string>

namespace marketml {

/// Shortest decimal string that round-trips to the same double (via
/// std::to_chars). Used by every CSV/JSON emitter so identical runs produce
/// byte-identical output.
std::string format_double(double value);

/// Fixed-precision rendering for aligned text tables.
std::string format_fixed(double value, int precision);

}  // namespace marketml
