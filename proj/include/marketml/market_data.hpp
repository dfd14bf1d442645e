#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "marketml/dates.hpp"
#include "marketml/decimal.hpp"

namespace marketml {

/// Thrown by align_by_date when two series share no calendar dates.
struct EmptyIntersectionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One trading period: date plus open/high/low/close in index points.
struct OhlcBar {
    Date date;
    Decimal open, high, low, close;
};

/// Ordered, de-duplicated OHLC series for one market. Dates are strictly
/// increasing after load; immutable by convention once built.
struct MarketSeries {
    std::string market_id;
    std::vector<OhlcBar> bars;

    std::vector<double> closes() const;
    std::vector<double> column(char field) const;  // 'o','h','l','c'
};

/// Date-aligned pair of markets (inner join on calendar date). series_a()
/// and series_b() are the closing-price columns of markets A and B.
struct AlignedPair {
    std::string market_a, market_b;
    std::vector<Date> dates;
    std::vector<double> open_a, high_a, low_a, close_a;
    std::vector<double> open_b, high_b, low_b, close_b;

    std::size_t size() const { return dates.size(); }
    const std::vector<double>& series_a() const { return close_a; }
    const std::vector<double>& series_b() const { return close_b; }
};

/// Parses CSV with a `date,open,high,low,close` header (case-insensitive,
/// any column order). Rows are sorted ascending by date; duplicate dates
/// are dropped keeping the first occurrence. OHLC-ordering and
/// non-positive-price violations are reported through `warnings` (when
/// given), never dropped. Throws std::runtime_error with the 1-based data
/// row index on unparsable input, and on an empty result.
MarketSeries parse_csv(std::istream& in, std::string market_id,
                       DateFormat format = DateFormat::Auto,
                       std::vector<std::string>* warnings = nullptr);

/// parse_csv over a file. Throws std::runtime_error naming the path if it
/// cannot be opened. The market id defaults to the file stem.
MarketSeries load_csv(const std::string& path,
                      DateFormat format = DateFormat::Auto,
                      std::vector<std::string>* warnings = nullptr);

/// Writes `date,open,high,low,close` rows, ISO dates, prices as their exact
/// decimal source strings. load_csv(write_csv(s)) == s.
void write_csv(const MarketSeries& s, std::ostream& out);

/// Inner join on date, ascending. Throws std::runtime_error when the
/// intersection is empty or either input is empty.
AlignedPair align_by_date(const MarketSeries& a, const MarketSeries& b);

/// One warning per OHLC-ordering violation or non-positive price,
/// identifying the date and the rule broken.
std::vector<std::string> validate_bars(const MarketSeries& s);

}  // namespace marketml
