#include "marketml/market_data.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace marketml {

namespace {

std::string to_lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) {
        // trim surrounding whitespace
        auto b = cell.find_first_not_of(" \t\r");
        auto e = cell.find_last_not_of(" \t\r");
        fields.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
    }
    if (!line.empty() && line.back() == ',') fields.push_back("");
    return fields;
}

void check_bar(const OhlcBar& bar, std::vector<std::string>* warnings) {
    if (!warnings) return;
    auto warn = [&](const std::string& rule) {
        warnings->push_back(to_iso(bar.date) + ": " + rule);
    };
    const Decimal zero{};
    if (bar.open <= zero || bar.high <= zero || bar.low <= zero || bar.close <= zero) {
        // Ordering is meaningless on a corrupt bar; report the price alone.
        warn("non-positive price");
        return;
    }
    if (bar.open > bar.high) warn("open>high");
    if (bar.close > bar.high) warn("close>high");
    if (bar.open < bar.low) warn("open<low");
    if (bar.close < bar.low) warn("close<low");
}

}  // namespace

std::vector<double> MarketSeries::closes() const { return column('c'); }

std::vector<double> MarketSeries::column(char field) const {
    std::vector<double> out;
    out.reserve(bars.size());
    for (const OhlcBar& b : bars) {
        switch (field) {
            case 'o': out.push_back(b.open.to_double()); break;
            case 'h': out.push_back(b.high.to_double()); break;
            case 'l': out.push_back(b.low.to_double()); break;
            case 'c': out.push_back(b.close.to_double()); break;
            default: throw std::invalid_argument("unknown OHLC field");
        }
    }
    return out;
}

MarketSeries parse_csv(std::istream& in, std::string market_id, DateFormat format,
                       std::vector<std::string>* warnings) {
    std::string line;
    if (!std::getline(in, line)) {
        throw std::runtime_error("empty input: no header row");
    }
    if (!line.empty() && line.back() == '\r') line.pop_back();

    // Map header names to column positions; case-insensitive, any order.
    std::vector<std::string> header = split_fields(line);
    std::map<std::string, std::size_t> pos;
    for (std::size_t i = 0; i < header.size(); ++i) pos[to_lower(header[i])] = i;
    for (const char* name : {"date", "open", "high", "low", "close"}) {
        if (!pos.count(name)) {
            throw std::runtime_error(std::string("missing column \"") + name + "\" in header");
        }
    }

    MarketSeries series;
    series.market_id = std::move(market_id);
    std::size_t row = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        ++row;
        if (line.empty()) continue;
        std::vector<std::string> fields = split_fields(line);
        if (fields.size() < header.size()) {
            throw std::runtime_error("row " + std::to_string(row) + ": expected " +
                                     std::to_string(header.size()) + " fields, got " +
                                     std::to_string(fields.size()));
        }
        OhlcBar bar;
        try {
            bar.date = parse_date(fields[pos["date"]], format);
            bar.open = parse_decimal(fields[pos["open"]]);
            bar.high = parse_decimal(fields[pos["high"]]);
            bar.low = parse_decimal(fields[pos["low"]]);
            bar.close = parse_decimal(fields[pos["close"]]);
        } catch (const std::invalid_argument& e) {
            throw std::runtime_error("row " + std::to_string(row) + ": " + e.what());
        }
        series.bars.push_back(bar);
    }
    if (series.bars.empty()) {
        throw std::runtime_error("no data rows");
    }

    // Dedup keeps the first occurrence in file order, then sort ascending.
    std::unordered_set<std::string> seen;
    std::vector<OhlcBar> unique;
    unique.reserve(series.bars.size());
    for (const OhlcBar& b : series.bars) {
        if (seen.insert(to_iso(b.date)).second) unique.push_back(b);
    }
    std::sort(unique.begin(), unique.end(),
              [](const OhlcBar& a, const OhlcBar& b) { return a.date < b.date; });
    series.bars = std::move(unique);

    for (const OhlcBar& b : series.bars) check_bar(b, warnings);
    return series;
}

MarketSeries load_csv(const std::string& path, DateFormat format,
                      std::vector<std::string>* warnings) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open file: " + path);
    }
    std::string id = std::filesystem::path(path).stem().string();
    try {
        return parse_csv(in, id, format, warnings);
    } catch (const std::runtime_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

void write_csv(const MarketSeries& s, std::ostream& out) {
    out << "date,open,high,low,close\n";
    for (const OhlcBar& b : s.bars) {
        out << to_iso(b.date) << ',' << b.open.to_string() << ',' << b.high.to_string()
            << ',' << b.low.to_string() << ',' << b.close.to_string() << '\n';
    }
}

AlignedPair align_by_date(const MarketSeries& a, const MarketSeries& b) {
    if (a.bars.empty() || b.bars.empty()) {
        throw std::runtime_error("cannot align: empty series");
    }
    AlignedPair pair;
    pair.market_a = a.market_id;
    pair.market_b = b.market_id;

    // Both inputs are date-sorted; merge walk.
    std::size_t i = 0, j = 0;
    while (i < a.bars.size() && j < b.bars.size()) {
        const Date& da = a.bars[i].date;
        const Date& db = b.bars[j].date;
        if (da < db) {
            ++i;
        } else if (db < da) {
            ++j;
        } else {
            pair.dates.push_back(da);
            pair.open_a.push_back(a.bars[i].open.to_double());
            pair.high_a.push_back(a.bars[i].high.to_double());
            pair.low_a.push_back(a.bars[i].low.to_double());
            pair.close_a.push_back(a.bars[i].close.to_double());
            pair.open_b.push_back(b.bars[j].open.to_double());
            pair.high_b.push_back(b.bars[j].high.to_double());
            pair.low_b.push_back(b.bars[j].low.to_double());
            pair.close_b.push_back(b.bars[j].close.to_double());
            ++i;
            ++j;
        }
    }
    if (pair.dates.empty()) {
        throw EmptyIntersectionError("series " + a.market_id + " and " + b.market_id +
                                     " share no dates");
    }
    return pair;
}

std::vector<std::string> validate_bars(const MarketSeries& s) {
    std::vector<std::string> warnings;
    for (const OhlcBar& b : s.bars) check_bar(b, &warnings);
    return warnings;
}

}  // namespace marketml
