#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "marketml/market_data.hpp"

namespace marketml {

enum class CorpusId { AusDaily, UsaDaily, AusWeekly, UsaWeekly };

/// Parses "aus-daily", "usa-weekly", ... Throws std::invalid_argument.
CorpusId corpus_id_from_string(std::string_view name);
std::string to_string(CorpusId id);

/// The embedded dataset, parsed, de-duplicated and date-sorted. Cached;
/// the returned reference stays valid for the program lifetime.
const MarketSeries& embedded_corpus(CorpusId id);

/// Embedded daily (or weekly) USA/AUS pair joined by date. Market A is USA.
AlignedPair embedded_daily_pair();

/// Row counts, date ranges and derived dataset facts, plus notes on the
/// quirks of the bundled data. Matches data/corpus_manifest.json.
nlohmann::ordered_json corpus_manifest();

namespace detail {
extern const char* const kAusWeeklyCsv;
extern const char* const kUsaWeeklyCsv;
extern const char* const kAusDailyCsv;
extern const char* const kUsaDailyCsv;
}  // namespace detail

}  // namespace marketml
