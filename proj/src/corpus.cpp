#include "marketml/corpus.hpp"

#include <sstream>
#include <stdexcept>

#include "marketml/features.hpp"
#include "marketml/stats.hpp"

namespace marketml {

namespace {

MarketSeries parse_embedded(const char* text, const std::string& id) {
    std::istringstream in(text);
    return parse_csv(in, id);
}

std::size_t raw_row_count(const char* text) {
    std::size_t n = 0;
    for (const char* p = text; *p; ++p) {
        if (*p == '\n') ++n;
    }
    return n - 1;  // header
}

}  // namespace

CorpusId corpus_id_from_string(std::string_view name) {
    if (name == "aus-daily") return CorpusId::AusDaily;
    if (name == "usa-daily") return CorpusId::UsaDaily;
    if (name == "aus-weekly") return CorpusId::AusWeekly;
    if (name == "usa-weekly") return CorpusId::UsaWeekly;
    throw std::invalid_argument("unknown corpus \"" + std::string(name) +
                                "\" (expected aus-daily, usa-daily, aus-weekly or usa-weekly)");
}

std::string to_string(CorpusId id) {
    switch (id) {
        case CorpusId::AusDaily: return "aus-daily";
        case CorpusId::UsaDaily: return "usa-daily";
        case CorpusId::AusWeekly: return "aus-weekly";
        case CorpusId::UsaWeekly: return "usa-weekly";
    }
    throw std::invalid_argument("bad corpus id");
}

const MarketSeries& embedded_corpus(CorpusId id) {
    static const MarketSeries aus_daily = parse_embedded(detail::kAusDailyCsv, "AUS");
    static const MarketSeries usa_daily = parse_embedded(detail::kUsaDailyCsv, "USA");
    static const MarketSeries aus_weekly = parse_embedded(detail::kAusWeeklyCsv, "AUS");
    static const MarketSeries usa_weekly = parse_embedded(detail::kUsaWeeklyCsv, "USA");
    switch (id) {
        case CorpusId::AusDaily: return aus_daily;
        case CorpusId::UsaDaily: return usa_daily;
        case CorpusId::AusWeekly: return aus_weekly;
        case CorpusId::UsaWeekly: return usa_weekly;
    }
    throw std::invalid_argument("bad corpus id");
}

AlignedPair embedded_daily_pair() {
    return align_by_date(embedded_corpus(CorpusId::UsaDaily),
                         embedded_corpus(CorpusId::AusDaily));
}

nlohmann::ordered_json corpus_manifest() {
    nlohmann::ordered_json m;
    m["datasets"] = nlohmann::ordered_json::object();

    struct Entry {
        CorpusId id;
        const char* raw;
        const char* frequency;
    };
    const Entry entries[] = {
        {CorpusId::AusDaily, detail::kAusDailyCsv, "daily"},
        {CorpusId::UsaDaily, detail::kUsaDailyCsv, "daily"},
        {CorpusId::AusWeekly, detail::kAusWeeklyCsv, "weekly"},
        {CorpusId::UsaWeekly, detail::kUsaWeeklyCsv, "weekly"},
    };
    for (const Entry& e : entries) {
        const MarketSeries& s = embedded_corpus(e.id);
        nlohmann::ordered_json d;
        d["market"] = s.market_id;
        d["frequency"] = e.frequency;
        d["rows"] = s.bars.size();
        d["raw_rows"] = raw_row_count(e.raw);
        d["first_date"] = to_iso(s.bars.front().date);
        d["last_date"] = to_iso(s.bars.back().date);
        m["datasets"][to_string(e.id)] = std::move(d);
    }

    AlignedPair daily = embedded_daily_pair();
    FeatureMatrix fm = assemble(daily);
    nlohmann::ordered_json derived;
    derived["daily_aligned_rows"] = daily.size();
    derived["daily_feature_rows"] = fm.n_rows();
    derived["daily_close_pearson_r"] = pearson(daily.series_a(), daily.series_b());
    m["derived"] = std::move(derived);

    m["notes"] = nlohmann::json::array({
        "The daily AUS feed repeats a block of dates; dedup keeps the first "
        "occurrence (repeated rows carry identical values), leaving 130 "
        "distinct sessions.",
        "The daily USA feed holds 129 rows, one per US trading session in "
        "the window. The reference summary the acceptance suite compares "
        "against was computed on 130 USA sessions (the extra one closes "
        "near 5996, mid January); with it absent the USA standard deviation "
        "lands ~0.3% above the reference value and its variance ~0.6% "
        "above, while every other USA statistic agrees within 0.02%. Kept "
        "as-is rather than patching in a row the feed does not contain.",
        "The weekly feeds label weeks differently (AUS by the Friday, USA "
        "by the Monday), so they share no calendar dates; week-level "
        "analyses pair the 27 rows positionally.",
        "Feature rows include the same-day USA close next to its lags, so "
        "predictions are not strictly causal; kept to match the standard "
        "lag/rolling pipeline definition.",
    });
    return m;
}

}  // namespace marketml
