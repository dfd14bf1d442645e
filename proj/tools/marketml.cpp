// marketml — cross-market statistics and regression toolkit.
//
// Subcommands: stats, corr, features, run, sweep, fit-line, fit, predict,
// corpus. Data reaches stdout (or --output); diagnostics go to stderr, so
// pipes stay clean. Exit codes: 0 success, 1 invalid configuration,
// 2 data/load failure, 3 empty date intersection.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "marketml/corpus.hpp"
#include "marketml/experiment.hpp"
#include "marketml/format.hpp"
#include "marketml/market_data.hpp"
#include "marketml/metrics.hpp"
#include "marketml/models.hpp"
#include "marketml/stats.hpp"

namespace {

using namespace marketml;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitData = 2;
constexpr int kExitNoOverlap = 3;

struct CliError {
    int code;
    std::vector<std::string> messages;
};

// ----------------------------------------------------------------------------
// Output plumbing
// ----------------------------------------------------------------------------

struct OutputTarget {
    std::string format = "text";  // text | csv | json
    std::string path;             // empty -> stdout / env default dir
};

void emit(const OutputTarget& target, const std::string& default_name,
          const std::string& content) {
    std::string path = target.path;
    if (path.empty()) {
        if (const char* dir = std::getenv("MARKETML_OUTPUT_DIR"); dir && *dir) {
            path = (std::filesystem::path(dir) / default_name).string();
        }
    }
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw CliError{kExitData, {"cannot write to " + path}};
    out << content;
    std::cerr << "wrote " << path << "\n";
}

void print_warnings(const std::vector<std::string>& warnings) {
    for (const std::string& w : warnings) std::cerr << "warning: " << w << "\n";
}

// ----------------------------------------------------------------------------
// Data sources
// ----------------------------------------------------------------------------

DateFormat parse_date_format(const std::string& name) {
    if (name == "auto") return DateFormat::Auto;
    if (name == "iso") return DateFormat::Iso;
    if (name == "dmy") return DateFormat::Dmy2;
    if (name == "dmon") return DateFormat::DMon4;
    throw CliError{kExitConfig, {"unknown date format \"" + name + "\""}};
}

MarketSeries load_series(const std::string& csv, const std::string& date_format) {
    std::vector<std::string> warnings;
    MarketSeries s = load_csv(csv, parse_date_format(date_format), &warnings);
    print_warnings(warnings);
    return s;
}

/// Two-market source: the embedded daily/weekly pair, or two CSV files.
struct PairSource {
    std::string corpus = "daily";  // daily | weekly (ignored when CSVs given)
    std::string csv_a, csv_b;
    std::string date_format = "auto";

    bool from_files() const { return !csv_a.empty() || !csv_b.empty(); }

    std::pair<MarketSeries, MarketSeries> load(std::string* label) const {
        if (from_files()) {
            if (csv_a.empty() || csv_b.empty()) {
                throw CliError{kExitConfig, {"--csv-a and --csv-b must be given together"}};
            }
            *label = csv_a + " + " + csv_b;
            return {load_series(csv_a, date_format), load_series(csv_b, date_format)};
        }
        if (corpus == "daily") {
            *label = "daily";
            return {embedded_corpus(CorpusId::UsaDaily), embedded_corpus(CorpusId::AusDaily)};
        }
        if (corpus == "weekly") {
            *label = "weekly";
            return {embedded_corpus(CorpusId::UsaWeekly), embedded_corpus(CorpusId::AusWeekly)};
        }
        throw CliError{kExitConfig,
                       {"unknown corpus \"" + corpus + "\" (expected daily or weekly)"}};
    }

    void add_options(CLI::App* cmd) {
        cmd->add_option("--corpus", corpus, "embedded dataset pair (daily or weekly)");
        cmd->add_option("--csv-a", csv_a, "market A OHLC csv (x / feature side)");
        cmd->add_option("--csv-b", csv_b, "market B OHLC csv (y / target side)");
        cmd->add_option("--date-format", date_format, "auto|iso|dmy|dmon");
    }
};

AlignedPair align_or_exit(const MarketSeries& a, const MarketSeries& b) {
    try {
        return align_by_date(a, b);
    } catch (const EmptyIntersectionError& e) {
        throw CliError{kExitNoOverlap, {e.what()}};
    }
}

// ----------------------------------------------------------------------------
// stats
// ----------------------------------------------------------------------------

struct StatsArgs {
    std::string corpus, csv, date_format = "auto";
    std::string column = "close";
    OutputTarget out;
};

const char* const kSummaryRows[] = {"Count",  "Mean", "Std Dev", "Min",
                                    "25%",    "Median", "75%",   "Max",
                                    "Range",  "Variance", "Skewness", "Kurtosis"};

std::string render_stats_text(const std::string& label, const DescriptiveSummary& s) {
    auto row = [](const char* name, const std::string& value) {
        std::ostringstream line;
        line << name << std::string(12 - std::string(name).size(), ' ') << value << "\n";
        return line.str();
    };
    std::ostringstream out;
    out << "Statistic   " << label << "\n";
    out << row("Count", std::to_string(s.count));
    out << row("Mean", format_fixed(s.mean, 2));
    out << row("Std Dev", format_fixed(s.std_dev, 2));
    out << row("Min", format_fixed(s.min, 2));
    out << row("25%", format_fixed(s.q25, 2));
    out << row("Median", format_fixed(s.median, 2));
    out << row("75%", format_fixed(s.q75, 2));
    out << row("Max", format_fixed(s.max, 2));
    out << row("Range", format_fixed(s.range, 2));
    out << row("Variance", format_fixed(s.variance, 2));
    out << row("Skewness", s.skewness ? format_fixed(*s.skewness, 2) : "-");
    out << row("Kurtosis", s.excess_kurtosis ? format_fixed(*s.excess_kurtosis, 2) : "-");
    return out.str();
}

nlohmann::ordered_json stats_json(const DescriptiveSummary& s) {
    nlohmann::ordered_json j;
    j["Count"] = s.count;
    j["Mean"] = s.mean;
    j["Std Dev"] = s.std_dev;
    j["Min"] = s.min;
    j["25%"] = s.q25;
    j["Median"] = s.median;
    j["75%"] = s.q75;
    j["Max"] = s.max;
    j["Range"] = s.range;
    j["Variance"] = s.variance;
    j["Skewness"] = s.skewness ? nlohmann::ordered_json(*s.skewness)
                               : nlohmann::ordered_json(nullptr);
    j["Kurtosis"] = s.excess_kurtosis ? nlohmann::ordered_json(*s.excess_kurtosis)
                                      : nlohmann::ordered_json(nullptr);
    return j;
}

int cmd_stats(const StatsArgs& args) {
    if (args.corpus.empty() == args.csv.empty()) {
        throw CliError{kExitConfig, {"exactly one of --corpus or --csv is required"}};
    }
    MarketSeries series;
    if (args.corpus.empty()) {
        series = load_series(args.csv, args.date_format);
    } else {
        try {
            series = embedded_corpus(corpus_id_from_string(args.corpus));
        } catch (const std::invalid_argument& e) {
            throw CliError{kExitConfig, {e.what()}};
        }
    }
    if (args.column != "open" && args.column != "high" && args.column != "low" &&
        args.column != "close") {
        throw CliError{kExitConfig, {"--column must be open, high, low or close"}};
    }
    DescriptiveSummary s = summarize(series.column(args.column[0]));

    if (args.out.format == "json") {
        emit(args.out, "stats.json", stats_json(s).dump(2) + "\n");
    } else if (args.out.format == "csv") {
        std::ostringstream csv;
        csv << "statistic,value\n";
        nlohmann::ordered_json j = stats_json(s);
        for (const char* name : kSummaryRows) {
            csv << name << ',';
            if (j[name].is_null()) {
                csv << "\n";
            } else if (std::string(name) == "Count") {
                csv << s.count << "\n";
            } else {
                csv << format_double(j[name].get<double>()) << "\n";
            }
        }
        emit(args.out, "stats.csv", csv.str());
    } else {
        emit(args.out, "stats.txt", render_stats_text(series.market_id, s));
    }
    return kExitOk;
}

// ----------------------------------------------------------------------------
// corr
// ----------------------------------------------------------------------------

std::vector<NamedColumn> ohlc_columns(const AlignedPair& p) {
    return {{p.market_a + "_open", p.open_a},  {p.market_a + "_high", p.high_a},
            {p.market_a + "_low", p.low_a},    {p.market_a + "_close", p.close_a},
            {p.market_b + "_open", p.open_b},  {p.market_b + "_high", p.high_b},
            {p.market_b + "_low", p.low_b},    {p.market_b + "_close", p.close_b}};
}

int cmd_corr(PairSource& source, const OutputTarget& out) {
    std::string label;
    auto [a, b] = source.load(&label);
    AlignedPair pair = align_or_exit(a, b);
    CorrelationMatrix cm = correlation_matrix(ohlc_columns(pair));

    if (out.format == "json") {
        nlohmann::ordered_json j;
        j["labels"] = cm.labels;
        j["r"] = cm.r;
        emit(out, "corr.json", j.dump(2) + "\n");
    } else if (out.format == "text") {
        std::ostringstream text;
        std::size_t w = 0;
        for (const auto& l : cm.labels) w = std::max(w, l.size());
        text << std::string(w + 2, ' ');
        for (const auto& l : cm.labels) text << l << "  ";
        text << "\n";
        for (std::size_t i = 0; i < cm.labels.size(); ++i) {
            text << cm.labels[i] << std::string(w + 2 - cm.labels[i].size(), ' ');
            for (std::size_t j = 0; j < cm.labels.size(); ++j) {
                text << format_fixed(cm.r[i][j], 4)
                     << std::string(cm.labels[j].size() > 6 ? cm.labels[j].size() - 4 : 2, ' ');
            }
            text << "\n";
        }
        emit(out, "corr.txt", text.str());
    } else {
        // long form, heatmap-ready
        std::ostringstream csv;
        csv << "row,col,r\n";
        for (std::size_t i = 0; i < cm.labels.size(); ++i) {
            for (std::size_t j = 0; j < cm.labels.size(); ++j) {
                csv << cm.labels[i] << ',' << cm.labels[j] << ',' << format_double(cm.r[i][j])
                    << "\n";
            }
        }
        emit(out, "corr.csv", csv.str());
    }
    return kExitOk;
}

// ----------------------------------------------------------------------------
// features
// ----------------------------------------------------------------------------

std::string features_csv(const FeatureMatrix& fm) {
    std::ostringstream out;
    out << "date";
    for (const std::string& c : fm.column_names) out << ',' << c;
    out << ",target\n";
    for (std::size_t i = 0; i < fm.n_rows(); ++i) {
        out << to_iso(fm.row_dates[i]);
        for (double v : fm.rows[i]) out << ',' << format_double(v);
        out << ',' << format_double(fm.target[i]) << "\n";
    }
    return out.str();
}

int cmd_features(PairSource& source, const OutputTarget& out) {
    std::string label;
    auto [a, b] = source.load(&label);
    FeatureMatrix fm = assemble(align_or_exit(a, b));
    if (out.format == "json") {
        nlohmann::ordered_json j;
        j["columns"] = fm.column_names;
        nlohmann::ordered_json dates = nlohmann::json::array();
        for (const Date& d : fm.row_dates) dates.push_back(to_iso(d));
        j["dates"] = std::move(dates);
        j["rows"] = fm.rows;
        j["target"] = fm.target;
        emit(out, "features.json", j.dump(2) + "\n");
    } else {
        emit(out, "features.csv", features_csv(fm));
    }
    return kExitOk;
}

// ----------------------------------------------------------------------------
// run / sweep
// ----------------------------------------------------------------------------

struct ModelArgs {
    std::vector<std::string> models;  // empty -> default set
    int knn_k = 5;
    double svr_c = 1.0;
    double svr_epsilon = 0.1;
    std::string svr_gamma = "scale";
    int svr_degree = 3;
    double svr_coef0 = 0.0;
    double svr_tol = 1e-3;
    int svr_max_passes = 100000;
    int trees = 100;
    std::string max_features = "all";
    int min_leaf = 1;
    int max_depth = -1;
    int threads = 0;

    void add_options(CLI::App* cmd) {
        cmd->add_option("--models", models,
                        "models to run: knn, svr-poly, svr-linear, forest, ols "
                        "(default: knn svr-poly svr-linear forest)")
            ->delimiter(',');
        cmd->add_option("--knn-k", knn_k, "kNN neighbour count");
        cmd->add_option("--svr-c", svr_c, "SVR box penalty C");
        cmd->add_option("--svr-epsilon", svr_epsilon, "SVR tube half-width");
        cmd->add_option("--svr-gamma", svr_gamma, "SVR poly gamma (number or 'scale')");
        cmd->add_option("--svr-degree", svr_degree, "SVR poly degree");
        cmd->add_option("--svr-coef0", svr_coef0, "SVR poly coef0");
        cmd->add_option("--svr-tol", svr_tol, "SVR KKT tolerance");
        cmd->add_option("--svr-max-passes", svr_max_passes, "SVR iteration cap");
        cmd->add_option("--trees", trees, "forest size");
        cmd->add_option("--max-features", max_features,
                        "forest per-split feature subset: all, sqrt, or a fraction");
        cmd->add_option("--min-leaf", min_leaf, "minimum samples per leaf");
        cmd->add_option("--max-depth", max_depth, "tree depth cap (-1 = none)");
        cmd->add_option("--threads", threads, "forest fitting threads (0 = all)");
    }

    std::vector<std::string> validate() const {
        std::vector<std::string> problems;
        if (knn_k < 1) problems.push_back("--knn-k must be >= 1");
        if (svr_c <= 0) problems.push_back("--svr-c must be > 0");
        if (svr_epsilon < 0) problems.push_back("--svr-epsilon must be >= 0");
        if (svr_gamma != "scale") {
            char* end = nullptr;
            double g = std::strtod(svr_gamma.c_str(), &end);
            if (end == svr_gamma.c_str() || *end != '\0' || g <= 0) {
                problems.push_back("--svr-gamma must be a positive number or 'scale'");
            }
        }
        if (svr_degree < 1) problems.push_back("--svr-degree must be >= 1");
        if (svr_tol <= 0) problems.push_back("--svr-tol must be > 0");
        if (svr_max_passes < 1) problems.push_back("--svr-max-passes must be >= 1");
        if (trees < 1) problems.push_back("--trees must be >= 1");
        if (max_features != "all" && max_features != "sqrt") {
            char* end = nullptr;
            double f = std::strtod(max_features.c_str(), &end);
            if (end == max_features.c_str() || *end != '\0' || f <= 0 || f > 1) {
                problems.push_back("--max-features must be all, sqrt, or a fraction in (0,1]");
            }
        }
        if (min_leaf < 1) problems.push_back("--min-leaf must be >= 1");
        if (threads < 0) problems.push_back("--threads must be >= 0");
        return problems;
    }

    SvrConfig svr_config(SvrKernel kernel) const {
        SvrConfig cfg;
        cfg.kernel = kernel;
        cfg.c = svr_c;
        cfg.epsilon = svr_epsilon;
        cfg.gamma = svr_gamma == "scale" ? 0.0 : std::strtod(svr_gamma.c_str(), nullptr);
        cfg.degree = svr_degree;
        cfg.coef0 = svr_coef0;
        cfg.tol = svr_tol;
        cfg.max_passes = svr_max_passes;
        return cfg;
    }

    ForestConfig forest_config(std::uint64_t seed) const {
        ForestConfig cfg;
        cfg.n_trees = trees;
        cfg.seed = seed;
        if (max_features == "all") {
            cfg.max_features = MaxFeatures::all();
        } else if (max_features == "sqrt") {
            cfg.max_features = MaxFeatures::sqrt();
        } else {
            cfg.max_features = MaxFeatures::frac(std::strtod(max_features.c_str(), nullptr));
        }
        cfg.min_leaf = min_leaf;
        cfg.max_depth = max_depth;
        cfg.n_threads = threads;
        return cfg;
    }

    std::vector<ModelSpec> build(std::uint64_t seed) const {
        std::vector<std::string> names = models;
        if (names.empty()) names = {"knn", "svr-poly", "svr-linear", "forest"};
        std::vector<ModelSpec> specs;
        for (const std::string& name : names) {
            if (name == "knn") {
                specs.push_back({"kNN", KnnConfig{knn_k}});
            } else if (name == "svr-poly") {
                specs.push_back({"SVR", svr_config(SvrKernel::Poly)});
            } else if (name == "svr-linear") {
                specs.push_back({"Linear SVR", svr_config(SvrKernel::Linear)});
            } else if (name == "forest") {
                specs.push_back({"Random Forest", forest_config(seed)});
            } else if (name == "ols") {
                specs.push_back({"OLS", OlsConfig{}});
            } else {
                throw CliError{kExitConfig, {"unknown model \"" + name + "\""}};
            }
        }
        return specs;
    }
};

struct SplitArgs {
    std::string mode = "shuffled";
    double test_fraction = 0.2;
    std::uint64_t seed = 42;

    void add_options(CLI::App* cmd, bool with_seed = true) {
        cmd->add_option("--split", mode, "shuffled or chronological");
        cmd->add_option("--test-fraction", test_fraction, "held-out fraction (0,1)");
        if (with_seed) cmd->add_option("--seed", seed, "shuffle seed");
    }

    std::vector<std::string> validate() const {
        std::vector<std::string> problems;
        if (mode != "shuffled" && mode != "chronological") {
            problems.push_back("--split must be shuffled or chronological");
        }
        if (!(test_fraction > 0.0 && test_fraction < 1.0)) {
            problems.push_back("--test-fraction must lie in (0,1), got " +
                               format_double(test_fraction));
        }
        return problems;
    }

    SplitSpec spec() const {
        return {test_fraction,
                mode == "chronological" ? SplitMode::Chronological : SplitMode::Shuffled, seed};
    }
};

void require_valid(const std::vector<std::string>& problems) {
    if (!problems.empty()) throw CliError{kExitConfig, problems};
}

int cmd_run(PairSource& source, const SplitArgs& split_args, const ModelArgs& model_args,
            const OutputTarget& out, const std::string& predictions_dir) {
    require_valid([&] {
        auto p = split_args.validate();
        auto q = model_args.validate();
        p.insert(p.end(), q.begin(), q.end());
        return p;
    }());

    std::string label;
    auto [a, b] = source.load(&label);
    AlignedPair pair = align_or_exit(a, b);
    ExperimentResult result =
        run_experiment(pair, split_args.spec(), model_args.build(split_args.seed), label);

    for (const ModelOutcome& m : result.models) {
        if (!m.error.empty()) std::cerr << "warning: " << m.name << " failed: " << m.error << "\n";
        if (!m.note.empty()) std::cerr << "note: " << m.name << ": " << m.note << "\n";
    }

    if (!predictions_dir.empty()) {
        std::filesystem::create_directories(predictions_dir);
        for (const ModelOutcome& m : result.models) {
            if (m.predictions.empty()) continue;
            std::string name = m.name;
            for (char& c : name) {
                if (c == ' ' || c == '/') c = '_';
            }
            std::string path = (std::filesystem::path(predictions_dir) / (name + ".csv")).string();
            std::ofstream f(path);
            f << result.predictions_csv(m);
            std::cerr << "wrote " << path << "\n";
        }
    }

    if (out.format == "json") {
        emit(out, "run.json", result.to_json().dump(2) + "\n");
    } else if (out.format == "csv") {
        emit(out, "run.csv", result.to_csv());
    } else {
        emit(out, "run.txt", result.to_text());
    }
    return kExitOk;
}

std::vector<std::uint64_t> parse_seed_list(const std::vector<std::string>& tokens) {
    std::vector<std::uint64_t> seeds;
    for (const std::string& tok : tokens) {
        auto dots = tok.find("..");
        if (dots != std::string::npos) {
            std::uint64_t lo = std::strtoull(tok.substr(0, dots).c_str(), nullptr, 10);
            std::uint64_t hi = std::strtoull(tok.substr(dots + 2).c_str(), nullptr, 10);
            if (hi < lo || hi - lo > 10000) {
                throw CliError{kExitConfig, {"bad seed range \"" + tok + "\""}};
            }
            for (std::uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
        } else if (!tok.empty()) {
            seeds.push_back(std::strtoull(tok.c_str(), nullptr, 10));
        }
    }
    if (seeds.empty()) throw CliError{kExitConfig, {"--seeds produced an empty list"}};
    return seeds;
}

int cmd_sweep(PairSource& source, const SplitArgs& split_args, const ModelArgs& model_args,
              const std::vector<std::string>& seed_tokens, const OutputTarget& out) {
    require_valid([&] {
        auto p = split_args.validate();
        auto q = model_args.validate();
        p.insert(p.end(), q.begin(), q.end());
        return p;
    }());
    std::vector<std::uint64_t> seeds = parse_seed_list(seed_tokens);

    std::string label;
    auto [a, b] = source.load(&label);
    AlignedPair pair = align_or_exit(a, b);
    SweepResult result =
        seed_sweep(pair, split_args.spec(), model_args.build(split_args.seed), seeds, label);

    if (out.format == "json") {
        emit(out, "sweep.json", result.to_json().dump(2) + "\n");
    } else if (out.format == "csv") {
        emit(out, "sweep.csv", result.to_csv());
    } else {
        emit(out, "sweep.txt", result.to_text());
    }
    return kExitOk;
}

// ----------------------------------------------------------------------------
// fit-line
// ----------------------------------------------------------------------------

int cmd_fit_line(PairSource& source, double confidence, const std::string& pairing,
                 const OutputTarget& out) {
    if (!(confidence > 0.0 && confidence < 1.0)) {
        throw CliError{kExitConfig, {"--confidence must lie in (0,1), got " +
                                     format_double(confidence)}};
    }
    if (pairing != "auto" && pairing != "date" && pairing != "index") {
        throw CliError{kExitConfig, {"--pair must be auto, date or index"}};
    }

    std::string label;
    auto [a, b] = source.load(&label);

    std::vector<double> xs, ys;
    std::string pair_used;
    bool can_pos = a.bars.size() == b.bars.size();
    if (pairing == "date" || (pairing == "auto" && !can_pos)) {
        AlignedPair pair = align_or_exit(a, b);
        xs = pair.series_a();
        ys = pair.series_b();
        pair_used = "date";
    } else if (pairing == "index") {
        if (!can_pos) {
            throw CliError{kExitConfig,
                           {"--pair index needs equal-length series (" +
                            std::to_string(a.bars.size()) + " vs " +
                            std::to_string(b.bars.size()) + ")"}};
        }
        xs = a.closes();
        ys = b.closes();
        pair_used = "index";
    } else {  // auto with equal lengths: prefer dates when they overlap
        try {
            AlignedPair pair = align_by_date(a, b);
            xs = pair.series_a();
            ys = pair.series_b();
            pair_used = "date";
        } catch (const EmptyIntersectionError&) {
            // e.g. week-start vs week-end labelling of the same weeks
            xs = a.closes();
            ys = b.closes();
            pair_used = "index";
            std::cerr << "note: series share no dates; pairing rows positionally\n";
        }
    }

    LineFit fit = fit_line_with_ci(xs, ys, confidence);

    if (out.format == "json") {
        nlohmann::ordered_json j;
        j["x_market"] = a.market_id;
        j["y_market"] = b.market_id;
        j["pairing"] = pair_used;
        j["n"] = xs.size();
        j["confidence"] = confidence;
        j["slope"] = fit.slope;
        j["intercept"] = fit.intercept;
        j["r"] = fit.r;
        j["residual_std"] = fit.residual_std;
        j["t_critical"] = fit.t_critical;
        j["x"] = fit.x;
        j["fit"] = fit.fitted;
        j["lower"] = fit.lower;
        j["upper"] = fit.upper;
        emit(out, "fitline.json", j.dump(2) + "\n");
    } else if (out.format == "text") {
        std::ostringstream text;
        text << "fit: y = " << format_double(fit.slope) << " * x + "
             << format_double(fit.intercept) << "   (n=" << xs.size() << ", r="
             << format_fixed(fit.r, 4) << ", residual std=" << format_fixed(fit.residual_std, 3)
             << ", pairing=" << pair_used << ")\n";
        emit(out, "fitline.txt", text.str());
    } else {
        std::ostringstream csv;
        csv << "x,fit,lower,upper\n";
        for (std::size_t i = 0; i < fit.x.size(); ++i) {
            csv << format_double(fit.x[i]) << ',' << format_double(fit.fitted[i]) << ','
                << format_double(fit.lower[i]) << ',' << format_double(fit.upper[i]) << "\n";
        }
        emit(out, "fitline.csv", csv.str());
    }
    return kExitOk;
}

// ----------------------------------------------------------------------------
// fit / predict: model bundle round-trip
// ----------------------------------------------------------------------------

int cmd_fit(PairSource& source, const SplitArgs& split_args, const ModelArgs& model_args,
            const std::string& model_name, const OutputTarget& out) {
    require_valid([&] {
        auto p = split_args.validate();
        auto q = model_args.validate();
        p.insert(p.end(), q.begin(), q.end());
        return p;
    }());

    ModelArgs single = model_args;
    single.models = {model_name};
    std::vector<ModelSpec> specs = single.build(split_args.seed);

    std::string label;
    auto [a, b] = source.load(&label);
    FeatureMatrix fm = assemble(align_or_exit(a, b));
    auto [train, test] = split(fm, split_args.spec());
    Standardizer scaler = Standardizer::fit(train);
    FeatureMatrix train_s = scaler.apply(train);

    std::unique_ptr<FittedModel> model = fit_model(specs[0].config, train_s.rows, train_s.target);

    nlohmann::ordered_json bundle;
    bundle["name"] = specs[0].name;
    bundle["config"] = config_to_json(specs[0].config);
    bundle["feature_columns"] = fm.column_names;
    bundle["standardizer"] = {{"means", scaler.means()}, {"stds", scaler.stds()}};
    bundle["model"] = model->to_json();
    emit(out, "model.json", bundle.dump(2) + "\n");
    return kExitOk;
}

int cmd_predict(const std::string& model_path, const std::string& features_path,
                const OutputTarget& out) {
    std::ifstream mf(model_path);
    if (!mf) throw CliError{kExitData, {"cannot open model file: " + model_path}};
    nlohmann::json bundle = nlohmann::json::parse(mf, nullptr, /*allow_exceptions=*/true);
    std::unique_ptr<FittedModel> model = model_from_json(bundle.at("model"));
    std::vector<double> means = bundle.at("standardizer").at("means").get<std::vector<double>>();
    std::vector<double> stds = bundle.at("standardizer").at("stds").get<std::vector<double>>();

    std::ifstream ff(features_path);
    if (!ff) throw CliError{kExitData, {"cannot open features file: " + features_path}};
    std::string header;
    std::getline(ff, header);
    bool has_target = header.size() >= 7 && header.substr(header.size() - 7) == ",target";

    std::vector<std::string> dates;
    Matrix rows;
    std::vector<double> actual;
    std::string line;
    std::size_t lineno = 1;
    while (std::getline(ff, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string cell;
        std::getline(ss, cell, ',');
        dates.push_back(cell);
        std::vector<double> row;
        while (std::getline(ss, cell, ',')) row.push_back(std::strtod(cell.c_str(), nullptr));
        if (has_target) {
            if (row.empty()) {
                throw CliError{kExitData,
                               {"features row " + std::to_string(lineno) + " is empty"}};
            }
            actual.push_back(row.back());
            row.pop_back();
        }
        if (row.size() != means.size()) {
            throw CliError{kExitData,
                           {"features row " + std::to_string(lineno) + ": expected " +
                            std::to_string(means.size()) + " feature values, got " +
                            std::to_string(row.size())}};
        }
        for (std::size_t j = 0; j < row.size(); ++j) row[j] = (row[j] - means[j]) / stds[j];
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw CliError{kExitData, {"no feature rows in " + features_path}};

    std::vector<double> predictions = model->predict(rows);

    if (out.format == "json") {
        nlohmann::ordered_json j;
        j["dates"] = dates;
        j["predicted"] = predictions;
        if (has_target) j["actual"] = actual;
        emit(out, "predictions.json", j.dump(2) + "\n");
    } else {
        std::ostringstream csv;
        csv << (has_target ? "date,actual,predicted\n" : "date,predicted\n");
        for (std::size_t i = 0; i < predictions.size(); ++i) {
            csv << dates[i] << ',';
            if (has_target) csv << format_double(actual[i]) << ',';
            csv << format_double(predictions[i]) << "\n";
        }
        emit(out, "predictions.csv", csv.str());
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"cross-market statistics and regression toolkit"};
    app.require_subcommand(1);

    // stats
    StatsArgs stats_args;
    CLI::App* stats_cmd = app.add_subcommand("stats", "descriptive summary of one price column");
    stats_cmd->add_option("--corpus", stats_args.corpus,
                          "embedded dataset: aus-daily, usa-daily, aus-weekly, usa-weekly");
    stats_cmd->add_option("--csv", stats_args.csv, "OHLC csv file");
    stats_cmd->add_option("--date-format", stats_args.date_format, "auto|iso|dmy|dmon");
    stats_cmd->add_option("--column", stats_args.column, "open|high|low|close (default close)");

    // corr
    PairSource corr_source;
    CLI::App* corr_cmd = app.add_subcommand("corr", "OHLC correlation matrix of two markets");
    corr_source.add_options(corr_cmd);

    // features
    PairSource feat_source;
    CLI::App* feat_cmd =
        app.add_subcommand("features", "lag/rolling feature matrix for the aligned pair");
    feat_source.add_options(feat_cmd);

    // run
    PairSource run_source;
    SplitArgs run_split;
    ModelArgs run_models;
    std::string predictions_dir;
    CLI::App* run_cmd = app.add_subcommand("run", "train the model set and report test metrics");
    run_source.add_options(run_cmd);
    run_split.add_options(run_cmd);
    run_models.add_options(run_cmd);
    run_cmd->add_option("--predictions-dir", predictions_dir,
                        "write per-model date,actual,predicted csv files here");

    // sweep
    PairSource sweep_source;
    SplitArgs sweep_split;
    ModelArgs sweep_models;
    std::vector<std::string> seed_tokens{"1..10"};
    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "repeat the run over several shuffle seeds and aggregate");
    sweep_source.add_options(sweep_cmd);
    sweep_split.add_options(sweep_cmd, /*with_seed=*/false);
    sweep_models.add_options(sweep_cmd);
    sweep_cmd->add_option("--seeds", seed_tokens, "seed list, e.g. 1,2,3 or 1..10")
        ->delimiter(',');

    // fit-line
    PairSource line_source;
    line_source.corpus = "weekly";
    double confidence = 0.95;
    std::string pairing = "auto";
    CLI::App* line_cmd = app.add_subcommand(
        "fit-line", "straight-line fit of market B closes on market A closes, with CI band");
    line_source.add_options(line_cmd);
    line_cmd->add_option("--confidence", confidence, "band confidence level in (0,1)");
    line_cmd->add_option("--pair", pairing, "auto|date|index row pairing");

    // fit
    PairSource fit_source;
    SplitArgs fit_split;
    ModelArgs fit_models;
    std::string fit_model_name = "forest";
    CLI::App* fit_cmd = app.add_subcommand("fit", "fit one model and write a model bundle (json)");
    fit_source.add_options(fit_cmd);
    fit_split.add_options(fit_cmd);
    fit_models.add_options(fit_cmd);
    fit_cmd->add_option("--model", fit_model_name, "knn|svr-poly|svr-linear|forest|ols");

    // predict
    std::string model_path, features_path;
    CLI::App* pred_cmd =
        app.add_subcommand("predict", "apply a model bundle to a features csv");
    pred_cmd->add_option("--model", model_path, "model bundle from `fit`")->required();
    pred_cmd->add_option("--features", features_path, "csv from `features`")->required();

    // corpus
    CLI::App* corpus_cmd =
        app.add_subcommand("corpus", "embedded dataset manifest (row counts, ranges, notes)");

    // shared output options on every subcommand
    OutputTarget out;
    for (CLI::App* cmd : {stats_cmd, corr_cmd, feat_cmd, run_cmd, sweep_cmd, line_cmd, fit_cmd,
                          pred_cmd, corpus_cmd}) {
        cmd->add_option("--format", out.format, "text|csv|json");
        cmd->add_option("--output", out.path,
                        "output file (default: stdout, or $MARKETML_OUTPUT_DIR)");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitConfig;
    }

    try {
        // Commands whose natural product is a data series default to csv;
        // the report-style ones default to a text table.
        for (CLI::App* cmd : {corr_cmd, feat_cmd, line_cmd}) {
            if (cmd->parsed() && cmd->count("--format") == 0) out.format = "csv";
        }
        if (fit_cmd->parsed() && fit_cmd->count("--format") == 0) out.format = "json";
        if (corpus_cmd->parsed() && corpus_cmd->count("--format") == 0) out.format = "json";
        if (out.format != "text" && out.format != "csv" && out.format != "json") {
            throw CliError{kExitConfig, {"--format must be text, csv or json"}};
        }
        stats_args.out = out;
        if (stats_cmd->parsed()) return cmd_stats(stats_args);
        if (corr_cmd->parsed()) return cmd_corr(corr_source, out);
        if (feat_cmd->parsed()) return cmd_features(feat_source, out);
        if (run_cmd->parsed())
            return cmd_run(run_source, run_split, run_models, out, predictions_dir);
        if (sweep_cmd->parsed())
            return cmd_sweep(sweep_source, sweep_split, sweep_models, seed_tokens, out);
        if (line_cmd->parsed()) return cmd_fit_line(line_source, confidence, pairing, out);
        if (fit_cmd->parsed())
            return cmd_fit(fit_source, fit_split, fit_models, fit_model_name, out);
        if (pred_cmd->parsed()) return cmd_predict(model_path, features_path, out);
        if (corpus_cmd->parsed()) {
            emit(out, "corpus_manifest.json", corpus_manifest().dump(2) + "\n");
            return kExitOk;
        }
        return kExitConfig;
    } catch (const CliError& e) {
        for (const std::string& m : e.messages) std::cerr << "error: " << m << "\n";
        return e.code;
    } catch (const EmptyIntersectionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNoOverlap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitData;
    }
}
