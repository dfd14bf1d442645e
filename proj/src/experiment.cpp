#include "marketml/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "marketml/format.hpp"
#include "marketml/stats.hpp"

namespace marketml {

namespace {

std::string split_mode_name(SplitMode mode) {
    return mode == SplitMode::Shuffled ? "shuffled" : "chronological";
}

nlohmann::ordered_json metrics_json(const MetricsReport& m) {
    nlohmann::ordered_json j;
    j["n_test"] = m.n_test;
    j["mse"] = m.mse;
    j["rmse"] = m.rmse;
    j["mae"] = m.mae;
    if (m.r2) j["r2"] = *m.r2;
    if (m.mape) j["mape"] = *m.mape;
    if (m.rel_err_mean) j["rel_err_mean"] = *m.rel_err_mean;
    if (m.rel_err_std) j["rel_err_std"] = *m.rel_err_std;
    if (!m.warnings.empty()) j["warnings"] = m.warnings;
    return j;
}

std::string opt_fixed(const std::optional<double>& v, int precision) {
    return v ? format_fixed(*v, precision) : std::string("-");
}

std::string opt_plain(const std::optional<double>& v) {
    return v ? format_double(*v) : std::string("");
}

}  // namespace

std::vector<ModelSpec> default_model_set() {
    SvrConfig poly;  // defaults are the poly kernel
    SvrConfig linear = poly;
    linear.kernel = SvrKernel::Linear;
    return {
        {"kNN", KnnConfig{}},
        {"SVR", poly},
        {"Linear SVR", linear},
        {"Random Forest", ForestConfig{}},
    };
}

ExperimentResult run_experiment(const AlignedPair& pair, const SplitSpec& split_spec,
                                const std::vector<ModelSpec>& models,
                                const std::string& corpus_label) {
    FeatureMatrix fm = assemble(pair);
    auto [train, test] = split(fm, split_spec);
    Standardizer scaler = Standardizer::fit(train);
    FeatureMatrix train_s = scaler.apply(train);
    FeatureMatrix test_s = scaler.apply(test);

    ExperimentResult result;
    result.corpus = corpus_label;
    result.split = split_spec;
    result.feature_columns = fm.column_names;
    result.n_rows = fm.n_rows();
    result.n_train = train.n_rows();
    result.n_test = test.n_rows();
    result.test_dates = test.row_dates;
    result.test_actual = test.target;

    for (const ModelSpec& spec : models) {
        ModelOutcome outcome;
        outcome.name = spec.name;
        outcome.config = spec.config;
        try {
            std::unique_ptr<FittedModel> model =
                fit_model(spec.config, train_s.rows, train_s.target, &fm.column_names);
            outcome.predictions = model->predict(test_s.rows);
            outcome.metrics = compute_metrics(test.target, outcome.predictions);
            if (const auto* svr = dynamic_cast<const SvrModel*>(model.get());
                svr && !svr->converged) {
                outcome.note = "svr did not reach the KKT tolerance within max_passes (" +
                               std::to_string(svr->iterations) + " iterations)";
            }
        } catch (const std::exception& e) {
            outcome.error = e.what();
            outcome.predictions.clear();
            outcome.metrics.reset();
        }
        result.models.push_back(std::move(outcome));
    }
    return result;
}

nlohmann::ordered_json ExperimentResult::to_json() const {
    nlohmann::ordered_json j;
    j["corpus"] = corpus;
    j["split"] = {{"mode", split_mode_name(split.mode)},
                  {"test_fraction", split.test_fraction},
                  {"seed", split.seed}};
    j["feature_columns"] = feature_columns;
    j["n_rows"] = n_rows;
    j["n_train"] = n_train;
    j["n_test"] = n_test;

    j["models"] = nlohmann::json::array();
    for (const ModelOutcome& m : models) {
        nlohmann::ordered_json mj;
        mj["name"] = m.name;
        mj["config"] = config_to_json(m.config);
        if (m.metrics) mj["metrics"] = metrics_json(*m.metrics);
        if (!m.note.empty()) mj["note"] = m.note;
        if (!m.error.empty()) mj["error"] = m.error;
        j["models"].push_back(std::move(mj));
    }

    nlohmann::ordered_json pj;
    nlohmann::ordered_json dates = nlohmann::json::array();
    for (const Date& d : test_dates) dates.push_back(to_iso(d));
    pj["dates"] = std::move(dates);
    pj["actual"] = test_actual;
    pj["per_model"] = nlohmann::ordered_json::object();
    for (const ModelOutcome& m : models) {
        if (!m.predictions.empty()) pj["per_model"][m.name] = m.predictions;
    }
    j["predictions"] = std::move(pj);
    return j;
}

std::string ExperimentResult::to_text() const {
    std::ostringstream out;
    out << "corpus: " << corpus << "  split: " << split_mode_name(split.mode)
        << "  test_fraction: " << format_double(split.test_fraction)
        << "  seed: " << split.seed << "\n";
    out << "rows: " << n_rows << " (train " << n_train << ", test " << n_test << ")\n\n";

    // Mirror the comparison-table layout: model, MSE, MAE, R2, then the
    // relative-error pair.
    const char* hdr[] = {"Model", "MSE", "MAE", "R2", "Rel. Error Mean", "Rel. Error Std"};
    std::vector<std::vector<std::string>> cells;
    cells.emplace_back(std::begin(hdr), std::end(hdr));
    for (const ModelOutcome& m : models) {
        std::vector<std::string> row{m.name};
        if (m.metrics) {
            row.push_back(format_fixed(m.metrics->mse, 2));
            row.push_back(format_fixed(m.metrics->mae, 2));
            row.push_back(opt_fixed(m.metrics->r2, 3));
            row.push_back(opt_fixed(m.metrics->rel_err_mean, 6));
            row.push_back(opt_fixed(m.metrics->rel_err_std, 6));
        } else {
            row.insert(row.end(), {"failed", "-", "-", "-", "-"});
        }
        cells.push_back(std::move(row));
    }
    std::size_t widths[6] = {0, 0, 0, 0, 0, 0};
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
    }
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << row[c] << std::string(widths[c] - row[c].size() + (c + 1 < row.size() ? 2 : 0), ' ');
        }
        out << "\n";
    }
    for (const ModelOutcome& m : models) {
        if (!m.error.empty()) out << "\n" << m.name << " failed: " << m.error << "\n";
        if (!m.note.empty()) out << "\n" << m.name << ": " << m.note << "\n";
    }
    return out.str();
}

std::string ExperimentResult::to_csv() const {
    std::ostringstream out;
    out << "model,mse,mae,r2,rel_err_mean,rel_err_std,rmse,mape,n_test,error\n";
    for (const ModelOutcome& m : models) {
        out << m.name << ',';
        if (m.metrics) {
            const MetricsReport& mm = *m.metrics;
            out << format_double(mm.mse) << ',' << format_double(mm.mae) << ','
                << opt_plain(mm.r2) << ',' << opt_plain(mm.rel_err_mean) << ','
                << opt_plain(mm.rel_err_std) << ',' << format_double(mm.rmse) << ','
                << opt_plain(mm.mape) << ',' << mm.n_test << ',';
        } else {
            out << ",,,,,,,,";
        }
        out << m.error << "\n";
    }
    return out.str();
}

std::string ExperimentResult::predictions_csv(const ModelOutcome& outcome) const {
    std::ostringstream out;
    out << "date,actual,predicted\n";
    for (std::size_t i = 0; i < outcome.predictions.size(); ++i) {
        out << to_iso(test_dates[i]) << ',' << format_double(test_actual[i]) << ','
            << format_double(outcome.predictions[i]) << "\n";
    }
    return out.str();
}

// ----------------------------------------------------------------------------
// Seed sweep
// ----------------------------------------------------------------------------

namespace {

MetricSummary summarize_metric(std::vector<double> values) {
    MetricSummary s;
    s.n = static_cast<int>(values.size());
    if (values.empty()) return s;
    std::sort(values.begin(), values.end());
    s.min = values.front();
    s.max = values.back();
    std::size_t n = values.size();
    s.median = n % 2 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
    return s;
}

nlohmann::ordered_json metric_summary_json(const MetricSummary& s) {
    return {{"median", s.median}, {"min", s.min}, {"max", s.max}, {"n", s.n}};
}

}  // namespace

SweepResult seed_sweep(const AlignedPair& pair, SplitSpec base,
                       const std::vector<ModelSpec>& models,
                       std::span<const std::uint64_t> seeds,
                       const std::string& corpus_label) {
    if (seeds.empty()) throw std::invalid_argument("seed sweep needs at least one seed");
    base.mode = SplitMode::Shuffled;

    struct Collected {
        std::vector<double> mse, mae, r2, mape, rel_mean, rel_std;
        int failures = 0;
    };
    std::vector<Collected> collected(models.size());

    for (std::uint64_t seed : seeds) {
        SplitSpec spec = base;
        spec.seed = seed;
        // Forest randomness follows the run seed, so the sweep measures
        // sensitivity to the whole seeded pipeline, not just the split.
        std::vector<ModelSpec> seeded = models;
        for (ModelSpec& m : seeded) {
            if (auto* forest = std::get_if<ForestConfig>(&m.config)) forest->seed = seed;
        }
        ExperimentResult run = run_experiment(pair, spec, seeded, corpus_label);
        for (std::size_t m = 0; m < models.size(); ++m) {
            const ModelOutcome& o = run.models[m];
            if (!o.metrics) {
                ++collected[m].failures;
                continue;
            }
            collected[m].mse.push_back(o.metrics->mse);
            collected[m].mae.push_back(o.metrics->mae);
            if (o.metrics->r2) collected[m].r2.push_back(*o.metrics->r2);
            if (o.metrics->mape) collected[m].mape.push_back(*o.metrics->mape);
            if (o.metrics->rel_err_mean) collected[m].rel_mean.push_back(*o.metrics->rel_err_mean);
            if (o.metrics->rel_err_std) collected[m].rel_std.push_back(*o.metrics->rel_err_std);
        }
    }

    SweepResult result;
    result.corpus = corpus_label;
    result.seeds.assign(seeds.begin(), seeds.end());
    result.base = base;
    for (std::size_t m = 0; m < models.size(); ++m) {
        SweepModelSummary s;
        s.name = models[m].name;
        s.mse = summarize_metric(std::move(collected[m].mse));
        s.mae = summarize_metric(std::move(collected[m].mae));
        s.r2 = summarize_metric(std::move(collected[m].r2));
        s.mape = summarize_metric(std::move(collected[m].mape));
        s.rel_err_mean = summarize_metric(std::move(collected[m].rel_mean));
        s.rel_err_std = summarize_metric(std::move(collected[m].rel_std));
        s.n_failures = collected[m].failures;
        result.models.push_back(std::move(s));
    }
    return result;
}

std::string SweepResult::ranking_note() const {
    const SweepModelSummary* forest = nullptr;
    const SweepModelSummary* knn = nullptr;
    for (const SweepModelSummary& m : models) {
        if (m.name == "Random Forest") forest = &m;
        if (m.name == "kNN") knn = &m;
    }
    if (!forest || !knn || forest->mse.n == 0 || knn->mse.n == 0) return "";
    bool holds = forest->mse.median <= knn->mse.median;
    return std::string("forest median MSE <= knn median MSE: ") +
           (holds ? "reproduced" : "deviation");
}

nlohmann::ordered_json SweepResult::to_json() const {
    nlohmann::ordered_json j;
    j["corpus"] = corpus;
    j["mode"] = split_mode_name(base.mode);
    j["test_fraction"] = base.test_fraction;
    j["seeds"] = seeds;
    if (std::string note = ranking_note(); !note.empty()) j["ranking"] = note;
    j["models"] = nlohmann::json::array();
    for (const SweepModelSummary& m : models) {
        nlohmann::ordered_json mj;
        mj["name"] = m.name;
        mj["mse"] = metric_summary_json(m.mse);
        mj["mae"] = metric_summary_json(m.mae);
        mj["r2"] = metric_summary_json(m.r2);
        mj["mape"] = metric_summary_json(m.mape);
        mj["rel_err_mean"] = metric_summary_json(m.rel_err_mean);
        mj["rel_err_std"] = metric_summary_json(m.rel_err_std);
        mj["failures"] = m.n_failures;
        j["models"].push_back(std::move(mj));
    }
    return j;
}

std::string SweepResult::to_text() const {
    std::ostringstream out;
    out << "corpus: " << corpus << "  seeds: " << seeds.size()
        << "  test_fraction: " << format_double(base.test_fraction) << "\n\n";
    out << "Model             median MSE      min MSE      max MSE  median R2\n";
    for (const SweepModelSummary& m : models) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%-16s %11.2f  %11.2f  %11.2f  %9.3f\n", m.name.c_str(),
                      m.mse.median, m.mse.min, m.mse.max, m.r2.median);
        out << buf;
        if (m.n_failures > 0) out << "  (" << m.n_failures << " failed runs)\n";
    }
    if (std::string note = ranking_note(); !note.empty()) out << "\n" << note << "\n";
    return out.str();
}

std::string SweepResult::to_csv() const {
    std::ostringstream out;
    out << "model,metric,median,min,max,n\n";
    for (const SweepModelSummary& m : models) {
        auto line = [&](const char* name, const MetricSummary& s) {
            out << m.name << ',' << name << ',' << format_double(s.median) << ','
                << format_double(s.min) << ',' << format_double(s.max) << ',' << s.n << "\n";
        };
        line("mse", m.mse);
        line("mae", m.mae);
        line("r2", m.r2);
        line("mape", m.mape);
        line("rel_err_mean", m.rel_err_mean);
        line("rel_err_std", m.rel_err_std);
    }
    return out.str();
}

}  // namespace marketml
