#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "marketml/features.hpp"
#include "marketml/market_data.hpp"
#include "marketml/metrics.hpp"
#include "marketml/models.hpp"

namespace marketml {

struct ModelSpec {
    std::string name;
    ModelConfig config;
};

/// The default four-model comparison: kNN (k=5), SVR with a degree-3 poly
/// kernel, SVR with a linear kernel, and a 100-tree random forest.
std::vector<ModelSpec> default_model_set();

struct ModelOutcome {
    std::string name;
    ModelConfig config;
    std::optional<MetricsReport> metrics;  // absent when the fit failed
    std::vector<double> predictions;       // test-set predictions, empty on failure
    std::string error;                     // failure description, empty on success
    std::string note;                      // e.g. SVR non-convergence flag
};

struct ExperimentResult {
    std::string corpus;
    SplitSpec split;
    std::vector<std::string> feature_columns;
    std::size_t n_rows = 0, n_train = 0, n_test = 0;
    std::vector<Date> test_dates;
    std::vector<double> test_actual;
    std::vector<ModelOutcome> models;  // in input order

    nlohmann::ordered_json to_json() const;
    std::string to_text() const;  // aligned metrics table
    std::string to_csv() const;
    /// date,actual,predicted rows for one model (plot-ready).
    std::string predictions_csv(const ModelOutcome& outcome) const;
};

/// Full pipeline: assemble -> split -> standardize (fit on train) -> fit
/// and score every model on the shared test partition. A model failure is
/// recorded in its outcome without aborting the others.
ExperimentResult run_experiment(const AlignedPair& pair, const SplitSpec& split_spec,
                                const std::vector<ModelSpec>& models,
                                const std::string& corpus_label = "");

struct MetricSummary {
    double median = 0, min = 0, max = 0;
    int n = 0;  // runs with the metric present
};

struct SweepModelSummary {
    std::string name;
    MetricSummary mse, mae, r2, mape, rel_err_mean, rel_err_std;
    int n_failures = 0;
};

struct SweepResult {
    std::string corpus;
    std::vector<std::uint64_t> seeds;
    SplitSpec base;  // seed field varies per run
    std::vector<SweepModelSummary> models;

    /// "reproduced" / "deviation": forest-beats-knn median MSE ranking,
    /// present when both models were swept.
    std::string ranking_note() const;

    nlohmann::ordered_json to_json() const;
    std::string to_text() const;
    std::string to_csv() const;
};

/// run_experiment once per seed (shuffled mode) and aggregate
/// median/min/max of each metric per model.
SweepResult seed_sweep(const AlignedPair& pair, SplitSpec base,
                       const std::vector<ModelSpec>& models,
                       std::span<const std::uint64_t> seeds,
                       const std::string& corpus_label = "");

}  // namespace marketml
