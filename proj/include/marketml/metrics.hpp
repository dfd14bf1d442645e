#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace marketml {

/// Error metrics of one model on one test partition. r2 is absent when the
/// actuals are constant; the relative-error family is absent when any
/// actual is zero — absent, with a warning, never coerced to 0.
struct MetricsReport {
    std::size_t n_test = 0;
    double mse = 0;
    double rmse = 0;  // sqrt(mse) exactly
    double mae = 0;
    std::optional<double> r2;
    std::optional<double> mape;          // percent; 100 * rel_err_mean
    std::optional<double> rel_err_mean;  // mean of |z - zhat| / |z|
    std::optional<double> rel_err_std;   // sample std of the same residual set
    std::vector<std::string> warnings;
};

/// Requires equal lengths >= 2 and finite inputs.
MetricsReport compute_metrics(std::span<const double> actual,
                              std::span<const double> predicted);

}  // namespace marketml
