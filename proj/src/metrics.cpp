#include "marketml/metrics.hpp"

#include <cmath>
#include <stdexcept>

#include "marketml/stats.hpp"

namespace marketml {

MetricsReport compute_metrics(std::span<const double> actual,
                              std::span<const double> predicted) {
    if (actual.size() != predicted.size()) {
        throw std::invalid_argument("compute_metrics: length mismatch");
    }
    std::size_t n = actual.size();
    if (n < 2) throw std::invalid_argument("compute_metrics needs n >= 2");
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(actual[i]) || !std::isfinite(predicted[i])) {
            throw std::invalid_argument("compute_metrics: non-finite value");
        }
    }

    MetricsReport r;
    r.n_test = n;
    double nd = static_cast<double>(n);

    double ss_err = 0, abs_err = 0;
    for (std::size_t i = 0; i < n; ++i) {
        double e = actual[i] - predicted[i];
        ss_err += e * e;
        abs_err += std::fabs(e);
    }
    r.mse = ss_err / nd;
    r.rmse = std::sqrt(r.mse);
    r.mae = abs_err / nd;

    double zbar = mean_of(actual);
    double ss_tot = 0;
    for (double z : actual) ss_tot += (z - zbar) * (z - zbar);
    if (ss_tot == 0) {
        r.warnings.push_back("r2 undefined: actuals are constant");
    } else {
        r.r2 = 1.0 - ss_err / ss_tot;
    }

    bool has_zero = false;
    for (double z : actual) has_zero |= (z == 0);
    if (has_zero) {
        r.warnings.push_back("relative errors undefined: an actual value is zero");
    } else {
        std::vector<double> rel(n);
        for (std::size_t i = 0; i < n; ++i) {
            rel[i] = std::fabs(actual[i] - predicted[i]) / std::fabs(actual[i]);
        }
        r.rel_err_mean = mean_of(rel);
        r.rel_err_std = sample_std(rel);
        r.mape = 100.0 * *r.rel_err_mean;
    }
    return r;
}

}  // namespace marketml
