#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace marketml {

/// Row-for-row the summary block the `stats` command prints: count, central
/// moments, five-number summary, and shape statistics.
struct DescriptiveSummary {
    std::size_t count = 0;
    double mean = 0, std_dev = 0, min = 0, q25 = 0, median = 0, q75 = 0, max = 0;
    double range = 0, variance = 0;
    // Absent when the series is constant (estimators undefined).
    std::optional<double> skewness, excess_kurtosis;
};

/// Sample mean and sample (n-1) standard deviation / variance.
double mean_of(std::span<const double> xs);
double sample_std(std::span<const double> xs);
double sample_variance(std::span<const double> xs);

/// Order statistic with linear interpolation: h = (n-1)p on the sorted
/// vector. p in [0,1]; throws std::invalid_argument otherwise.
double quantile(std::span<const double> xs, double p);

/// Adjusted Fisher-Pearson skewness: g1 * sqrt(n(n-1))/(n-2) where g1 uses
/// the population std. Requires n >= 3 and nonzero variance.
double skewness(std::span<const double> xs);

/// Bias-corrected excess kurtosis (G2). Zero in expectation on normal data.
/// Requires n >= 4 and nonzero variance.
double excess_kurtosis(std::span<const double> xs);

/// Requires n >= 4; all finite.
DescriptiveSummary summarize(std::span<const double> xs);

/// Pearson correlation. Throws on length mismatch, n < 2, or a constant
/// input.
double pearson(std::span<const double> xs, std::span<const double> ys);

struct CorrelationMatrix {
    std::vector<std::string> labels;
    std::vector<std::vector<double>> r;  // symmetric, unit diagonal
};

using NamedColumn = std::pair<std::string, std::vector<double>>;

/// Pairwise Pearson over >= 2 equal-length columns.
CorrelationMatrix correlation_matrix(const std::vector<NamedColumn>& columns);

/// Straight-line OLS fit with the mean-response confidence band evaluated
/// at the input points (sorted ascending by x).
struct LineFit {
    double slope = 0, intercept = 0;
    double r = 0;             // Pearson of (x, y)
    double residual_std = 0;  // s, from SS_res/(n-2)
    double t_critical = 0;
    std::vector<double> x, fitted, lower, upper;
};

/// Requires n >= 3, nonconstant x, confidence in (0,1). Band half-width at
/// x0 is t * s * sqrt(1/n + (x0 - xbar)^2 / Sxx).
LineFit fit_line_with_ci(std::span<const double> xs, std::span<const double> ys,
                         double confidence = 0.95);

/// Student-t distribution function, via the regularized incomplete beta.
double student_t_cdf(double t, double dof);

/// Quantile by bisection on the CDF (to 1e-10). p in (0,1), dof > 0.
double student_t_quantile(double p, double dof);

/// Regularized incomplete beta I_x(a, b) (continued-fraction evaluation).
double incomplete_beta(double a, double b, double x);

}  // namespace marketml
