#include "marketml/stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace marketml {

namespace {

void require_finite(std::span<const double> xs) {
    for (double x : xs) {
        if (!std::isfinite(x)) throw std::invalid_argument("non-finite value in input");
    }
}

}  // namespace

double mean_of(std::span<const double> xs) {
    if (xs.empty()) throw std::invalid_argument("mean of empty vector");
    double sum = 0;
    for (double x : xs) sum += x;
    return sum / static_cast<double>(xs.size());
}

double sample_variance(std::span<const double> xs) {
    if (xs.size() < 2) throw std::invalid_argument("sample variance needs n >= 2");
    double m = mean_of(xs);
    double ss = 0;
    for (double x : xs) ss += (x - m) * (x - m);
    return ss / static_cast<double>(xs.size() - 1);
}

double sample_std(std::span<const double> xs) { return std::sqrt(sample_variance(xs)); }

double quantile(std::span<const double> xs, double p) {
    if (xs.empty()) throw std::invalid_argument("quantile of empty vector");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("quantile fraction outside [0,1]");
    require_finite(xs);
    std::vector<double> sorted(xs.begin(), xs.end());
    std::sort(sorted.begin(), sorted.end());
    double h = static_cast<double>(sorted.size() - 1) * p;
    std::size_t lo = static_cast<std::size_t>(h);
    if (lo + 1 >= sorted.size()) return sorted.back();
    double frac = h - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

double skewness(std::span<const double> xs) {
    std::size_t n = xs.size();
    if (n < 3) throw std::invalid_argument("skewness needs n >= 3");
    double m = mean_of(xs);
    double m2 = 0, m3 = 0;
    for (double x : xs) {
        double d = x - m;
        m2 += d * d;
        m3 += d * d * d;
    }
    m2 /= static_cast<double>(n);
    m3 /= static_cast<double>(n);
    if (m2 <= 0) throw std::invalid_argument("skewness undefined for constant input");
    double g1 = m3 / std::pow(m2, 1.5);
    double nd = static_cast<double>(n);
    return g1 * std::sqrt(nd * (nd - 1.0)) / (nd - 2.0);
}

double excess_kurtosis(std::span<const double> xs) {
    std::size_t n = xs.size();
    if (n < 4) throw std::invalid_argument("kurtosis needs n >= 4");
    double m = mean_of(xs);
    double m2 = 0, m4 = 0;
    for (double x : xs) {
        double d = x - m;
        m2 += d * d;
        m4 += d * d * d * d;
    }
    m2 /= static_cast<double>(n);
    m4 /= static_cast<double>(n);
    if (m2 <= 0) throw std::invalid_argument("kurtosis undefined for constant input");
    double g2 = m4 / (m2 * m2) - 3.0;
    double nd = static_cast<double>(n);
    return ((nd + 1.0) * g2 + 6.0) * (nd - 1.0) / ((nd - 2.0) * (nd - 3.0));
}

DescriptiveSummary summarize(std::span<const double> xs) {
    if (xs.size() < 4) throw std::invalid_argument("summarize needs n >= 4");
    require_finite(xs);

    DescriptiveSummary s;
    s.count = xs.size();
    s.mean = mean_of(xs);
    s.variance = sample_variance(xs);
    s.std_dev = std::sqrt(s.variance);
    s.min = quantile(xs, 0.0);
    s.q25 = quantile(xs, 0.25);
    s.median = quantile(xs, 0.5);
    s.q75 = quantile(xs, 0.75);
    s.max = quantile(xs, 1.0);
    s.range = s.max - s.min;
    if (s.variance > 0) {
        s.skewness = skewness(xs);
        s.excess_kurtosis = excess_kurtosis(xs);
    }
    return s;
}

double pearson(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("pearson: length mismatch");
    if (xs.size() < 2) throw std::invalid_argument("pearson needs n >= 2");
    double mx = mean_of(xs), my = mean_of(ys);
    double sxy = 0, sxx = 0, syy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double dx = xs[i] - mx, dy = ys[i] - my;
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if (sxx == 0 || syy == 0) {
        throw std::invalid_argument("pearson undefined for a constant input");
    }
    // Rounding can push a perfect correlation a couple of ulps past 1.
    return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

CorrelationMatrix correlation_matrix(const std::vector<NamedColumn>& columns) {
    if (columns.size() < 2) throw std::invalid_argument("correlation matrix needs >= 2 columns");
    std::size_t len = columns.front().second.size();
    for (const auto& [name, col] : columns) {
        if (col.size() != len) {
            throw std::invalid_argument("correlation matrix: column \"" + name +
                                        "\" has mismatched length");
        }
    }
    std::size_t n = columns.size();
    CorrelationMatrix cm;
    cm.labels.reserve(n);
    for (const auto& [name, col] : columns) cm.labels.push_back(name);
    cm.r.assign(n, std::vector<double>(n, 1.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            double r = pearson(columns[i].second, columns[j].second);
            cm.r[i][j] = r;
            cm.r[j][i] = r;
        }
    }
    return cm;
}

LineFit fit_line_with_ci(std::span<const double> xs, std::span<const double> ys,
                         double confidence) {
    std::size_t n = xs.size();
    if (n != ys.size()) throw std::invalid_argument("fit_line_with_ci: length mismatch");
    if (n < 3) throw std::invalid_argument("fit_line_with_ci needs n >= 3");
    if (!(confidence > 0.0 && confidence < 1.0)) {
        throw std::invalid_argument("confidence must lie in (0,1)");
    }
    double xbar = mean_of(xs), ybar = mean_of(ys);
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (xs[i] - xbar) * (xs[i] - xbar);
        sxy += (xs[i] - xbar) * (ys[i] - ybar);
    }
    if (sxx == 0) throw std::invalid_argument("fit_line_with_ci: x is constant");

    LineFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = ybar - fit.slope * xbar;
    fit.r = pearson(xs, ys);

    double ss_res = 0;
    for (std::size_t i = 0; i < n; ++i) {
        double resid = ys[i] - (fit.slope * xs[i] + fit.intercept);
        ss_res += resid * resid;
    }
    double nd = static_cast<double>(n);
    fit.residual_std = std::sqrt(ss_res / (nd - 2.0));
    fit.t_critical = student_t_quantile(0.5 + confidence / 2.0, nd - 2.0);

    std::vector<double> order(xs.begin(), xs.end());
    std::sort(order.begin(), order.end());
    fit.x = order;
    fit.fitted.reserve(n);
    fit.lower.reserve(n);
    fit.upper.reserve(n);
    for (double x : order) {
        double yhat = fit.slope * x + fit.intercept;
        double half = fit.t_critical * fit.residual_std *
                      std::sqrt(1.0 / nd + (x - xbar) * (x - xbar) / sxx);
        fit.fitted.push_back(yhat);
        fit.lower.push_back(yhat - half);
        fit.upper.push_back(yhat + half);
    }
    return fit;
}

// ----------------------------------------------------------------------------
// Student-t distribution
// ----------------------------------------------------------------------------

namespace {

// Continued fraction for the incomplete beta (Lentz's algorithm).
double beta_cf(double a, double b, double x) {
    constexpr int kMaxIter = 300;
    constexpr double kEps = 3e-16;
    constexpr double kTiny = 1e-300;

    double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        double m2 = 2.0 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < kEps) break;
    }
    return h;
}

}  // namespace

double incomplete_beta(double a, double b, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                      a * std::log(x) + b * std::log1p(-x);
    double front = std::exp(ln_front);
    // Use the symmetry that keeps the continued fraction convergent.
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return front * beta_cf(a, b, x) / a;
    }
    return 1.0 - front * beta_cf(b, a, 1.0 - x) / b;
}

double student_t_cdf(double t, double dof) {
    if (dof <= 0) throw std::invalid_argument("t distribution needs dof > 0");
    if (t == 0.0) return 0.5;
    double x = dof / (dof + t * t);
    double tail = 0.5 * incomplete_beta(dof / 2.0, 0.5, x);
    return t > 0 ? 1.0 - tail : tail;
}

double student_t_quantile(double p, double dof) {
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("t quantile needs p in (0,1)");
    if (dof <= 0) throw std::invalid_argument("t distribution needs dof > 0");
    if (p == 0.5) return 0.0;

    // Bracket, then bisect the CDF to 1e-10.
    double lo = -1.0, hi = 1.0;
    while (student_t_cdf(lo, dof) > p) lo *= 2.0;
    while (student_t_cdf(hi, dof) < p) hi *= 2.0;
    for (int i = 0; i < 200 && hi - lo > 1e-10; ++i) {
        double mid = 0.5 * (lo + hi);
        if (student_t_cdf(mid, dof) < p) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace marketml
