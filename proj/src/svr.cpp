#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "marketml/models.hpp"

namespace marketml {

double kernel_value(const SvrConfig& config, std::span<const double> u,
                    std::span<const double> v) {
    double dot = 0;
    for (std::size_t i = 0; i < u.size(); ++i) dot += u[i] * v[i];
    if (config.kernel == SvrKernel::Linear) return dot;
    return std::pow(config.gamma * dot + config.coef0, config.degree);
}

std::vector<double> SvrModel::predict(const Matrix& X) const {
    std::vector<double> out;
    out.reserve(X.size());
    for (const auto& row : X) {
        if (row.size() != n_features) {
            throw std::invalid_argument("svr predict: feature count mismatch");
        }
        double f = bias;
        for (std::size_t s = 0; s < support_vectors.size(); ++s) {
            f += beta[s] * kernel_value(config, support_vectors[s], row);
        }
        out.push_back(f);
    }
    return out;
}

nlohmann::ordered_json SvrModel::to_json() const {
    nlohmann::ordered_json j;
    j["kind"] = kind();
    j["kernel"] = config.kernel == SvrKernel::Linear ? "linear" : "poly";
    j["c"] = config.c;
    j["epsilon"] = config.epsilon;
    j["gamma"] = config.gamma;
    j["degree"] = config.degree;
    j["coef0"] = config.coef0;
    j["n_features"] = n_features;
    j["bias"] = bias;
    j["converged"] = converged;
    j["iterations"] = iterations;
    j["support_vectors"] = support_vectors;
    j["beta"] = beta;
    return j;
}

namespace {

/// SMO working state for the epsilon-insensitive dual:
///   maximize  -1/2 sum_ij b_i b_j K_ij - eps sum_i |b_i| + sum_i y_i b_i
///   subject to  sum_i b_i = 0,  -C <= b_i <= C
/// where b_i = alpha_i - alpha_i^* (the box and complementarity of the
/// alpha pair collapse onto the sign of b_i).
class SmoSolver {
public:
    SmoSolver(const Matrix& x, const std::vector<double>& y, const SvrConfig& cfg)
        : y_(y), cfg_(cfg), n_(x.size()) {
        kernel_.assign(n_, std::vector<double>(n_));
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = 0; j <= i; ++j) {
                double k = kernel_value(cfg_, x[i], x[j]);
                if (!std::isfinite(k)) {
                    throw std::runtime_error("svr: non-finite kernel value");
                }
                kernel_[i][j] = k;
                kernel_[j][i] = k;
            }
        }
        beta_.assign(n_, 0.0);
        f_nb_.assign(n_, 0.0);
    }

    void solve() {
        const double tol = cfg_.tol;
        for (iterations_ = 0; iterations_ < cfg_.max_passes; ++iterations_) {
            if (iterations_ > 0 && iterations_ % 256 == 0) refresh_cache();

            // Maximal-violating-pair selection: each sample's state pins the
            // bias to an interval; the optimum is reached when the largest
            // lower bound and the smallest upper bound stop conflicting.
            Gap gap = interval_gap();
            bias_ = gap.bias;
            max_violation_ = gap.violation;
            if (max_violation_ <= tol) {
                converged_ = true;
                return;
            }
            // The L-extreme wants its coefficient to grow, the H-extreme to
            // shrink; exchanging mass between them closes the gap directly.
            if (try_pair(gap.i_lo, gap.i_hi)) continue;

            // Float corner: fall back to every violator against everyone.
            bool progressed = false;
            std::vector<std::pair<double, std::size_t>> violators;
            for (std::size_t i = 0; i < n_; ++i) {
                double v = kkt_violation(i);
                if (v > tol) violators.emplace_back(v, i);
            }
            std::sort(violators.begin(), violators.end(),
                      [](const auto& a, const auto& b) {
                          return a.first > b.first || (a.first == b.first && a.second < b.second);
                      });
            for (const auto& [viol, i] : violators) {
                for (std::size_t j = 0; j < n_ && !progressed; ++j) {
                    if (j != i && try_pair(i, j)) progressed = true;
                }
                if (progressed) break;
            }
            if (!progressed) {
                // No pair can improve the dual any further; converged_
                // stays false when the KKT gap is still above tol.
                return;
            }
        }
        // Iteration cap hit: refresh the state so the reported bias and
        // violation reflect the final coefficients.
        refresh_cache();
        Gap gap = interval_gap();
        bias_ = gap.bias;
        max_violation_ = gap.violation;
    }

    double bias() const { return bias_; }
    double max_violation() const { return max_violation_; }
    const std::vector<double>& beta() const { return beta_; }
    bool converged() const { return converged_; }
    int iterations() const { return iterations_; }

    double dual_objective() const {
        double quad = 0, l1 = 0, lin = 0;
        for (std::size_t i = 0; i < n_; ++i) {
            if (beta_[i] == 0) continue;
            for (std::size_t j = 0; j < n_; ++j) quad += beta_[i] * beta_[j] * kernel_[i][j];
            l1 += std::fabs(beta_[i]);
            lin += y_[i] * beta_[i];
        }
        return -0.5 * quad - cfg_.epsilon * l1 + lin;
    }

    /// Distance by which sample i currently violates its KKT condition.
    double kkt_violation(std::size_t i) const {
        const double c = cfg_.c;
        const double eps = cfg_.epsilon;
        const double bound_eps = 1e-12 * std::max(1.0, c);
        double r = y_[i] - f_nb_[i] - bias_;
        double b = beta_[i];
        if (std::fabs(b) <= bound_eps) return std::max(0.0, std::fabs(r) - eps);
        if (b >= c - bound_eps) return std::max(0.0, eps - r);
        if (b <= -c + bound_eps) return std::max(0.0, r + eps);
        return b > 0 ? std::fabs(r - eps) : std::fabs(r + eps);
    }

    struct Gap {
        double bias = 0;
        double violation = 0;
        std::size_t i_lo = 0, i_hi = 0;  // samples pinning L and H
    };

    /// Bias interval of each sample (a point for free vectors, a half-line
    /// at the bounds, [v-eps, v+eps] at zero). The midpoint of
    /// [max lower, min upper] is the minimax bias; (L - H)/2 is exactly the
    /// violation it cannot remove.
    Gap interval_gap() const {
        const double c = cfg_.c;
        const double eps = cfg_.epsilon;
        const double bound_eps = 1e-12 * std::max(1.0, c);
        Gap g;
        double lo = -std::numeric_limits<double>::infinity();
        double hi = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < n_; ++i) {
            double b = beta_[i];
            double v = y_[i] - f_nb_[i];
            double lo_i = -std::numeric_limits<double>::infinity();
            double hi_i = std::numeric_limits<double>::infinity();
            if (std::fabs(b) <= bound_eps) {
                lo_i = v - eps;
                hi_i = v + eps;
            } else if (b >= c - bound_eps) {
                hi_i = v - eps;
            } else if (b <= -c + bound_eps) {
                lo_i = v + eps;
            } else if (b > 0) {
                lo_i = hi_i = v - eps;
            } else {
                lo_i = hi_i = v + eps;
            }
            if (lo_i > lo) {
                lo = lo_i;
                g.i_lo = i;
            }
            if (hi_i < hi) {
                hi = hi_i;
                g.i_hi = i;
            }
        }
        if (!std::isfinite(lo) && !std::isfinite(hi)) {
            g.bias = 0;
        } else if (!std::isfinite(lo)) {
            g.bias = hi;
        } else if (!std::isfinite(hi)) {
            g.bias = lo;
        } else {
            g.bias = 0.5 * (lo + hi);
            g.violation = std::max(0.0, 0.5 * (lo - hi));
        }
        return g;
    }

private:
    void refresh_cache() {
        for (std::size_t i = 0; i < n_; ++i) {
            double f = 0;
            for (std::size_t j = 0; j < n_; ++j) {
                if (beta_[j] != 0) f += beta_[j] * kernel_[i][j];
            }
            f_nb_[i] = f;
        }
    }

    /// Exact maximization of the dual restricted to the pair (i, j) with
    /// beta_i + beta_j fixed. The |.| terms make the objective piecewise
    /// quadratic in the new beta_i = t, with kinks at t = 0 and t = s.
    bool try_pair(std::size_t i, std::size_t j) {
        const double c = cfg_.c;
        const double eps = cfg_.epsilon;
        double bi = beta_[i], bj = beta_[j];
        double s = bi + bj;
        double lo = std::max(-c, s - c);
        double hi = std::min(c, s + c);
        if (hi - lo < 1e-14 * std::max(1.0, c)) return false;

        double eta = kernel_[i][i] + kernel_[j][j] - 2.0 * kernel_[i][j];
        double ei = y_[i] - f_nb_[i];
        double ej = y_[j] - f_nb_[j];

        double candidates[8];
        std::size_t n_cand = 0;
        candidates[n_cand++] = lo;
        candidates[n_cand++] = hi;
        if (0.0 > lo && 0.0 < hi) candidates[n_cand++] = 0.0;
        if (s > lo && s < hi) candidates[n_cand++] = s;
        if (eta > 0) {
            // Stationary point for each sign assignment of (t, s - t).
            for (double sign_i : {-1.0, 1.0}) {
                for (double sign_j : {-1.0, 1.0}) {
                    double t = bi + ((ei - ej) - eps * sign_i + eps * sign_j) / eta;
                    candidates[n_cand++] = std::clamp(t, lo, hi);
                }
            }
        }

        auto gain = [&](double t) {
            double delta = t - bi;
            return delta * (ei - ej) - 0.5 * eta * delta * delta -
                   eps * (std::fabs(t) - std::fabs(bi)) -
                   eps * (std::fabs(s - t) - std::fabs(bj));
        };

        // Any strictly positive gain is progress. Near a tight tolerance the
        // useful steps shrink like viol^2, so a fixed cutoff would stall the
        // solver before the KKT certificate is reached; max_passes bounds
        // the tail instead.
        double best_t = bi, best_gain = 0;
        for (std::size_t k = 0; k < n_cand; ++k) {
            double g = gain(candidates[k]);
            if (g > best_gain) {
                best_gain = g;
                best_t = candidates[k];
            }
        }
        if (best_gain <= 0 || best_t == bi) return false;

        double delta = best_t - bi;
        beta_[i] = best_t;
        beta_[j] = s - best_t;
        for (std::size_t k = 0; k < n_; ++k) {
            f_nb_[k] += delta * (kernel_[i][k] - kernel_[j][k]);
        }
        return true;
    }

    const std::vector<double>& y_;
    const SvrConfig& cfg_;
    std::size_t n_;
    std::vector<std::vector<double>> kernel_;
    std::vector<double> beta_;
    std::vector<double> f_nb_;
    double bias_ = 0;
    double max_violation_ = 0;
    bool converged_ = false;
    int iterations_ = 0;
};

double resolve_gamma(const SvrConfig& config, const Matrix& X) {
    if (config.gamma > 0) return config.gamma;
    // "scale": 1 / (n_features * population variance of all X entries).
    double sum = 0, sum2 = 0, count = 0;
    for (const auto& row : X) {
        for (double v : row) {
            sum += v;
            sum2 += v * v;
            count += 1;
        }
    }
    double var = sum2 / count - (sum / count) * (sum / count);
    std::size_t d = X.front().size();
    if (var <= 0) return 1.0;
    return 1.0 / (static_cast<double>(d) * var);
}

}  // namespace

SvrModel fit_svr(const Matrix& X, const std::vector<double>& y, const SvrConfig& config,
                 SvrDiagnostics* diagnostics) {
    if (X.size() < 2 || X.size() != y.size()) {
        throw std::invalid_argument("svr: needs n >= 2 with matching X and y");
    }
    if (config.c <= 0) throw std::invalid_argument("svr: C must be > 0");
    if (config.epsilon < 0) throw std::invalid_argument("svr: epsilon must be >= 0");
    if (config.degree < 1) throw std::invalid_argument("svr: degree must be >= 1");
    if (config.max_passes < 1) throw std::invalid_argument("svr: max_passes must be >= 1");

    SvrConfig resolved = config;
    resolved.gamma = resolve_gamma(config, X);

    SmoSolver solver(X, y, resolved);
    solver.solve();

    SvrModel model;
    model.config = resolved;
    model.n_features = X.front().size();
    model.bias = solver.bias();
    model.converged = solver.converged();
    model.iterations = solver.iterations();
    const std::vector<double>& beta = solver.beta();
    for (std::size_t i = 0; i < X.size(); ++i) {
        if (beta[i] != 0) {
            model.support_vectors.push_back(X[i]);
            model.beta.push_back(beta[i]);
        }
    }

    if (diagnostics) {
        diagnostics->beta = beta;
        diagnostics->bias = model.bias;
        diagnostics->max_kkt_violation = solver.max_violation();
        diagnostics->dual_objective = solver.dual_objective();
        diagnostics->iterations = model.iterations;
        diagnostics->converged = model.converged;
        diagnostics->gamma = resolved.gamma;
    }
    return model;
}

}  // namespace marketml
