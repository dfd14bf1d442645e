// Acceptance suite: every release gate in one binary, one verdict line per
// criterion. Exits with the number of failed criteria so the harness sees
// red when any gate is missed. Criterion 1 is expected to report one known
// data discrepancy (see data/corpus_manifest.json notes).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "marketml/corpus.hpp"
#include "marketml/experiment.hpp"
#include "marketml/features.hpp"
#include "marketml/metrics.hpp"
#include "marketml/models.hpp"
#include "marketml/rng.hpp"
#include "marketml/stats.hpp"
#include "oracles.hpp"

using namespace marketml;

namespace {

int failures = 0;
std::vector<std::string> details;

double now_s() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

void verdict(int index, const std::string& name, bool pass, double elapsed_s,
             double budget_s) {
    bool in_budget = elapsed_s < budget_s;
    bool ok = pass && in_budget;
    if (!ok) ++failures;
    std::printf("[%s] %d. %s (%.2fs%s)\n", ok ? "PASS" : "FAIL", index, name.c_str(), elapsed_s,
                in_budget ? "" : ", OVER BUDGET");
    for (const std::string& d : details) std::printf("       %s\n", d.c_str());
    details.clear();
}

bool check_rel(const char* label, double got, double expect, double rel_tol) {
    double rel = std::fabs(got - expect) / std::fabs(expect);
    bool ok = rel <= rel_tol;
    if (!ok) {
        char buf[200];
        std::snprintf(buf, sizeof buf, "%s: got %.4f, expected %.4f (rel dev %.2e > %.0e)", label,
                      got, expect, rel, rel_tol);
        details.push_back(buf);
    }
    return ok;
}

bool check_abs(const char* label, double got, double expect, double abs_tol) {
    bool ok = std::fabs(got - expect) <= abs_tol;
    if (!ok) {
        char buf[200];
        std::snprintf(buf, sizeof buf, "%s: got %.4f, expected %.4f (abs dev %.3f > %.2f)", label,
                      got, expect, std::fabs(got - expect), abs_tol);
        details.push_back(buf);
    }
    return ok;
}

Matrix random_matrix(Rng& rng, std::size_t n, std::size_t p, double spread = 5.0) {
    Matrix x(n, std::vector<double>(p));
    for (auto& row : x) {
        for (double& v : row) v = (rng.next_double() * 2 - 1) * spread;
    }
    return x;
}

// ----------------------------------------------------------------------------
// 1. Reference summary reproduction
// ----------------------------------------------------------------------------

void criterion_1() {
    double t0 = now_s();
    DescriptiveSummary usa = summarize(embedded_corpus(CorpusId::UsaDaily).closes());
    DescriptiveSummary aus = summarize(embedded_corpus(CorpusId::AusDaily).closes());

    bool ok = true;
    ok &= check_rel("USA mean", usa.mean, 5870.23, 1e-3);
    ok &= check_rel("USA std", usa.std_dev, 304.84, 1e-3);
    ok &= check_rel("USA min", usa.min, 4982.77, 1e-3);
    ok &= check_rel("USA q25", usa.q25, 5660.66, 1e-3);
    ok &= check_rel("USA median", usa.median, 5954.88, 1e-3);
    ok &= check_rel("USA q75", usa.q75, 6070.50, 1e-3);
    ok &= check_rel("USA max", usa.max, 6388.64, 1e-3);
    ok &= check_abs("USA skewness", *usa.skewness, -0.67, 0.05);
    ok &= check_abs("USA kurtosis", *usa.excess_kurtosis, 0.03, 0.05);
    ok &= check_rel("AUS mean", aus.mean, 8274.53, 1e-3);
    ok &= check_rel("AUS std", aus.std_dev, 313.92, 1e-3);
    ok &= check_abs("AUS skewness", *aus.skewness, -0.79, 0.05);
    ok &= check_abs("AUS kurtosis", *aus.excess_kurtosis, -0.18, 0.05);

    // Count deviations from the reference 130 are documented, not asserted.
    if (usa.count != 130 || aus.count != 130) {
        char buf[200];
        std::snprintf(buf, sizeof buf,
                      "counts: USA %zu, AUS %zu vs reference 130; documented in "
                      "data/corpus_manifest.json",
                      usa.count, aus.count);
        details.push_back(buf);
    }
    if (!ok) {
        details.push_back(
            "known data gap: the bundled USA daily feed carries 129 sessions vs the "
            "reference summary's 130; the missing mid-January session (close ~5996) "
            "shifts the USA std above the band. See the manifest notes.");
    }
    verdict(1, "reference daily close summary reproduced", ok, now_s() - t0, 1.0);
}

// ----------------------------------------------------------------------------
// 2. Metric oracle equivalence
// ----------------------------------------------------------------------------

void criterion_2() {
    double t0 = now_s();
    Rng rng(424242);
    bool ok = true;
    for (int trial = 0; trial < 1000 && ok; ++trial) {
        std::size_t n = 2 + rng.next_below(60);
        std::vector<double> z(n), p(n);
        bool constant = true;
        for (std::size_t i = 0; i < n; ++i) {
            z[i] = (rng.next_double() * 2 - 1) * 1000;
            if (z[i] == 0) z[i] = 0.5;
            p[i] = z[i] + rng.next_normal() * 40;
            if (i > 0 && z[i] != z[0]) constant = false;
        }
        if (constant) z[0] += 1;

        MetricsReport m = compute_metrics(z, p);
        oracles::LiteralMetrics o = oracles::literal_metrics(z, p);
        auto close = [](double a, double b) {
            return std::fabs(a - b) <= 1e-12 * std::max({1.0, std::fabs(a), std::fabs(b)});
        };
        ok &= close(m.mse, o.mse) && close(m.mae, o.mae) && close(*m.r2, o.r2) &&
              close(*m.mape, o.mape) && close(*m.rel_err_mean, o.rel_mean) &&
              close(*m.rel_err_std, o.rel_std);
        if (!ok) details.push_back("mismatch at trial " + std::to_string(trial));
    }
    verdict(2, "metrics match the literal-formula oracle to 1e-12 (1000 pairs)", ok,
            now_s() - t0, 1.0);
}

// ----------------------------------------------------------------------------
// 3. SVR dual optimality
// ----------------------------------------------------------------------------

void criterion_3() {
    double t0 = now_s();
    Rng rng(777);
    bool ok = true;
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t n = 4 + rng.next_below(5);  // 4..8
        std::size_t p = 1 + rng.next_below(3);
        Matrix x = random_matrix(rng, n, p, 2.0);
        std::vector<double> y(n);
        for (double& v : y) v = (rng.next_double() * 2 - 1) * 3;

        SvrConfig cfg;
        cfg.kernel = trial % 2 ? SvrKernel::Poly : SvrKernel::Linear;
        cfg.degree = 2 + static_cast<int>(rng.next_below(2));
        cfg.coef0 = (trial % 3 == 0) ? 0.0 : 1.0;
        cfg.gamma = 0.5 + rng.next_double();
        cfg.c = 0.5 + rng.next_double() * 4;
        cfg.epsilon = 0.05 + rng.next_double() * 0.25;
        cfg.tol = 1e-8;
        cfg.max_passes = 500000;

        SvrDiagnostics diag;
        fit_svr(x, y, cfg, &diag);

        if (!diag.converged || diag.max_kkt_violation > cfg.tol) {
            ok = false;
            details.push_back("trial " + std::to_string(trial) + ": KKT violation " +
                              std::to_string(diag.max_kkt_violation) + " above tol");
            continue;
        }

        // Oracle and both objectives evaluated with test-side code only.
        SvrConfig resolved = cfg;
        resolved.gamma = diag.gamma;
        std::size_t nn = x.size();
        oracles::Matrix k(nn, std::vector<double>(nn));
        for (std::size_t i = 0; i < nn; ++i) {
            for (std::size_t j = 0; j < nn; ++j) {
                double dot = 0;
                for (std::size_t f = 0; f < p; ++f) dot += x[i][f] * x[j][f];
                k[i][j] = resolved.kernel == SvrKernel::Linear
                              ? dot
                              : std::pow(resolved.gamma * dot + resolved.coef0, resolved.degree);
            }
        }
        oracles::SvrOracleResult oracle = oracles::svr_qp_oracle(k, y, cfg.c, cfg.epsilon);
        if (!oracle.found) {
            ok = false;
            details.push_back("trial " + std::to_string(trial) + ": oracle found no optimum");
            continue;
        }
        double w_impl = -oracles::svr_dual_g(k, y, cfg.epsilon, diag.beta);
        double w_oracle = -oracle.objective;
        if (w_oracle - w_impl > 1e-6 || w_impl > w_oracle + 1e-7) {
            ok = false;
            char buf[160];
            std::snprintf(buf, sizeof buf, "trial %d: dual gap %.3e (impl %.9f vs oracle %.9f)",
                          trial, w_oracle - w_impl, w_impl, w_oracle);
            details.push_back(buf);
        }
    }
    verdict(3, "SMO dual within 1e-6 of the exhaustive QP oracle, KKT certified (25 problems)",
            ok, now_s() - t0, 30.0);
}

// ----------------------------------------------------------------------------
// 4. Tree split oracle
// ----------------------------------------------------------------------------

void criterion_4() {
    double t0 = now_s();
    Rng rng(31337);
    bool ok = true;
    int exercised = 0;
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 2 + rng.next_below(7);  // 2..8
        std::size_t p = 1 + rng.next_below(3);
        Matrix x(n, std::vector<double>(p));
        std::vector<double> y(n);
        std::vector<std::vector<std::int64_t>> xi(n, std::vector<std::int64_t>(p));
        std::vector<std::int64_t> yi(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < p; ++j) {
                xi[i][j] = static_cast<std::int64_t>(rng.next_below(10));
                x[i][j] = static_cast<double>(xi[i][j]);
            }
            yi[i] = static_cast<std::int64_t>(rng.next_below(16));
            y[i] = static_cast<double>(yi[i]);
        }

        oracles::SplitOracleResult expect = oracles::exhaustive_best_split(xi, yi);
        TreeConfig cfg;
        cfg.max_depth = 1;
        Rng tree_rng(0);
        RegressionTree tree = fit_tree(x, y, cfg, tree_rng);

        if (!expect.found) {
            if (!tree.nodes[0].is_leaf()) {
                ok = false;
                details.push_back("trial " + std::to_string(trial) +
                                  ": split found where the oracle sees none");
            }
            continue;
        }
        ++exercised;
        if (tree.nodes[0].is_leaf() || tree.nodes[0].feature != expect.feature ||
            tree.nodes[0].threshold != expect.threshold) {
            ok = false;
            char buf[160];
            std::snprintf(buf, sizeof buf, "trial %d: got (f=%d, t=%g), oracle (f=%d, t=%g)",
                          trial, tree.nodes[0].feature, tree.nodes[0].threshold, expect.feature,
                          expect.threshold);
            details.push_back(buf);
        }
    }
    if (exercised < 100) {
        ok = false;
        details.push_back("only " + std::to_string(exercised) + " datasets produced a split");
    }
    verdict(4, "depth-1 splits equal exhaustive search with the stated tie-break (200 datasets)",
            ok, now_s() - t0, 5.0);
}

// ----------------------------------------------------------------------------
// 5. OLS exactness
// ----------------------------------------------------------------------------

void criterion_5() {
    double t0 = now_s();
    Rng rng(2121);
    bool ok = true;

    for (int trial = 0; trial < 25 && ok; ++trial) {
        std::size_t n = 12 + rng.next_below(40);
        std::size_t p = 1 + rng.next_below(6);
        Matrix x = random_matrix(rng, n, p);
        std::vector<double> w(p);
        for (double& v : w) v = rng.next_double() * 8 - 4;
        double b = rng.next_double() * 10 - 5;
        std::vector<double> y(n);
        for (std::size_t i = 0; i < n; ++i) {
            y[i] = b;
            for (std::size_t j = 0; j < p; ++j) y[i] += w[j] * x[i][j];
        }
        OlsModel m = fit_ols(x, y);
        ok &= std::fabs(m.intercept - b) <= 1e-8 * std::max(1.0, std::fabs(b));
        for (std::size_t j = 0; j < p; ++j) {
            ok &= std::fabs(m.coefficients[j] - w[j]) <= 1e-8 * std::max(1.0, std::fabs(w[j]));
        }
        if (!ok) details.push_back("planted coefficients missed at trial " + std::to_string(trial));
    }

    for (int trial = 0; trial < 100 && ok; ++trial) {
        std::size_t n = 10 + rng.next_below(60);
        std::size_t p = 1 + rng.next_below(6);
        Matrix x = random_matrix(rng, n, p);
        std::vector<double> y(n);
        for (double& v : y) v = rng.next_double() * 100 - 50;
        OlsModel m = fit_ols(x, y);
        std::vector<double> pred = m.predict(x);
        double ynorm = 0;
        for (double v : y) ynorm += v * v;
        ynorm = std::sqrt(ynorm);
        double sum = 0;
        std::vector<double> dots(p, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            double r = y[i] - pred[i];
            sum += r;
            for (std::size_t j = 0; j < p; ++j) dots[j] += r * x[i][j];
        }
        ok &= std::fabs(sum) <= 1e-8 * ynorm;
        for (std::size_t j = 0; j < p; ++j) ok &= std::fabs(dots[j]) <= 1e-8 * ynorm;
        if (!ok) details.push_back("orthogonality broken at trial " + std::to_string(trial));
    }
    verdict(5, "OLS recovers planted models to 1e-8; residuals orthogonal (100 problems)", ok,
            now_s() - t0, 10.0);
}

// ----------------------------------------------------------------------------
// 6. Determinism of the run command
// ----------------------------------------------------------------------------

std::string capture_cli(const std::string& args, int* exit_code) {
    const char* bin = std::getenv("MARKETML_BIN");
    if (!bin) {
        *exit_code = -1;
        return "";
    }
    std::string cmd = std::string("\"") + bin + "\" " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        *exit_code = -1;
        return "";
    }
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int rc = pclose(pipe);
    *exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return out;
}

void criterion_6() {
    double t0 = now_s();
    bool ok = true;
    int rc1 = 0, rc2 = 0, rc3 = 0;
    std::string a = capture_cli("run --corpus daily --seed 42 --format json --threads 1", &rc1);
    std::string b = capture_cli("run --corpus daily --seed 42 --format json --threads 1", &rc2);
    std::string c = capture_cli("run --corpus daily --seed 42 --format json --threads 4", &rc3);
    if (rc1 != 0 || rc2 != 0 || rc3 != 0) {
        ok = false;
        details.push_back("cli invocation failed (is MARKETML_BIN set?)");
    } else {
        if (a != b) {
            ok = false;
            details.push_back("same config, same thread count: outputs differ");
        }
        if (a != c) {
            ok = false;
            details.push_back("thread count changed the output");
        }
        if (a.empty()) {
            ok = false;
            details.push_back("empty output");
        }
    }
    verdict(6, "run is byte-identical across repeats and forest thread counts", ok, now_s() - t0,
            60.0);
}

// ----------------------------------------------------------------------------
// 7. Reference pipeline bands over a 10-seed sweep
// ----------------------------------------------------------------------------

void criterion_7() {
    double t0 = now_s();
    std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    SweepResult sweep =
        seed_sweep(embedded_daily_pair(), SplitSpec{}, default_model_set(), seeds, "daily");

    const SweepModelSummary* knn = nullptr;
    const SweepModelSummary* poly = nullptr;
    const SweepModelSummary* linear = nullptr;
    const SweepModelSummary* forest = nullptr;
    for (const SweepModelSummary& m : sweep.models) {
        if (m.name == "kNN") knn = &m;
        if (m.name == "SVR") poly = &m;
        if (m.name == "Linear SVR") linear = &m;
        if (m.name == "Random Forest") forest = &m;
    }
    bool ok = knn && poly && linear && forest;
    if (ok) {
        char buf[240];
        std::snprintf(buf, sizeof buf,
                      "median R2: forest %.3f, knn %.3f, linear-svr %.3f, poly-svr %.3f; "
                      "median MSE: forest %.0f, knn %.0f, linear-svr %.0f, poly-svr %.0f",
                      forest->r2.median, knn->r2.median, linear->r2.median, poly->r2.median,
                      forest->mse.median, knn->mse.median, linear->mse.median, poly->mse.median);
        details.push_back(buf);

        if (forest->r2.median < 0.75) {
            ok = false;
            details.push_back("(a) forest median R2 below 0.75");
        }
        if (knn->r2.median < 0.70) {
            ok = false;
            details.push_back("(a) knn median R2 below 0.70");
        }
        if (!(forest->mse.median <= knn->mse.median && knn->mse.median <= linear->mse.median)) {
            ok = false;
            details.push_back("(b) median MSE ordering forest <= knn <= linear-svr broken");
        }
        bool poly_worst = poly->r2.median < forest->r2.median &&
                          poly->r2.median < knn->r2.median &&
                          poly->r2.median < linear->r2.median &&
                          poly->mse.median > forest->mse.median &&
                          poly->mse.median > knn->mse.median &&
                          poly->mse.median > linear->mse.median;
        if (!poly_worst) {
            ok = false;
            details.push_back("(c) default poly-SVR is not the weakest model");
        }
    } else {
        details.push_back("model summaries missing from the sweep");
    }
    verdict(7, "10-seed sweep reproduces the reference accuracy bands and ranking", ok,
            now_s() - t0, 60.0);
}

// ----------------------------------------------------------------------------
// 8. Standardizer invariants
// ----------------------------------------------------------------------------

void criterion_8() {
    double t0 = now_s();
    Rng rng(808);
    bool ok = true;
    for (int trial = 0; trial < 100 && ok; ++trial) {
        std::size_t n = 5 + rng.next_below(80);
        std::size_t p = 1 + rng.next_below(8);
        FeatureMatrix fm;
        for (std::size_t j = 0; j < p; ++j) fm.column_names.push_back("c" + std::to_string(j));
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<double> row(p);
            for (double& v : row) v = (rng.next_double() * 2 - 1) * 500;
            fm.rows.push_back(std::move(row));
            fm.target.push_back(rng.next_double());
            fm.row_dates.push_back(Date{2025, 1, 1 + static_cast<int>(i % 28)});
        }
        Standardizer s = Standardizer::fit(fm);
        FeatureMatrix out = s.apply(fm);
        for (std::size_t j = 0; j < p && ok; ++j) {
            double sum = 0;
            for (const auto& row : out.rows) sum += row[j];
            double mean = sum / static_cast<double>(n);
            double ss = 0;
            for (const auto& row : out.rows) ss += (row[j] - mean) * (row[j] - mean);
            double sd = std::sqrt(ss / static_cast<double>(n - 1));
            ok &= std::fabs(mean) < 1e-9 && std::fabs(sd - 1.0) < 1e-9;
        }
        if (!ok) details.push_back("moments off at trial " + std::to_string(trial));
    }
    verdict(8, "standardized training columns have |mean| < 1e-9 and |std-1| < 1e-9 (100 matrices)",
            ok, now_s() - t0, 10.0);
}

// ----------------------------------------------------------------------------
// 9. Property suite
// ----------------------------------------------------------------------------

void criterion_9() {
    double t0 = now_s();
    Rng rng(909);
    bool ok = true;

    // kNN permutation invariance
    for (int trial = 0; trial < 10 && ok; ++trial) {
        std::size_t n = 12 + rng.next_below(20);
        Matrix x = random_matrix(rng, n, 3);
        std::vector<double> y(n);
        for (double& v : y) v = rng.next_double() * 10;
        Matrix q = random_matrix(rng, 6, 3);
        std::vector<double> base = fit_knn(x, y, KnnConfig{4}).predict(q);

        std::vector<std::size_t> order(n);
        for (std::size_t i = 0; i < n; ++i) order[i] = i;
        shuffle(order, rng);
        Matrix xp(n);
        std::vector<double> yp(n);
        for (std::size_t i = 0; i < n; ++i) {
            xp[i] = x[order[i]];
            yp[i] = y[order[i]];
        }
        std::vector<double> perm = fit_knn(xp, yp, KnnConfig{4}).predict(q);
        for (std::size_t i = 0; i < q.size(); ++i) {
            ok &= std::fabs(perm[i] - base[i]) <= 1e-12 * std::max(1.0, std::fabs(base[i]));
        }
        if (!ok) details.push_back("knn permutation invariance broken");
    }

    // forest range-boundedness
    if (ok) {
        Matrix x = random_matrix(rng, 50, 4);
        std::vector<double> y(50);
        for (double& v : y) v = rng.next_double() * 300 - 150;
        ForestConfig cfg;
        cfg.n_trees = 40;
        cfg.seed = 2;
        ForestModel forest = fit_forest(x, y, cfg);
        double lo = *std::min_element(y.begin(), y.end());
        double hi = *std::max_element(y.begin(), y.end());
        for (double pv : forest.predict(random_matrix(rng, 200, 4, 20.0))) {
            ok &= pv >= lo && pv <= hi;
        }
        if (!ok) details.push_back("forest prediction escaped the training target range");
    }

    // poly degree-1 kernel coincides with linear
    if (ok) {
        Matrix x = random_matrix(rng, 24, 3);
        std::vector<double> y(24);
        for (std::size_t i = 0; i < y.size(); ++i) y[i] = x[i][0] - 2 * x[i][2];
        SvrConfig linear;
        linear.kernel = SvrKernel::Linear;
        linear.c = 4;
        linear.tol = 1e-6;
        SvrConfig poly1 = linear;
        poly1.kernel = SvrKernel::Poly;
        poly1.degree = 1;
        poly1.coef0 = 0;
        poly1.gamma = 1.0;
        Matrix q = random_matrix(rng, 10, 3);
        std::vector<double> a = fit_svr(x, y, linear).predict(q);
        std::vector<double> b = fit_svr(x, y, poly1).predict(q);
        for (std::size_t i = 0; i < q.size(); ++i) ok &= std::fabs(a[i] - b[i]) <= 1e-5;
        if (!ok) details.push_back("poly(degree=1) and linear kernels diverged");
    }

    // R2 affine invariance
    for (int trial = 0; trial < 10 && ok; ++trial) {
        std::size_t n = 6 + rng.next_below(30);
        std::vector<double> z(n), p(n);
        for (std::size_t i = 0; i < n; ++i) {
            z[i] = rng.next_double() * 40 + 5;
            p[i] = z[i] + rng.next_normal() * 3;
        }
        double a = (rng.next_double() + 0.2) * 3 * (trial % 2 ? 1 : -1);
        double b = rng.next_double() * 11;
        std::vector<double> za(n), pa(n);
        for (std::size_t i = 0; i < n; ++i) {
            za[i] = a * z[i] + b;
            pa[i] = a * p[i] + b;
        }
        double r_base = *compute_metrics(z, p).r2;
        double r_map = *compute_metrics(za, pa).r2;
        ok &= std::fabs(r_base - r_map) <= 1e-9 * std::max(1.0, std::fabs(r_base));
        if (!ok) details.push_back("r2 affine invariance broken");
    }

    // quantile monotone in p
    for (int trial = 0; trial < 10 && ok; ++trial) {
        std::vector<double> v(3 + rng.next_below(50));
        for (double& x : v) x = rng.next_double() * 100;
        double prev = quantile(v, 0.0);
        for (int step = 1; step <= 100; ++step) {
            double q = quantile(v, step / 100.0);
            ok &= q >= prev - 1e-12;
            prev = q;
        }
        if (!ok) details.push_back("quantile not monotone in p");
    }

    verdict(9, "property suite (knn permutation, forest bounds, kernels, r2, quantiles)", ok,
            now_s() - t0, 30.0);
}

}  // namespace

int main() {
    std::printf("acceptance suite\n================\n");
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    std::printf("================\n%d of 9 criteria failed\n", failures);
    return failures;
}
