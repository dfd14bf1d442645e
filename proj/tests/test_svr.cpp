#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "marketml/models.hpp"
#include "marketml/rng.hpp"
#include "oracles.hpp"

using namespace marketml;

namespace {

Matrix random_matrix(Rng& rng, std::size_t n, std::size_t p, double spread = 2.0) {
    Matrix x(n, std::vector<double>(p));
    for (auto& row : x) {
        for (double& v : row) v = (rng.next_double() * 2 - 1) * spread;
    }
    return x;
}

oracles::Matrix kernel_matrix(const SvrConfig& cfg, const Matrix& x) {
    std::size_t n = x.size();
    oracles::Matrix k(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            // test-side kernel evaluation, written out literally
            double dot = 0;
            for (std::size_t f = 0; f < x[i].size(); ++f) dot += x[i][f] * x[j][f];
            k[i][j] = cfg.kernel == SvrKernel::Linear
                          ? dot
                          : std::pow(cfg.gamma * dot + cfg.coef0, cfg.degree);
        }
    }
    return k;
}

}  // namespace

TEST_CASE("svr: constant target fits inside the tube with all-zero coefficients") {
    Rng rng(1);
    for (SvrKernel kernel : {SvrKernel::Linear, SvrKernel::Poly}) {
        Matrix x = random_matrix(rng, 15, 3);
        std::vector<double> y(15, 7.5);
        SvrConfig cfg;
        cfg.kernel = kernel;
        SvrDiagnostics diag;
        SvrModel m = fit_svr(x, y, cfg, &diag);
        CHECK(m.converged);
        CHECK(m.support_vectors.empty());  // every beta stays zero
        CHECK(m.bias == doctest::Approx(7.5).epsilon(1e-12));
        std::vector<double> pred = m.predict(random_matrix(rng, 5, 3));
        for (double p : pred) CHECK(p == doctest::Approx(7.5).epsilon(1e-12));
    }
}

TEST_CASE("svr: y = x with a generous C lands every residual inside the tube") {
    Matrix x;
    std::vector<double> y;
    for (int i = 0; i < 20; ++i) {
        double v = -1.0 + 2.0 * i / 19.0;
        x.push_back({v});
        y.push_back(v);
    }
    SvrConfig cfg;
    cfg.kernel = SvrKernel::Linear;
    cfg.c = 1000;
    cfg.epsilon = 0.01;
    cfg.tol = 1e-6;
    SvrModel m = fit_svr(x, y, cfg);
    CHECK(m.converged);
    std::vector<double> pred = m.predict(x);
    double worst = 0;
    for (std::size_t i = 0; i < y.size(); ++i) worst = std::max(worst, std::fabs(y[i] - pred[i]));
    CHECK(worst <= 0.01 + 1e-6);
}

TEST_CASE("svr: dual objective within 1e-6 of the exhaustive QP oracle (small problems)") {
    Rng rng(99);
    int solved = 0;
    for (int trial = 0; trial < 8; ++trial) {
        std::size_t n = 4 + rng.next_below(4);  // 4..7 here; acceptance goes to 8
        std::size_t p = 1 + rng.next_below(2);
        Matrix x = random_matrix(rng, n, p);
        std::vector<double> y(n);
        for (double& v : y) v = (rng.next_double() * 2 - 1) * 3;

        SvrConfig cfg;
        cfg.kernel = trial % 2 ? SvrKernel::Poly : SvrKernel::Linear;
        cfg.degree = 2 + static_cast<int>(rng.next_below(2));
        cfg.coef0 = trial % 3 ? 1.0 : 0.0;
        cfg.gamma = 0.7;
        cfg.c = 0.5 + rng.next_double() * 2;
        cfg.epsilon = 0.05 + rng.next_double() * 0.2;
        cfg.tol = 1e-8;

        SvrDiagnostics diag;
        fit_svr(x, y, cfg, &diag);
        REQUIRE(diag.converged);

        SvrConfig resolved = cfg;
        resolved.gamma = diag.gamma;
        oracles::Matrix k = kernel_matrix(resolved, x);
        oracles::SvrOracleResult oracle = oracles::svr_qp_oracle(k, y, cfg.c, cfg.epsilon);
        REQUIRE(oracle.found);

        // both objectives computed by the test, from the raw coefficients
        double w_impl = -oracles::svr_dual_g(k, y, cfg.epsilon, diag.beta);
        double w_oracle = -oracle.objective;
        CHECK(w_impl <= w_oracle + 1e-9);  // oracle is the optimum
        CHECK(w_oracle - w_impl <= 1e-6);
        ++solved;
    }
    CHECK(solved == 8);
}

TEST_CASE("svr: KKT certificate on seeded problems") {
    Rng rng(55);
    for (int trial = 0; trial < 10; ++trial) {
        std::size_t n = 10 + rng.next_below(40);
        std::size_t p = 1 + rng.next_below(4);
        Matrix x = random_matrix(rng, n, p);
        std::vector<double> y(n);
        for (std::size_t i = 0; i < n; ++i) {
            double v = 0;
            for (double f : x[i]) v += f;
            y[i] = v + rng.next_normal() * 0.3;
        }
        SvrConfig cfg;
        cfg.kernel = trial % 2 ? SvrKernel::Poly : SvrKernel::Linear;
        cfg.c = 2.0;
        cfg.epsilon = 0.1;
        cfg.tol = 1e-5;

        SvrDiagnostics diag;
        fit_svr(x, y, cfg, &diag);
        CHECK(diag.converged);
        CHECK(diag.max_kkt_violation <= cfg.tol);

        double sum = 0;
        for (double b : diag.beta) {
            sum += b;
            CHECK(std::fabs(b) <= cfg.c + 1e-12);
        }
        CHECK(std::fabs(sum) <= cfg.tol);
    }
}

TEST_CASE("svr: poly degree 1, coef0 0, gamma 1 coincides with the linear kernel") {
    Rng rng(66);
    Matrix x = random_matrix(rng, 30, 3);
    std::vector<double> y(30);
    for (std::size_t i = 0; i < y.size(); ++i) {
        y[i] = 2 * x[i][0] - x[i][1] + rng.next_normal() * 0.2;
    }

    SvrConfig linear;
    linear.kernel = SvrKernel::Linear;
    linear.c = 5;
    linear.tol = 1e-6;
    SvrConfig poly1 = linear;
    poly1.kernel = SvrKernel::Poly;
    poly1.degree = 1;
    poly1.coef0 = 0.0;
    poly1.gamma = 1.0;

    Matrix queries = random_matrix(rng, 12, 3);
    std::vector<double> a = fit_svr(x, y, linear).predict(queries);
    std::vector<double> b = fit_svr(x, y, poly1).predict(queries);
    for (std::size_t i = 0; i < queries.size(); ++i) {
        CHECK(b[i] == doctest::Approx(a[i]).epsilon(1e-6));
    }
}

TEST_CASE("svr: iteration cap is flagged, not silent") {
    Rng rng(77);
    Matrix x = random_matrix(rng, 40, 3);
    std::vector<double> y(40);
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = x[i][0] * 100 + rng.next_normal();
    SvrConfig cfg;
    cfg.kernel = SvrKernel::Linear;
    cfg.c = 1000;     // far from converged after one pass
    cfg.tol = 1e-10;
    cfg.max_passes = 1;
    SvrDiagnostics diag;
    SvrModel m = fit_svr(x, y, cfg, &diag);
    CHECK(!m.converged);
    CHECK(m.iterations == 1);
    CHECK(diag.max_kkt_violation > cfg.tol);
}

TEST_CASE("svr: gamma 'scale' resolves to 1/(d * Var(X entries))") {
    Matrix x{{1, 2}, {3, 4}, {5, 6}};
    std::vector<double> y{1, 2, 3};
    SvrConfig cfg;  // gamma = 0 -> scale
    SvrDiagnostics diag;
    fit_svr(x, y, cfg, &diag);
    // population variance of {1..6} entries
    double mean = 3.5;
    double var = 0;
    for (double v : {1, 2, 3, 4, 5, 6}) var += (v - mean) * (v - mean);
    var /= 6.0;
    CHECK(diag.gamma == doctest::Approx(1.0 / (2.0 * var)).epsilon(1e-12));

    cfg.gamma = 0.25;
    fit_svr(x, y, cfg, &diag);
    CHECK(diag.gamma == 0.25);
}

TEST_CASE("svr: input validation") {
    Matrix x{{1}, {2}};
    std::vector<double> y{1, 2};
    SvrConfig bad;
    bad.c = 0;
    CHECK_THROWS_AS(fit_svr(x, y, bad), std::invalid_argument);
    bad = SvrConfig{};
    bad.epsilon = -1;
    CHECK_THROWS_AS(fit_svr(x, y, bad), std::invalid_argument);
    CHECK_THROWS_AS(fit_svr(Matrix{{1}}, std::vector<double>{1}, SvrConfig{}),
                    std::invalid_argument);
}
