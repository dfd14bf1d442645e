// Compares the OpenMP kernels against their serial reference
// implementations: wall time and bit-identical results. Run with --quick
// for a fast smoke pass.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "marketml/models.hpp"
#include "marketml/rng.hpp"

using namespace marketml;

namespace {

double now_ms() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

Matrix random_matrix(Rng& rng, std::size_t n, std::size_t p) {
    Matrix x(n, std::vector<double>(p));
    for (auto& row : x) {
        for (double& v : row) v = rng.next_double() * 10 - 5;
    }
    return x;
}

std::vector<double> random_target(Rng& rng, const Matrix& x) {
    std::vector<double> y;
    y.reserve(x.size());
    for (const auto& row : x) {
        double v = 0;
        for (std::size_t j = 0; j < row.size(); ++j) v += (j % 2 ? 1.5 : -0.7) * row[j];
        y.push_back(v + rng.next_normal());
    }
    return y;
}

bool bitwise_equal(const std::vector<double>& a, const std::vector<double>& b) {
    if (a.size() != b.size()) return false;
    return std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

void report(const char* kernel, double serial_ms, double parallel_ms, bool identical) {
    std::printf("%-24s %10.1f ms %10.1f ms   %5.2fx   %s\n", kernel, serial_ms, parallel_ms,
                serial_ms / parallel_ms, identical ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    bool quick = argc > 1 && std::string(argv[1]) == "--quick";

    std::size_t forest_rows = quick ? 200 : 2000;
    int forest_trees = quick ? 40 : 400;
    std::size_t knn_train = quick ? 400 : 4000;
    std::size_t knn_query = quick ? 200 : 2000;

#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif
    std::printf("%-24s %13s %13s %8s\n", "kernel", "serial", "parallel", "speedup");

    bool all_identical = true;

    {
        Rng rng(101);
        Matrix x = random_matrix(rng, forest_rows, 6);
        std::vector<double> y = random_target(rng, x);
        ForestConfig cfg;
        cfg.n_trees = forest_trees;
        cfg.seed = 7;

        double t0 = now_ms();
        ForestModel serial = fit_forest_serial(x, y, cfg);
        double t1 = now_ms();
        ForestModel parallel = fit_forest(x, y, cfg);
        double t2 = now_ms();

        Matrix queries = random_matrix(rng, 200, 6);
        bool identical = bitwise_equal(serial.predict(queries), parallel.predict(queries)) &&
                         serial.trees == parallel.trees;
        all_identical = all_identical && identical;
        report("forest fit", t1 - t0, t2 - t1, identical);
    }

    {
        Rng rng(202);
        Matrix x = random_matrix(rng, knn_train, 8);
        std::vector<double> y = random_target(rng, x);
        KnnModel knn = fit_knn(x, y, KnnConfig{5});
        Matrix queries = random_matrix(rng, knn_query, 8);

        double t0 = now_ms();
        std::vector<double> serial = knn.predict_serial(queries);
        double t1 = now_ms();
        std::vector<double> parallel = knn.predict(queries);
        double t2 = now_ms();

        bool identical = bitwise_equal(serial, parallel);
        all_identical = all_identical && identical;
        report("knn predict", t1 - t0, t2 - t1, identical);
    }

    return all_identical ? 0 : 1;
}
