#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "marketml/models.hpp"

namespace marketml {

namespace {

double predict_one(const Matrix& train_x, const std::vector<double>& train_y, int k,
                   const std::vector<double>& query) {
    if (query.size() != train_x.front().size()) {
        throw std::invalid_argument("knn predict: feature count mismatch");
    }
    std::vector<double> dist2(train_x.size());
    for (std::size_t i = 0; i < train_x.size(); ++i) {
        double d2 = 0;
        for (std::size_t j = 0; j < query.size(); ++j) {
            double d = train_x[i][j] - query[j];
            d2 += d * d;
        }
        dist2[i] = d2;
    }
    std::vector<std::size_t> order(train_x.size());
    std::iota(order.begin(), order.end(), 0);
    // Stable sort on distance alone: equidistant neighbours keep index
    // order, so the lower training row wins ties.
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return dist2[a] < dist2[b]; });
    double sum = 0;
    for (int i = 0; i < k; ++i) sum += train_y[order[static_cast<std::size_t>(i)]];
    return sum / static_cast<double>(k);
}

}  // namespace

std::vector<double> KnnModel::predict(const Matrix& X) const {
    if (X.empty()) throw std::invalid_argument("knn predict: empty query");
    // Dimension errors must surface before the parallel region; a throw
    // from inside an omp loop would terminate instead of propagate.
    for (const auto& row : X) {
        if (row.size() != train_x.front().size()) {
            throw std::invalid_argument("knn predict: feature count mismatch");
        }
    }
    std::vector<double> out(X.size());
    std::int64_t n = static_cast<std::int64_t>(X.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] =
            predict_one(train_x, train_y, k, X[static_cast<std::size_t>(i)]);
    }
    return out;
}

std::vector<double> KnnModel::predict_serial(const Matrix& X) const {
    if (X.empty()) throw std::invalid_argument("knn predict: empty query");
    std::vector<double> out;
    out.reserve(X.size());
    for (const auto& row : X) out.push_back(predict_one(train_x, train_y, k, row));
    return out;
}

nlohmann::ordered_json KnnModel::to_json() const {
    nlohmann::ordered_json j;
    j["kind"] = kind();
    j["k"] = k;
    j["train_x"] = train_x;
    j["train_y"] = train_y;
    return j;
}

KnnModel fit_knn(Matrix X, std::vector<double> y, const KnnConfig& config) {
    if (X.empty() || X.size() != y.size()) {
        throw std::invalid_argument("knn: X and y must be non-empty and equal length");
    }
    if (config.k < 1 || static_cast<std::size_t>(config.k) > X.size()) {
        throw std::invalid_argument("knn: k=" + std::to_string(config.k) +
                                    " must lie in [1, n_train=" + std::to_string(X.size()) + "]");
    }
    KnnModel m;
    m.train_x = std::move(X);
    m.train_y = std::move(y);
    m.k = config.k;
    return m;
}

}  // namespace marketml
