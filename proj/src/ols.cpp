#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "marketml/models.hpp"

namespace marketml {

std::vector<double> OlsModel::predict(const Matrix& X) const {
    std::vector<double> out;
    out.reserve(X.size());
    for (const auto& row : X) {
        if (row.size() != coefficients.size()) {
            throw std::invalid_argument("ols predict: feature count mismatch");
        }
        double v = intercept;
        for (std::size_t j = 0; j < row.size(); ++j) v += coefficients[j] * row[j];
        out.push_back(v);
    }
    return out;
}

nlohmann::ordered_json OlsModel::to_json() const {
    nlohmann::ordered_json j;
    j["kind"] = kind();
    j["coefficients"] = coefficients;
    j["intercept"] = intercept;
    return j;
}

OlsModel fit_ols(const Matrix& X, const std::vector<double>& y,
                 const std::vector<std::string>* column_names) {
    std::size_t n = X.size();
    std::size_t p = n ? X.front().size() : 0;
    if (n != y.size()) throw std::invalid_argument("ols: X and y row counts differ");
    std::size_t m = p + 1;  // intercept column prepended
    if (n < m) {
        throw std::invalid_argument("ols needs at least " + std::to_string(m) +
                                    " rows for " + std::to_string(p) + " features");
    }

    // Working copy of [1 | X], column-major for the Householder sweeps.
    std::vector<std::vector<double>> a(m, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i) {
        a[0][i] = 1.0;
        for (std::size_t j = 0; j < p; ++j) a[j + 1][i] = X[i][j];
    }
    std::vector<double> rhs = y;
    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), 0);

    auto col_norm_tail = [&](std::size_t col, std::size_t from) {
        double s = 0;
        for (std::size_t i = from; i < n; ++i) s += a[col][i] * a[col][i];
        return std::sqrt(s);
    };

    auto column_label = [&](std::size_t original) {
        if (original == 0) return std::string("intercept");
        std::size_t f = original - 1;
        if (column_names && f < column_names->size()) return (*column_names)[f];
        return "column " + std::to_string(f);
    };

    double max_norm = 0;
    for (std::size_t j = 0; j < m; ++j) max_norm = std::max(max_norm, col_norm_tail(j, 0));
    double tol = std::numeric_limits<double>::epsilon() * static_cast<double>(std::max(n, m)) *
                 max_norm;

    std::vector<double> r_diag(m);
    for (std::size_t k = 0; k < m; ++k) {
        // Pivot: bring the column with the largest remaining norm to position k.
        std::size_t best = k;
        double best_norm = col_norm_tail(k, k);
        for (std::size_t j = k + 1; j < m; ++j) {
            double nj = col_norm_tail(j, k);
            if (nj > best_norm) {
                best = j;
                best_norm = nj;
            }
        }
        std::swap(a[k], a[best]);
        std::swap(perm[k], perm[best]);
        if (best_norm <= tol) {
            throw std::runtime_error("ols: rank deficient design matrix; " +
                                     column_label(perm[k]) +
                                     " is linearly dependent on the others");
        }

        // Householder reflection zeroing a[k][k+1..n).
        double alpha = a[k][k] >= 0 ? -best_norm : best_norm;
        std::vector<double> v(n - k);
        v[0] = a[k][k] - alpha;
        for (std::size_t i = k + 1; i < n; ++i) v[i - k] = a[k][i];
        double vnorm2 = 0;
        for (double vi : v) vnorm2 += vi * vi;
        a[k][k] = alpha;
        r_diag[k] = alpha;
        for (std::size_t i = k + 1; i < n; ++i) a[k][i] = 0.0;
        if (vnorm2 > 0) {
            for (std::size_t j = k + 1; j < m; ++j) {
                double dot = 0;
                for (std::size_t i = k; i < n; ++i) dot += v[i - k] * a[j][i];
                double f = 2.0 * dot / vnorm2;
                for (std::size_t i = k; i < n; ++i) a[j][i] -= f * v[i - k];
            }
            double dot = 0;
            for (std::size_t i = k; i < n; ++i) dot += v[i - k] * rhs[i];
            double f = 2.0 * dot / vnorm2;
            for (std::size_t i = k; i < n; ++i) rhs[i] -= f * v[i - k];
        }
    }

    // Back-substitution on R z = Q^T y, then undo the column permutation.
    std::vector<double> z(m);
    for (std::size_t kk = m; kk-- > 0;) {
        double s = rhs[kk];
        for (std::size_t j = kk + 1; j < m; ++j) s -= a[j][kk] * z[j];
        z[kk] = s / r_diag[kk];
    }
    std::vector<double> beta(m);
    for (std::size_t k = 0; k < m; ++k) beta[perm[k]] = z[k];

    OlsModel model;
    model.intercept = beta[0];
    model.coefficients.assign(beta.begin() + 1, beta.end());
    return model;
}

}  // namespace marketml
