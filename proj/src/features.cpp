#include "marketml/features.hpp"

#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "marketml/rng.hpp"
#include "marketml/stats.hpp"

namespace marketml {

namespace {

constexpr double kMissing = std::numeric_limits<double>::quiet_NaN();

}  // namespace

std::vector<double> lag(std::span<const double> xs, std::size_t k) {
    if (k == 0 || k >= xs.size()) {
        throw std::invalid_argument("lag must satisfy 1 <= k < len");
    }
    std::vector<double> out(xs.size(), kMissing);
    for (std::size_t i = k; i < xs.size(); ++i) out[i] = xs[i - k];
    return out;
}

RollingStats rolling_stats(std::span<const double> xs, std::size_t window) {
    if (window < 2 || window > xs.size()) {
        throw std::invalid_argument("rolling window must satisfy 2 <= w <= len");
    }
    RollingStats rs;
    rs.means.assign(xs.size(), kMissing);
    rs.stds.assign(xs.size(), kMissing);
    for (std::size_t i = window - 1; i < xs.size(); ++i) {
        std::span<const double> win = xs.subspan(i - window + 1, window);
        rs.means[i] = mean_of(win);
        rs.stds[i] = sample_std(win);
    }
    return rs;
}

FeatureMatrix assemble(const AlignedPair& pair) {
    constexpr std::size_t kMaxLag = 3;
    constexpr std::size_t kWindow = 3;
    if (pair.size() < kMaxLag + 2) {
        throw std::invalid_argument("aligned pair too short: need at least " +
                                    std::to_string(kMaxLag + 2) + " rows, got " +
                                    std::to_string(pair.size()));
    }

    const std::vector<double>& a = pair.series_a();
    const std::string& id = pair.market_a;

    std::vector<std::vector<double>> cols;
    cols.push_back(a);
    std::vector<std::string> names{id};
    for (std::size_t k = 1; k <= kMaxLag; ++k) {
        cols.push_back(lag(a, k));
        names.push_back(id + "_lag_" + std::to_string(k));
    }
    RollingStats rs = rolling_stats(a, kWindow);
    cols.push_back(std::move(rs.means));
    names.push_back(id + "_roll_mean_" + std::to_string(kWindow));
    cols.push_back(std::move(rs.stds));
    names.push_back(id + "_roll_std_" + std::to_string(kWindow));

    FeatureMatrix fm;
    fm.column_names = std::move(names);
    for (std::size_t i = 0; i < pair.size(); ++i) {
        std::vector<double> row;
        row.reserve(cols.size());
        bool complete = true;
        for (const auto& col : cols) {
            if (std::isnan(col[i])) {
                complete = false;
                break;
            }
            row.push_back(col[i]);
        }
        if (!complete) continue;
        fm.rows.push_back(std::move(row));
        fm.target.push_back(pair.series_b()[i]);
        fm.row_dates.push_back(pair.dates[i]);
    }
    if (fm.rows.empty()) {
        throw std::invalid_argument("no complete rows left after feature assembly");
    }
    return fm;
}

std::pair<FeatureMatrix, FeatureMatrix> split(const FeatureMatrix& fm, const SplitSpec& spec) {
    if (!(spec.test_fraction > 0.0 && spec.test_fraction < 1.0)) {
        throw std::invalid_argument("test fraction must lie in (0,1)");
    }
    std::size_t n = fm.n_rows();
    auto n_train = static_cast<std::size_t>(
        std::ceil((1.0 - spec.test_fraction) * static_cast<double>(n)));
    if (n_train == 0 || n_train >= n) {
        throw std::invalid_argument("split leaves an empty partition (n=" +
                                    std::to_string(n) + ", test_fraction=" +
                                    std::to_string(spec.test_fraction) + ")");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    if (spec.mode == SplitMode::Shuffled) {
        Rng rng(spec.seed);
        shuffle(order, rng);
    }

    auto take = [&](std::size_t begin, std::size_t end) {
        FeatureMatrix part;
        part.column_names = fm.column_names;
        part.rows.reserve(end - begin);
        for (std::size_t i = begin; i < end; ++i) {
            std::size_t r = order[i];
            part.rows.push_back(fm.rows[r]);
            part.target.push_back(fm.target[r]);
            part.row_dates.push_back(fm.row_dates[r]);
        }
        return part;
    };
    return {take(0, n_train), take(n_train, n)};
}

Standardizer Standardizer::fit(const FeatureMatrix& train) {
    if (train.n_rows() < 2) throw std::invalid_argument("standardizer needs >= 2 training rows");
    Standardizer s;
    std::size_t p = train.n_cols();
    s.means_.resize(p);
    s.stds_.resize(p);
    for (std::size_t j = 0; j < p; ++j) {
        std::vector<double> col;
        col.reserve(train.n_rows());
        for (const auto& row : train.rows) col.push_back(row[j]);
        s.means_[j] = mean_of(col);
        s.stds_[j] = sample_std(col);
        if (s.stds_[j] <= 0) {
            throw std::runtime_error("constant training column \"" + train.column_names[j] +
                                     "\" cannot be standardized");
        }
    }
    return s;
}

FeatureMatrix Standardizer::apply(const FeatureMatrix& fm) const {
    if (fm.n_cols() != means_.size()) {
        throw std::invalid_argument("standardizer: expected " + std::to_string(means_.size()) +
                                    " columns, got " + std::to_string(fm.n_cols()));
    }
    FeatureMatrix out = fm;
    for (auto& row : out.rows) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            row[j] = (row[j] - means_[j]) / stds_[j];
        }
    }
    return out;
}

FeatureMatrix Standardizer::inverse(const FeatureMatrix& fm) const {
    if (fm.n_cols() != means_.size()) {
        throw std::invalid_argument("standardizer: expected " + std::to_string(means_.size()) +
                                    " columns, got " + std::to_string(fm.n_cols()));
    }
    FeatureMatrix out = fm;
    for (auto& row : out.rows) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            row[j] = row[j] * stds_[j] + means_[j];
        }
    }
    return out;
}

}  // namespace marketml
