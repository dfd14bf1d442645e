#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "marketml/dates.hpp"
#include "marketml/market_data.hpp"

namespace marketml {

using Matrix = std::vector<std::vector<double>>;  // row-major

/// Feature rows plus the target column; complete rows only (the assembly
/// step drops every row with a missing value). Column order is fixed:
/// [A, A_lag_1, A_lag_2, A_lag_3, A_roll_mean_3, A_roll_std_3].
struct FeatureMatrix {
    std::vector<std::string> column_names;
    Matrix rows;
    std::vector<double> target;
    std::vector<Date> row_dates;

    std::size_t n_rows() const { return rows.size(); }
    std::size_t n_cols() const { return column_names.size(); }
};

/// xs shifted back by k steps; the first k slots are NaN. k in [1, len).
std::vector<double> lag(std::span<const double> xs, std::size_t k);

struct RollingStats {
    std::vector<double> means;
    std::vector<double> stds;  // sample (w-1) denominator
};

/// Trailing-window mean and std; the first w-1 slots are NaN. 2 <= w <= len.
RollingStats rolling_stats(std::span<const double> xs, std::size_t window);

/// Builds the lag/rolling feature matrix from an aligned pair: features are
/// the A-side close and its lags 1-3 and rolling mean/std over window 3;
/// the target is the B-side close. The first three rows (incomplete) are
/// dropped. Requires pair length >= 5.
FeatureMatrix assemble(const AlignedPair& pair);

enum class SplitMode { Shuffled, Chronological };

struct SplitSpec {
    double test_fraction = 0.2;
    SplitMode mode = SplitMode::Shuffled;
    std::uint64_t seed = 42;
};

/// Disjoint, exhaustive train/test partition. Shuffled mode applies a
/// seeded Fisher-Yates permutation to the row indices first; chronological
/// mode keeps row order. Train size is ceil((1-f)*n). Throws when either
/// side would be empty.
std::pair<FeatureMatrix, FeatureMatrix> split(const FeatureMatrix& fm, const SplitSpec& spec);

/// Per-column z-score transform with mean/std learned from the training
/// partition only. The target is never transformed.
class Standardizer {
public:
    /// Throws std::runtime_error naming any constant training column.
    static Standardizer fit(const FeatureMatrix& train);

    FeatureMatrix apply(const FeatureMatrix& fm) const;
    FeatureMatrix inverse(const FeatureMatrix& fm) const;

    const std::vector<double>& means() const { return means_; }
    const std::vector<double>& stds() const { return stds_; }

private:
    std::vector<double> means_, stds_;  // sample (n-1) std
};

}  // namespace marketml
