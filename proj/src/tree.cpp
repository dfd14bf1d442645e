#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "marketml/models.hpp"

namespace marketml {

std::size_t MaxFeatures::resolve(std::size_t n_features) const {
    std::size_t m = n_features;
    switch (kind) {
        case Kind::All:
            m = n_features;
            break;
        case Kind::Sqrt:
            m = static_cast<std::size_t>(std::sqrt(static_cast<double>(n_features)));
            break;
        case Kind::Fraction:
            if (!(fraction > 0.0 && fraction <= 1.0)) {
                throw std::invalid_argument("max_features fraction must lie in (0,1]");
            }
            m = static_cast<std::size_t>(fraction * static_cast<double>(n_features));
            break;
    }
    return std::clamp<std::size_t>(m, 1, n_features);
}

double RegressionTree::predict_row(std::span<const double> row) const {
    int node = 0;
    while (!nodes[static_cast<std::size_t>(node)].is_leaf()) {
        const TreeNode& nd = nodes[static_cast<std::size_t>(node)];
        node = row[static_cast<std::size_t>(nd.feature)] <= nd.threshold ? nd.left : nd.right;
    }
    return nodes[static_cast<std::size_t>(node)].value;
}

namespace {

struct BestSplit {
    int feature = -1;
    double threshold = 0;
    double score = 0;  // weighted variance reduction, as SSE decrease
    bool found = false;
};

// Two scores within a hair of each other count as tied, so float noise in
// the prefix sums cannot override the (feature index, threshold) tie-break.
bool strictly_better(double candidate, double best) {
    double tie = 1e-9 * std::max({1.0, std::fabs(candidate), std::fabs(best)});
    return candidate > best + tie;
}

class TreeBuilder {
public:
    TreeBuilder(const Matrix& x, const std::vector<double>& y, const TreeConfig& cfg, Rng& rng)
        : x_(x), y_(y), cfg_(cfg), rng_(rng), n_features_(x.front().size()) {}

    RegressionTree build(std::vector<std::size_t> samples) {
        tree_.nodes.clear();
        grow(std::move(samples), 0);
        return std::move(tree_);
    }

private:
    int grow(std::vector<std::size_t> samples, int depth) {
        int index = static_cast<int>(tree_.nodes.size());
        tree_.nodes.emplace_back();

        double sum = 0;
        for (std::size_t i : samples) sum += y_[i];
        double mean = sum / static_cast<double>(samples.size());
        tree_.nodes[static_cast<std::size_t>(index)].value = mean;

        if (stop_here(samples, depth)) return index;

        BestSplit best = find_best_split(samples);
        if (!best.found) return index;

        std::vector<std::size_t> left, right;
        for (std::size_t i : samples) {
            (x_[i][static_cast<std::size_t>(best.feature)] <= best.threshold ? left : right)
                .push_back(i);
        }
        samples.clear();
        samples.shrink_to_fit();

        // Children are grown left-first so the rng stream is a pure
        // function of the tree shape.
        int l = grow(std::move(left), depth + 1);
        int r = grow(std::move(right), depth + 1);
        TreeNode& node = tree_.nodes[static_cast<std::size_t>(index)];
        node.feature = best.feature;
        node.threshold = best.threshold;
        node.left = l;
        node.right = r;
        return index;
    }

    bool stop_here(const std::vector<std::size_t>& samples, int depth) const {
        if (cfg_.max_depth >= 0 && depth >= cfg_.max_depth) return true;
        if (samples.size() < 2 * static_cast<std::size_t>(cfg_.min_leaf)) return true;
        double lo = y_[samples.front()], hi = lo;
        for (std::size_t i : samples) {
            lo = std::min(lo, y_[i]);
            hi = std::max(hi, y_[i]);
        }
        return lo == hi;  // pure node
    }

    std::vector<int> candidate_features() {
        std::size_t m = cfg_.max_features.resolve(n_features_);
        std::vector<int> all(n_features_);
        std::iota(all.begin(), all.end(), 0);
        if (m == n_features_) return all;
        // Partial Fisher-Yates: first m entries are a uniform subset.
        for (std::size_t i = 0; i < m; ++i) {
            std::size_t j = i + static_cast<std::size_t>(rng_.next_below(all.size() - i));
            std::swap(all[i], all[j]);
        }
        all.resize(m);
        std::sort(all.begin(), all.end());
        return all;
    }

    BestSplit find_best_split(const std::vector<std::size_t>& samples) {
        std::vector<int> features = candidate_features();
        std::size_t n = samples.size();

        double total_sum = 0, total_sum2 = 0;
        for (std::size_t i : samples) {
            total_sum += y_[i];
            total_sum2 += y_[i] * y_[i];
        }
        double parent_sse = total_sum2 - total_sum * total_sum / static_cast<double>(n);

        BestSplit best;
        std::vector<std::pair<double, double>> vals(n);  // (x, y) sorted by x
        for (int f : features) {
            for (std::size_t i = 0; i < n; ++i) {
                vals[i] = {x_[samples[i]][static_cast<std::size_t>(f)], y_[samples[i]]};
            }
            std::sort(vals.begin(), vals.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });

            double left_sum = 0, left_sum2 = 0;
            for (std::size_t cut = 1; cut < n; ++cut) {
                left_sum += vals[cut - 1].second;
                left_sum2 += vals[cut - 1].second * vals[cut - 1].second;
                if (vals[cut].first == vals[cut - 1].first) continue;  // not a boundary
                if (cut < static_cast<std::size_t>(cfg_.min_leaf) ||
                    n - cut < static_cast<std::size_t>(cfg_.min_leaf)) {
                    continue;
                }
                double threshold = 0.5 * (vals[cut - 1].first + vals[cut].first);
                if (!(threshold < vals[cut].first)) continue;  // rounding collapsed the midpoint

                double nl = static_cast<double>(cut);
                double nr = static_cast<double>(n - cut);
                double right_sum = total_sum - left_sum;
                double right_sum2 = total_sum2 - left_sum2;
                double sse = (left_sum2 - left_sum * left_sum / nl) +
                             (right_sum2 - right_sum * right_sum / nr);
                double score = parent_sse - sse;
                if ((!best.found && score > 0) || (best.found && strictly_better(score, best.score))) {
                    best.feature = f;
                    best.threshold = threshold;
                    best.score = score;
                    best.found = true;
                }
            }
        }
        return best;
    }

    RegressionTree tree_;
    const Matrix& x_;
    const std::vector<double>& y_;
    const TreeConfig& cfg_;
    Rng& rng_;
    std::size_t n_features_;
};

}  // namespace

RegressionTree fit_tree(const Matrix& X, const std::vector<double>& y, const TreeConfig& config,
                        Rng& rng) {
    if (X.empty() || X.size() != y.size()) {
        throw std::invalid_argument("tree: X and y must be non-empty and equal length");
    }
    if (config.min_leaf < 1) throw std::invalid_argument("tree: min_leaf must be >= 1");
    std::vector<std::size_t> samples(X.size());
    std::iota(samples.begin(), samples.end(), 0);
    TreeBuilder builder(X, y, config, rng);
    return builder.build(std::move(samples));
}

}  // namespace marketml
