#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "marketml/models.hpp"

namespace marketml {

namespace {

int resolve_threads(int requested) {
#ifdef _OPENMP
    return requested > 0 ? requested : omp_get_max_threads();
#else
    (void)requested;
    return 1;
#endif
}

RegressionTree fit_forest_tree(const Matrix& X, const std::vector<double>& y,
                               const ForestConfig& config, int tree_index) {
    Rng rng(Rng::derive(config.seed, static_cast<std::uint64_t>(tree_index)));

    const Matrix* train_x = &X;
    const std::vector<double>* train_y = &y;
    Matrix boot_x;
    std::vector<double> boot_y;
    if (config.bootstrap) {
        std::size_t n = X.size();
        boot_x.reserve(n);
        boot_y.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t r = static_cast<std::size_t>(rng.next_below(n));
            boot_x.push_back(X[r]);
            boot_y.push_back(y[r]);
        }
        train_x = &boot_x;
        train_y = &boot_y;
    }

    TreeConfig tree_cfg;
    tree_cfg.max_features = config.max_features;
    tree_cfg.min_leaf = config.min_leaf;
    tree_cfg.max_depth = config.max_depth;
    return fit_tree(*train_x, *train_y, tree_cfg, rng);
}

void check_forest_inputs(const Matrix& X, const std::vector<double>& y,
                         const ForestConfig& config) {
    if (X.empty() || X.size() != y.size()) {
        throw std::invalid_argument("forest: X and y must be non-empty and equal length");
    }
    if (config.n_trees < 1) throw std::invalid_argument("forest: n_trees must be >= 1");
}

}  // namespace

std::vector<double> ForestModel::predict(const Matrix& X) const {
    std::vector<double> out;
    out.reserve(X.size());
    for (const auto& row : X) {
        if (row.size() != n_features) {
            throw std::invalid_argument("forest predict: feature count mismatch");
        }
        double sum = 0;
        for (const RegressionTree& tree : trees) sum += tree.predict_row(row);
        out.push_back(sum / static_cast<double>(trees.size()));
    }
    return out;
}

nlohmann::ordered_json ForestModel::to_json() const {
    nlohmann::ordered_json j;
    j["kind"] = kind();
    j["n_trees"] = config.n_trees;
    j["seed"] = config.seed;
    j["n_features"] = n_features;
    nlohmann::ordered_json trees_json = nlohmann::json::array();
    for (const RegressionTree& tree : trees) {
        nlohmann::ordered_json nodes = nlohmann::json::array();
        for (const TreeNode& n : tree.nodes) {
            nodes.push_back({{"feature", n.feature},
                             {"threshold", n.threshold},
                             {"left", n.left},
                             {"right", n.right},
                             {"value", n.value}});
        }
        trees_json.push_back(std::move(nodes));
    }
    j["trees"] = std::move(trees_json);
    return j;
}

ForestModel fit_forest(const Matrix& X, const std::vector<double>& y,
                       const ForestConfig& config) {
    check_forest_inputs(X, y, config);
    ForestModel model;
    model.config = config;
    model.n_features = X.front().size();
    model.trees.resize(static_cast<std::size_t>(config.n_trees));
    // Per-tree seeds make the result schedule-independent: tree t is the
    // same whether fit here or in fit_forest_serial.
    const int nt = resolve_threads(config.n_threads);
    (void)nt;
#pragma omp parallel for schedule(static) num_threads(nt)
    for (int t = 0; t < config.n_trees; ++t) {
        model.trees[static_cast<std::size_t>(t)] = fit_forest_tree(X, y, config, t);
    }
    return model;
}

ForestModel fit_forest_serial(const Matrix& X, const std::vector<double>& y,
                              const ForestConfig& config) {
    check_forest_inputs(X, y, config);
    ForestModel model;
    model.config = config;
    model.n_features = X.front().size();
    model.trees.reserve(static_cast<std::size_t>(config.n_trees));
    for (int t = 0; t < config.n_trees; ++t) {
        model.trees.push_back(fit_forest_tree(X, y, config, t));
    }
    return model;
}

}  // namespace marketml
