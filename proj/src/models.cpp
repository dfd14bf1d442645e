#include <stdexcept>

#include "marketml/models.hpp"

namespace marketml {

namespace {

nlohmann::ordered_json max_features_json(const MaxFeatures& mf) {
    switch (mf.kind) {
        case MaxFeatures::Kind::All: return "all";
        case MaxFeatures::Kind::Sqrt: return "sqrt";
        case MaxFeatures::Kind::Fraction: return mf.fraction;
    }
    return "all";
}

}  // namespace

std::string model_kind(const ModelConfig& config) {
    return std::visit(
        [](const auto& c) -> std::string {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, OlsConfig>) {
                return "ols";
            } else if constexpr (std::is_same_v<T, KnnConfig>) {
                return "knn";
            } else if constexpr (std::is_same_v<T, SvrConfig>) {
                return "svr";
            } else {
                static_assert(std::is_same_v<T, ForestConfig>);
                return "random_forest";
            }
        },
        config);
}

nlohmann::ordered_json config_to_json(const ModelConfig& config) {
    nlohmann::ordered_json j;
    j["kind"] = model_kind(config);
    std::visit(
        [&j](const auto& c) {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, KnnConfig>) {
                j["k"] = c.k;
            } else if constexpr (std::is_same_v<T, SvrConfig>) {
                j["kernel"] = c.kernel == SvrKernel::Linear ? "linear" : "poly";
                j["c"] = c.c;
                j["epsilon"] = c.epsilon;
                j["gamma"] = c.gamma > 0 ? nlohmann::ordered_json(c.gamma)
                                         : nlohmann::ordered_json("scale");
                if (c.kernel == SvrKernel::Poly) {
                    j["degree"] = c.degree;
                    j["coef0"] = c.coef0;
                }
                j["tol"] = c.tol;
                j["max_passes"] = c.max_passes;
            } else if constexpr (std::is_same_v<T, ForestConfig>) {
                j["n_trees"] = c.n_trees;
                j["seed"] = c.seed;
                j["max_features"] = max_features_json(c.max_features);
                j["min_leaf"] = c.min_leaf;
                if (c.max_depth >= 0) j["max_depth"] = c.max_depth;
                j["bootstrap"] = c.bootstrap;
            }
        },
        config);
    return j;
}

std::unique_ptr<FittedModel> fit_model(const ModelConfig& config, const Matrix& X,
                                       const std::vector<double>& y,
                                       const std::vector<std::string>* column_names) {
    return std::visit(
        [&](const auto& c) -> std::unique_ptr<FittedModel> {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, OlsConfig>) {
                return std::make_unique<OlsModel>(fit_ols(X, y, column_names));
            } else if constexpr (std::is_same_v<T, KnnConfig>) {
                return std::make_unique<KnnModel>(fit_knn(X, y, c));
            } else if constexpr (std::is_same_v<T, SvrConfig>) {
                return std::make_unique<SvrModel>(fit_svr(X, y, c));
            } else {
                return std::make_unique<ForestModel>(fit_forest(X, y, c));
            }
        },
        config);
}

std::unique_ptr<FittedModel> model_from_json(const nlohmann::json& doc) {
    if (!doc.is_object() || !doc.contains("kind")) {
        throw std::runtime_error("model document: missing \"kind\"");
    }
    std::string kind = doc.at("kind").get<std::string>();
    if (kind == "ols") {
        auto m = std::make_unique<OlsModel>();
        m->coefficients = doc.at("coefficients").get<std::vector<double>>();
        m->intercept = doc.at("intercept").get<double>();
        return m;
    }
    if (kind == "knn") {
        auto m = std::make_unique<KnnModel>();
        m->k = doc.at("k").get<int>();
        m->train_x = doc.at("train_x").get<Matrix>();
        m->train_y = doc.at("train_y").get<std::vector<double>>();
        return m;
    }
    if (kind == "svr") {
        auto m = std::make_unique<SvrModel>();
        m->config.kernel =
            doc.at("kernel").get<std::string>() == "linear" ? SvrKernel::Linear : SvrKernel::Poly;
        m->config.c = doc.at("c").get<double>();
        m->config.epsilon = doc.at("epsilon").get<double>();
        m->config.gamma = doc.at("gamma").get<double>();
        m->config.degree = doc.at("degree").get<int>();
        m->config.coef0 = doc.at("coef0").get<double>();
        m->n_features = doc.at("n_features").get<std::size_t>();
        m->bias = doc.at("bias").get<double>();
        m->converged = doc.at("converged").get<bool>();
        m->iterations = doc.at("iterations").get<int>();
        m->support_vectors = doc.at("support_vectors").get<Matrix>();
        m->beta = doc.at("beta").get<std::vector<double>>();
        return m;
    }
    if (kind == "random_forest") {
        auto m = std::make_unique<ForestModel>();
        m->config.n_trees = doc.at("n_trees").get<int>();
        m->config.seed = doc.at("seed").get<std::uint64_t>();
        m->n_features = doc.at("n_features").get<std::size_t>();
        for (const auto& tree_json : doc.at("trees")) {
            RegressionTree tree;
            for (const auto& nj : tree_json) {
                TreeNode node;
                node.feature = nj.at("feature").get<int>();
                node.threshold = nj.at("threshold").get<double>();
                node.left = nj.at("left").get<int>();
                node.right = nj.at("right").get<int>();
                node.value = nj.at("value").get<double>();
                tree.nodes.push_back(node);
            }
            m->trees.push_back(std::move(tree));
        }
        return m;
    }
    throw std::runtime_error("model document: unknown kind \"" + kind + "\"");
}

}  // namespace marketml
