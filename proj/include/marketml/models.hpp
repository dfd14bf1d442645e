#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "marketml/features.hpp"
#include "marketml/rng.hpp"

namespace marketml {

// ============================================================================
// Configuration
// ============================================================================

struct OlsConfig {};

struct KnnConfig {
    int k = 5;
};

enum class SvrKernel { Linear, Poly };

struct SvrConfig {
    SvrKernel kernel = SvrKernel::Poly;
    double c = 1.0;        // box penalty, > 0
    double epsilon = 0.1;  // tube half-width, >= 0
    double gamma = 0.0;    // <= 0 selects "scale": 1 / (n_features * Var(all X entries))
    int degree = 3;        // poly kernel only
    double coef0 = 0.0;    // poly kernel only
    double tol = 1e-3;     // KKT tolerance
    int max_passes = 100000;
};

struct MaxFeatures {
    enum class Kind { All, Sqrt, Fraction };
    Kind kind = Kind::All;
    double fraction = 1.0;

    static MaxFeatures all() { return {}; }
    static MaxFeatures sqrt() { return {Kind::Sqrt, 0.0}; }
    static MaxFeatures frac(double f) { return {Kind::Fraction, f}; }

    std::size_t resolve(std::size_t n_features) const;
};

struct TreeConfig {
    MaxFeatures max_features;
    int min_leaf = 1;
    int max_depth = -1;  // -1 = unlimited
};

struct ForestConfig {
    int n_trees = 100;
    std::uint64_t seed = 0;
    MaxFeatures max_features;
    int min_leaf = 1;
    int max_depth = -1;
    bool bootstrap = true;  // disabled only as a test hook
    int n_threads = 0;      // 0 = all available
};

using ModelConfig = std::variant<OlsConfig, KnnConfig, SvrConfig, ForestConfig>;

/// "ols", "knn", "svr", "random_forest".
std::string model_kind(const ModelConfig& config);
nlohmann::ordered_json config_to_json(const ModelConfig& config);

// ============================================================================
// Fitted models — one predict contract
// ============================================================================

class FittedModel {
public:
    virtual ~FittedModel() = default;
    virtual std::string kind() const = 0;
    virtual std::vector<double> predict(const Matrix& X) const = 0;
    virtual nlohmann::ordered_json to_json() const = 0;
};

/// Inverse of FittedModel::to_json. Throws std::runtime_error on an
/// unknown kind or malformed document.
std::unique_ptr<FittedModel> model_from_json(const nlohmann::json& doc);

std::unique_ptr<FittedModel> fit_model(const ModelConfig& config, const Matrix& X,
                                       const std::vector<double>& y,
                                       const std::vector<std::string>* column_names = nullptr);

// ----------------------------------------------------------------------------
// Ordinary least squares
// ----------------------------------------------------------------------------

class OlsModel final : public FittedModel {
public:
    std::vector<double> coefficients;
    double intercept = 0;

    std::string kind() const override { return "ols"; }
    std::vector<double> predict(const Matrix& X) const override;
    nlohmann::ordered_json to_json() const override;
};

/// Least-squares fit via Householder QR with column pivoting. Requires
/// rows >= columns + 1; throws std::runtime_error naming the dependent
/// column on rank deficiency.
OlsModel fit_ols(const Matrix& X, const std::vector<double>& y,
                 const std::vector<std::string>* column_names = nullptr);

// ----------------------------------------------------------------------------
// k-nearest-neighbours
// ----------------------------------------------------------------------------

class KnnModel final : public FittedModel {
public:
    Matrix train_x;
    std::vector<double> train_y;
    int k = 5;

    std::string kind() const override { return "knn"; }
    /// Uniform average of the k nearest training rows by Euclidean
    /// distance; equidistant ties resolved toward the lower training row
    /// index. Queries run in parallel.
    std::vector<double> predict(const Matrix& X) const override;
    std::vector<double> predict_serial(const Matrix& X) const;
    nlohmann::ordered_json to_json() const override;
};

KnnModel fit_knn(Matrix X, std::vector<double> y, const KnnConfig& config);

// ----------------------------------------------------------------------------
// epsilon-insensitive SVR (SMO dual solver)
// ----------------------------------------------------------------------------

class SvrModel final : public FittedModel {
public:
    SvrConfig config;        // gamma resolved to its numeric value
    std::size_t n_features = 0;
    Matrix support_vectors;  // training rows with nonzero dual coefficient
    std::vector<double> beta;  // beta_i = alpha_i - alpha_i*, one per support vector
    double bias = 0;
    bool converged = true;
    int iterations = 0;

    std::string kind() const override { return "svr"; }
    std::vector<double> predict(const Matrix& X) const override;
    nlohmann::ordered_json to_json() const override;
};

/// Per-fit diagnostics for optimality checks.
struct SvrDiagnostics {
    std::vector<double> beta;  // per training row (zeros included)
    double bias = 0;
    double max_kkt_violation = 0;
    double dual_objective = 0;
    int iterations = 0;
    bool converged = false;
    double gamma = 0;  // resolved value
};

/// Solves the epsilon-insensitive dual by sequential minimal optimization
/// over coefficient pairs. Non-convergence within max_passes is flagged on
/// the returned model, never silent.
SvrModel fit_svr(const Matrix& X, const std::vector<double>& y, const SvrConfig& config,
                 SvrDiagnostics* diagnostics = nullptr);

double kernel_value(const SvrConfig& config, std::span<const double> u,
                    std::span<const double> v);

// ----------------------------------------------------------------------------
// CART regression tree and random forest
// ----------------------------------------------------------------------------

struct TreeNode {
    int feature = -1;  // -1 marks a leaf
    double threshold = 0;
    int left = -1, right = -1;
    double value = 0;  // leaf prediction (mean of node targets)

    bool is_leaf() const { return feature < 0; }
    bool operator==(const TreeNode&) const = default;
};

struct RegressionTree {
    std::vector<TreeNode> nodes;  // nodes[0] is the root

    double predict_row(std::span<const double> row) const;

    bool operator==(const RegressionTree&) const = default;
};

/// Greedy variance-reduction CART. Candidate thresholds are midpoints of
/// consecutive distinct sorted values; ties go to the lower feature index,
/// then the lower threshold. `rng` drives feature subsampling only.
RegressionTree fit_tree(const Matrix& X, const std::vector<double>& y,
                        const TreeConfig& config, Rng& rng);

class ForestModel final : public FittedModel {
public:
    std::vector<RegressionTree> trees;
    ForestConfig config;
    std::size_t n_features = 0;

    std::string kind() const override { return "random_forest"; }
    /// Unweighted mean of the per-tree predictions, accumulated in tree
    /// order (thread-count independent).
    std::vector<double> predict(const Matrix& X) const override;
    nlohmann::ordered_json to_json() const override;
};

/// Trains config.n_trees trees, each on a bootstrap sample drawn from an
/// rng seeded with Rng::derive(config.seed, tree_index). Trees fit in
/// parallel; the result is bit-identical to fit_forest_serial for any
/// thread count.
ForestModel fit_forest(const Matrix& X, const std::vector<double>& y,
                       const ForestConfig& config);

/// Single-threaded reference implementation kept for equivalence tests and
/// the benchmark.
ForestModel fit_forest_serial(const Matrix& X, const std::vector<double>& y,
                              const ForestConfig& config);

}  // namespace marketml
