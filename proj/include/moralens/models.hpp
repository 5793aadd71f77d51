#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "moralens/rng.hpp"

namespace moralens {

// Binary regression tree stored as a flat node array. Every node carries
// its training-sample count (cover); the explanation module needs covers to
// weight conditional expectations.
struct RegressionTree {
    struct Node {
        int feature = -1;        // -1 marks a leaf
        double threshold = 0.0;  // x[feature] <= threshold goes left
        int left = -1;
        int right = -1;
        double value = 0.0;      // leaf prediction (mean of its samples)
        double cover = 0.0;      // training samples through this node

        bool is_leaf() const { return feature < 0; }
    };
    std::vector<Node> nodes;  // nodes[0] is the root

    double predict(std::span<const double> x) const;
    int max_depth() const;
};

// Greedy variance-reduction CART over mtry sampled features. Splitting
// stops when a node is pure, smaller than 2*min_leaf, or no split lowers
// the summed squared error. Constant targets give a single-leaf tree.
RegressionTree train_tree(const std::vector<std::vector<double>>& X,
                          std::span<const double> y, std::size_t mtry,
                          std::size_t min_leaf, Rng& rng);

struct ForestParams {
    std::size_t n_trees = 500;
    std::size_t mtry = 0;  // 0 -> ceil(p / 3)
    std::size_t min_leaf = 5;
    bool bootstrap = true;
    std::uint64_t seed = 1;
};

struct RandomForestModel {
    std::vector<RegressionTree> trees;
    ForestParams params;

    // Arithmetic mean of the tree predictions, exactly.
    double predict(std::span<const double> x) const;

    void save(const std::string& path) const;
    static RandomForestModel load(const std::string& path);
};

// Per-tree seeds derive from the master seed by counter, so training is
// reproducible and independent of the thread count.
RandomForestModel train_forest(const std::vector<std::vector<double>>& X,
                               std::span<const double> y,
                               const ForestParams& params,
                               unsigned threads = 1);

struct ElasticNetModel {
    std::vector<double> weights;
    double intercept = 0.0;
    double lambda = 0.0;
    double mix = 0.5;  // 1 = pure L1, 0 = pure L2
    std::vector<double> objective_trace;  // one entry per sweep

    double predict(std::span<const double> x) const;
};

// Cyclic coordinate descent with soft-thresholding on (ideally z-scored)
// features. Objective: RSS/(2n) + lambda*(mix*|w|_1 + (1-mix)/2*|w|_2^2).
// Throws ConvergenceError with the last objective if max_sweeps is hit.
ElasticNetModel train_elasticnet(const std::vector<std::vector<double>>& X,
                                 std::span<const double> y, double lambda,
                                 double mix, double tol = 1e-6,
                                 std::size_t max_sweeps = 10000);

enum class ModelFamily { kRandomForest, kElasticNet };

struct CvParams {
    std::size_t k_folds = 5;
    std::size_t repeats = 20;
    std::uint64_t seed = 1;
    bool permute_targets = false;  // validation control: breaks the X-y link
};

struct ElasticNetParams {
    double lambda = 0.1;
    double mix = 0.5;
};

struct CvTargetReport {
    std::string target;
    double mean_r = 0.0;
    double ci_lo = 0.0;   // 2.5th percentile over fold x repeat r values
    double ci_hi = 0.0;   // 97.5th percentile
    std::vector<double> fold_r;
    std::size_t excluded_folds = 0;  // undefined r (zero variance)
};

struct CvReport {
    std::string experiment_id;
    std::uint64_t seed = 0;
    std::vector<CvTargetReport> targets;
};

struct CvSingleInput {
    std::string target_name;
    const std::vector<std::vector<double>>* X = nullptr;  // raw, n x p
    const std::vector<double>* y = nullptr;
};

// Repeated shuffled k-fold CV. Normalization parameters are fit on each
// training fold only; one single-target model is trained per fold. The
// fold partition depends on (seed, repeat) alone, so every target sees the
// same splits. Requires n >= 2k.
CvReport cross_validate(const std::string& experiment_id, ModelFamily family,
                        const std::vector<CvSingleInput>& inputs,
                        const CvParams& cv, const ForestParams& forest,
                        const ElasticNetParams& enet, unsigned threads = 1);

}  // namespace moralens
