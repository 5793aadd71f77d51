#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "moralens/models.hpp"

namespace moralens {

struct ShapExplanation {
    std::vector<double> phi;   // one attribution per feature
    double base_value = 0.0;   // expected model output (cover-weighted)
    std::string instance_id;
};

// Exact Shapley attributions for the forest under path-dependent
// (cover-weighted) conditioning: when a coalition excludes a feature, both
// branches of its splits are averaged with cover weights. Attributions are
// averaged over trees; base_value + sum(phi) equals the prediction.
// Throws if any node lacks a positive cover.
ShapExplanation tree_shap(const RandomForestModel& forest,
                          std::span<const double> x);

// Enumeration oracle over all 2^p coalitions of the same value function.
// Refuses p > 15.
std::vector<double> brute_shapley(const RandomForestModel& forest,
                                  std::span<const double> x);

// Cover-weighted expected output of the forest (the SHAP base value).
double forest_expected_value(const RandomForestModel& forest);

struct PermutationImportance {
    double baseline = 0.0;                // metric on intact data
    std::vector<double> mean_drop;        // baseline - shuffled metric
    std::vector<double> stddev;           // dispersion over repeats
};

// Within-column shuffle importance on held-out data, metric = Pearson r.
PermutationImportance permutation_importance(
    const std::function<double(std::span<const double>)>& predict,
    const std::vector<std::vector<double>>& X, std::span<const double> y,
    std::size_t repeats = 10, std::uint64_t seed = 1);

struct RankedFeature {
    std::size_t index = 0;
    std::string label;
    double mean_abs_phi = 0.0;
};

struct GroupedExplanation {
    std::vector<std::string> group_names;
    std::vector<double> mean_abs;     // cohort mean of summed |phi| per group
    std::vector<double> mean_signed;  // cohort mean of summed phi per group
};

// Ranks features by cohort mean |phi| (top_n kept) and sums contributions
// over groups. feature_group must assign every feature to exactly one
// valid group.
std::pair<std::vector<RankedFeature>, GroupedExplanation> rank_and_group(
    const std::vector<ShapExplanation>& cohort,
    const std::vector<std::string>& feature_labels,
    const std::vector<std::size_t>& feature_group,
    const std::vector<std::string>& group_names, std::size_t top_n);

}  // namespace moralens
