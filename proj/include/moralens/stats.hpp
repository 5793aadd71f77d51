#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace moralens {

// Product-moment correlation. Requires length >= 3 and nonzero variance in
// both arguments (throws ContractError otherwise).
double pearson(std::span<const double> a, std::span<const double> b);

struct SpearmanResult {
    double rho = 0.0;
    double p_value = 1.0;  // two-sided, t-approximation with n-2 dof
};

// Pearson correlation of average ranks (ties averaged).
SpearmanResult spearman(std::span<const double> a, std::span<const double> b);

// Permutation p-value for the Spearman screen (two-sided).
double spearman_permutation_p(std::span<const double> a,
                              std::span<const double> b, std::size_t draws,
                              std::uint64_t seed);

std::vector<double> average_ranks(std::span<const double> v);

struct ScreenEntry {
    std::size_t feature = 0;
    std::size_t target = 0;
    double rho = 0.0;
    double p_value = 1.0;
};

// Spearman rho for every feature x target pair, keeping the pairs with
// p <= alpha. Constant columns are skipped (their correlation is
// undefined). No multiple-comparison correction is applied.
std::vector<ScreenEntry> correlation_screen(
    const std::vector<std::vector<double>>& feature_columns,
    const std::vector<std::vector<double>>& target_columns,
    double alpha = 0.01);

}  // namespace moralens
