#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "moralens/lexicons.hpp"
#include "moralens/models.hpp"
#include "moralens/synth.hpp"

namespace moralens {

// Flat sectioned key-value configuration ("[section]" headers, "key = value"
// lines, '#' comments). Unknown keys are rejected to catch typos.
struct PipelineConfig {
    // [paths]
    std::string songs_path;
    std::string artists_path;
    std::string users_path;
    std::string sentiment_lexicon;
    std::string boosters_path;
    std::string negations_path;
    std::string emotion_lexicon;
    std::string moral_lexicon;
    std::string lemma_table;
    std::string stopwords_path;
    std::string profiles_dir;
    std::string out_dir = "out";

    // [corpus]
    std::string language = "en";
    int top_n = 5;
    int min_likes = 10;

    // [lexicons]
    EmotionDenominator emotion_denominator = EmotionDenominator::kAllLemmas;

    // [lda]
    std::size_t lda_k = 4;
    std::vector<std::size_t> lda_grid = {2, 4, 6, 8, 10, 12, 14, 16};
    std::size_t lda_grid_seeds = 1;
    double lda_alpha = 0.0;  // 0 -> 50/k
    double lda_beta = 0.01;
    std::size_t lda_iterations = 1000;
    std::size_t lda_burn_in = 200;
    std::size_t fold_in_iterations = 100;
    double max_df = 0.9;
    int min_df = 5;
    std::size_t coherence_top_n = 10;
    std::size_t coherence_window = 110;

    // [features]
    bool median_aggregation = false;

    // [models]
    ModelFamily family = ModelFamily::kRandomForest;
    std::size_t n_trees = 500;
    std::size_t mtry = 0;  // 0 -> ceil(p/3)
    std::size_t min_leaf = 5;
    bool bootstrap = true;
    std::size_t cv_folds = 5;
    std::size_t cv_repeats = 20;
    double elasticnet_lambda = 0.1;
    double elasticnet_mix = 0.5;
    bool permute_targets = false;

    // [experiments]
    std::vector<std::string> experiments = {"EX1", "EX2", "EX3", "EX4",
                                            "EX5", "EX6", "EX7", "EX8"};

    // [explain]
    std::string explain_experiment = "EX8";
    std::size_t explain_top_n = 8;

    // [correlate]
    double screen_alpha = 0.01;

    // [synth]
    SynthParams synth;

    // [run]
    std::uint64_t seed = 42;
    unsigned threads = 1;

    static PipelineConfig load(const std::string& path);

    // Digest input for the manifest: the exact normalized key-value view.
    std::string canonical_text() const;
};

}  // namespace moralens
