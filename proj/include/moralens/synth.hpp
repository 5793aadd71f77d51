#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "moralens/lexicons.hpp"
#include "moralens/textprep.hpp"

namespace moralens {

struct SynthCoefficient {
    std::string feature;  // moral_<foundation> or sentiment_<component>
    double weight = 0.0;
};

struct SynthParams {
    std::size_t n_users = 1000;
    std::size_t n_artists = 300;
    std::size_t songs_per_artist = 5;
    // Correlation ceiling between the generated target and the planted
    // signal; 1.0 means no noise.
    double oracle_r = 0.5;
    std::string target = "binding";
    std::vector<SynthCoefficient> coefficients = {
        {"moral_loyalty", 1.0},
        {"moral_authority", 1.0},
        {"moral_purity", 1.0},
        {"sentiment_compound", 0.8},
    };
    std::size_t min_user_likes = 12;
    std::size_t max_user_likes = 40;
    std::uint64_t seed = 7;
};

struct SynthTruth {
    double oracle_r = 0.0;
    std::string target;
    std::vector<SynthCoefficient> coefficients;
    std::vector<double> user_signal;  // standardized planted signal per user
};

// Writes songs.jsonl / artists.jsonl / users.jsonl / truth.json into
// out_dir. Lyrics are English word mixes whose moral and sentiment word
// choices follow per-artist profiles; the target score is
// oracle_r * z(signal) + sqrt(1 - oracle_r^2) * noise, where the signal is
// the user-aggregated feature combination declared by `coefficients`,
// computed with the same scoring functions the pipeline applies.
SynthTruth generate_synthetic_cohort(const SynthParams& params,
                                     const SentimentLexicon& sentiment,
                                     const MoralLexicon& morals,
                                     const LemmaTable& lemmas,
                                     const StopwordSet& stopwords,
                                     const std::string& out_dir);

}  // namespace moralens
