#pragma once

#include <array>
#include <set>
#include <string>
#include <vector>

#include "moralens/corpus.hpp"
#include "moralens/lexicons.hpp"
#include "moralens/topics.hpp"

namespace moralens {

// Per-song lyrical profile in the fixed block order
// [topics | morals | sentiment | emotions]. With the standard 4-topic model
// this is the 21-dimensional vector (indices 0-3 topics, 4-8 morals,
// 9-12 sentiment, 13-20 emotions).
struct SongFeatures {
    std::vector<double> topics;        // K-simplex
    std::array<double, 5> morals{};    // [1, 9]
    std::array<double, 4> sentiment{}; // pos, neu, neg in [0,1]; compound [-1,1]
    std::array<double, 8> emotions{};  // [0, 1]

    std::vector<double> flatten() const;
    static std::vector<std::string> labels(std::size_t k_topics);
    static std::size_t dimension(std::size_t k_topics) {
        return k_topics + 17;
    }
};

struct FeatureExtractionContext {
    const LdaModel* lda = nullptr;
    const SentimentLexicon* sentiment = nullptr;
    const EmotionLexicon* emotions = nullptr;
    const MoralLexicon* morals = nullptr;
    const LemmaTable* lemmas = nullptr;
    const StopwordSet* stopwords = nullptr;
    EmotionDenominator emotion_denominator = EmotionDenominator::kAllLemmas;
    std::size_t fold_in_iterations = 100;
    std::uint64_t seed = 1;
};

// Concatenates topic inference and the three lexicon scores for one song.
// The fold-in seed is derived from ctx.seed and song_index so results do
// not depend on scheduling.
SongFeatures assemble_song_features(const Song& song, std::size_t song_index,
                                    const FeatureExtractionContext& ctx);

enum class AggregationMode { kMean, kMedian };

struct UserFeatures {
    std::string user_id;
    std::vector<double> lyrical;  // mean (or median) over retained songs
    AgeBin age_bin = AgeBin::kUnknown;
    Gender gender = Gender::kUnknown;
    double artist_like_count = 0;
    double mean_artist_popularity = 0;
    std::array<double, 5> mft{};
    double individualising = 0;
    double binding = 0;
};

// Pools every retained song of every liked artist; the lyrical block is the
// unweighted per-component mean (or median). Throws if the user has no
// retained songs, which filtering should have made impossible.
UserFeatures aggregate_user(const UserRecord& user, const Corpus& corpus,
                            const std::vector<SongFeatures>& song_features,
                            AggregationMode mode = AggregationMode::kMean);

struct NormalizationParams {
    std::vector<double> mean;
    std::vector<double> stddev;  // population sigma; ~0 marks degenerate cols
};

NormalizationParams normalize_fit(
    const std::vector<std::vector<double>>& rows);
// Z-scores each column; columns whose fitted sigma < 1e-12 map to zero.
std::vector<std::vector<double>> normalize_apply(
    const NormalizationParams& params,
    const std::vector<std::vector<double>>& rows);

enum class FeatureGroup {
    kSentiment,
    kEmotions,
    kMorals,
    kTopics,
    kAge,
    kGender,
    kArtistLikes,
    kArtistPopularity,
};

struct ExperimentSpec {
    std::string id;
    bool uses_base = false;                // "best of EX1..EX3" selector
    std::vector<FeatureGroup> extras;      // groups beyond the base
    std::set<FeatureGroup> resolved;       // full mask once resolved

    bool is_resolved() const { return !resolved.empty(); }
};

// The eight ablation experiments. EX1-EX3 are fixed masks; EX4-EX8 add
// groups on top of the per-target best of EX1-EX3.
const std::vector<ExperimentSpec>& experiment_table();
ExperimentSpec find_experiment(const std::string& id);

// Resolves an experiment against a chosen base mask. EX1-EX3 ignore the
// base argument.
ExperimentSpec resolve_experiment(const ExperimentSpec& spec,
                                  const std::set<FeatureGroup>& base_groups);

struct DesignMatrix {
    std::vector<std::vector<double>> rows;
    std::vector<std::string> labels;
    std::vector<FeatureGroup> column_groups;
};

// Columns follow the canonical group order sentiment, emotions, morals,
// topics, age, gender, artist likes, artist popularity, restricted to the
// resolved mask. Artist popularity is log1p-compressed here, before the
// fold-wise z-scoring. Throws on an unresolved spec.
DesignMatrix build_design_matrix(const ExperimentSpec& spec,
                                 const std::vector<UserFeatures>& users,
                                 std::size_t k_topics);

// The 7 prediction targets: five foundations plus the two superior ones.
inline constexpr std::array<const char*, 7> kTargetNames = {
    "care", "fairness", "loyalty", "authority", "purity",
    "individualising", "binding"};

double target_value(const UserFeatures& user, std::size_t target_index);

}  // namespace moralens
