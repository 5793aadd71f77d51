#pragma once

#include <array>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "moralens/labels.hpp"
#include "moralens/textprep.hpp"

namespace moralens {

// Frozen constants of the rule-based sentiment model. Exposed so tests can
// assert against the exact published values.
struct SentimentConstants {
    double alpha = 15.0;                 // compound normalization
    double negation_scale = -0.74;       // multiplier per negation in window
    double caps_boost = 0.733;           // all-caps emphasis (mixed-case text)
    double exclamation_increment = 0.292; // per '!', capped
    int exclamation_cap = 3;
    double but_weight_before = 0.5;
    double but_weight_after = 1.5;
    double booster_decay_2 = 0.95;        // booster two tokens back
    double booster_decay_3 = 0.90;        // booster three tokens back
};

struct SentimentLexicon {
    std::unordered_map<std::string, double> valence;  // token -> [-4, 4]
    std::unordered_map<std::string, double> boosters; // token -> +-0.293
    std::unordered_set<std::string> negations;
    SentimentConstants constants;

    static SentimentLexicon load(const std::string& valence_tsv,
                                 const std::string& boosters_path,
                                 const std::string& negations_path);
};

struct SentimentScore {
    double pos = 0.0;
    double neu = 0.0;
    double neg = 0.0;
    double compound = 0.0;
};

// Rule model, applied to the punctuation-preserving token stream:
//
//  1. Each token is matched against the valence lexicon after stripping
//     leading/trailing punctuation and lowercasing. Booster tokens and
//     tokens that strip to nothing carry no valence of their own.
//  2. A matched token in ALL CAPS gains +-0.733 (toward its sign) when the
//     stream mixes cased and all-caps tokens.
//  3. The three preceding tokens are scanned nearest-first. A position
//     holding another lexicon token is inert. A booster adds +-0.293
//     (sign of the current valence, +-0.733 more if the booster itself is
//     all-caps under rule 2), scaled by 1 / 0.95 / 0.90 for distances
//     1 / 2 / 3. A negation ("n't" suffix counts) multiplies the
//     running valence by -0.74.
//  4. The first "but" halves every sentiment before it and multiplies the
//     ones after it by 1.5.
//  5. Exclamation marks anywhere in the stream add 0.292 each (at most 3)
//     to the magnitude of the valence sum S; compound = S / sqrt(S^2 + 15),
//     clamped to [-1, 1].
//  6. pos/neu/neg are the normalized shares of |s_i|+1 over positive and
//     negative tokens plus a unit count per neutral token, with the
//     exclamation emphasis credited to the dominant side.
SentimentScore score_sentiment(const TokenStream& stream,
                               const SentimentLexicon& lex);

struct EmotionLexicon {
    // word -> association over kEmotionNames; entries in [0, 1].
    std::unordered_map<std::string, std::array<double, 8>> assoc;

    static EmotionLexicon load(const std::string& tsv_path);
};

enum class EmotionDenominator { kAllLemmas, kMatchedOnly };

// Mean association vector over the lemma stream. Unmatched lemmas
// contribute zero vectors under kAllLemmas (the default density reading);
// kMatchedOnly averages over matched lemmas alone. Empty input gives the
// zero vector.
std::array<double, 8> score_emotions(
    const LemmaStream& stream, const EmotionLexicon& lex,
    EmotionDenominator denom = EmotionDenominator::kAllLemmas);

struct MoralLexicon {
    struct Entry {
        std::array<double, 5> valence{};  // Likert 1..9
        std::array<bool, 5> present{};
    };
    std::unordered_map<std::string, Entry> entries;

    static MoralLexicon load(const std::string& tsv_path);
};

struct MoralScore {
    std::array<double, 5> valence{};    // per foundation, neutral 5 fallback
    std::array<int, 5> match_counts{};  // matched lemmas per foundation
    bool any_match = false;
};

// Per-foundation mean of matched lemma valences; foundations with no
// matches score the neutral 5.0. No negation handling.
MoralScore score_moral(const LemmaStream& stream, const MoralLexicon& lex);

}  // namespace moralens
