#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "moralens/labels.hpp"
#include "moralens/langid.hpp"

namespace moralens {

struct Song {
    std::string song_id;
    std::string artist_id;
    std::string title;
    std::string lyrics;
    int popularity_rank = 0;  // 1 = most popular for that artist
    std::optional<std::string> language;
    double language_confidence = 0.0;
};

struct Artist {
    std::string artist_id;
    std::string name;
    double popularity = 0.0;
    std::vector<std::size_t> song_indices;  // into Corpus::songs, rank ascending
};

enum class Gender { kMale, kFemale, kUnknown };
enum class AgeBin { kYounger, kOlder, kUnknown };

std::string to_string(Gender g);
std::string to_string(AgeBin a);
Gender gender_from_string(const std::string& s);
AgeBin age_bin_from_string(const std::string& s);

struct UserRecord {
    std::string user_id;
    std::set<std::string> liked_artist_ids;
    Gender gender = Gender::kUnknown;
    AgeBin age_bin = AgeBin::kUnknown;
    std::array<double, 5> mft{};  // care, fairness, loyalty, authority, purity
    double individualising = 0.0; // mean(care, fairness)
    double binding = 0.0;         // mean(loyalty, authority, purity)

    void refresh_derived();
};

struct Corpus {
    std::vector<Song> songs;
    std::vector<Artist> artists;
    std::vector<UserRecord> users;

    const Artist* find_artist(const std::string& artist_id) const;
};

struct LoadReport {
    std::size_t songs = 0;
    std::size_t artists = 0;
    std::size_t users = 0;
};

// Parses the three JSONL inputs, validates ids and per-artist rank
// uniqueness, and attaches songs to artists sorted by popularity rank.
// Malformed lines and duplicate ids raise ContractError naming the line/id.
Corpus load_corpus(const std::string& songs_path,
                   const std::string& artists_path,
                   const std::string& users_path, LoadReport* report = nullptr);

// Fills Song::language via the detector. Pure per song; thread-safe.
void detect_languages(Corpus& corpus, const LanguageDetector& detector,
                      unsigned threads = 1);

struct FilterParams {
    std::string language = "en";
    int top_n = 5;
    int min_likes = 10;
};

// Applies the corpus reduction: keep songs in the target language, keep the
// top_n best-ranked songs per artist, drop users with fewer than min_likes
// surviving liked artists, then drop artists nobody likes. The liked-artist
// threshold is counted after the language filter. Idempotent.
Corpus filter_corpus(const Corpus& corpus, const FilterParams& params);

}  // namespace moralens
