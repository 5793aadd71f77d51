#pragma once

#include <string>
#include <unordered_map>
#include <vector>

namespace moralens {

// Character-trigram rank profile for one language (out-of-place rank
// distance classification). Profiles are plain text files, one trigram per
// line, frequency-descending.
struct LanguageProfile {
    std::string code;
    std::vector<std::string> trigrams;               // rank order
    std::unordered_map<std::string, std::size_t> rank;  // trigram -> rank

    static LanguageProfile build(const std::string& code,
                                 const std::string& text,
                                 std::size_t max_trigrams = 300);
    static LanguageProfile load(const std::string& code,
                                const std::string& path);
    void save(const std::string& path) const;
};

struct LanguageGuess {
    std::string code;        // "undetermined" when the text is too short
    double confidence = 0.0; // 1 - d_best/d_second, clamped to [0, 1]
};

class LanguageDetector {
public:
    void add_profile(LanguageProfile profile);
    // Loads every "<code>.txt" in a directory.
    static LanguageDetector load_directory(const std::string& dir);

    LanguageGuess detect(const std::string& text) const;
    std::size_t profile_count() const { return profiles_.size(); }

    static constexpr std::size_t kMinTextChars = 20;

private:
    std::vector<LanguageProfile> profiles_;
};

// Normalized trigram extraction shared by profile building and detection.
std::vector<std::pair<std::string, std::size_t>> ranked_trigrams(
    const std::string& text, std::size_t max_trigrams);

}  // namespace moralens
