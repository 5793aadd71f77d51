#pragma once

#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace moralens {

// Surface tokens in source order, case and attached punctuation intact.
// This is the stream the sentiment scorer consumes.
struct TokenStream {
    std::vector<std::string> tokens;
};

// Lowercase lemma stream for topic/moral/emotion scoring.
// word_count counts alphabetic tokens before stopword removal;
// lemma_count is the total number of emitted lemmas (distinct count is
// exposed separately because either reading of "lemmas per lyric" is
// defensible).
struct LemmaStream {
    std::vector<std::string> lemmas;
    std::size_t word_count = 0;
    std::size_t lemma_count = 0;
    std::size_t distinct_lemma_count = 0;
};

struct SuffixRule {
    std::string pattern;      // suffix to match
    std::string replacement;  // what replaces it
};

// Dictionary lemmatizer: exact surface lookup first, then ordered suffix
// rules gated on the candidate being a known lemma. Unknown words pass
// through unchanged. Known lemmas map to themselves, so lemmatization is
// idempotent by construction.
class LemmaTable {
public:
    LemmaTable() = default;

    // TSV rows "surface<TAB>lemma". Identity entries for every lemma value
    // are added automatically.
    static LemmaTable load(const std::string& path);
    static LemmaTable from_pairs(
        const std::vector<std::pair<std::string, std::string>>& pairs);

    static const std::vector<SuffixRule>& default_rules();

    // Lowercase surface form -> lemma.
    std::string lemma_of(const std::string& surface) const;

    bool is_known_lemma(const std::string& word) const {
        return known_lemmas_.count(word) > 0;
    }
    std::size_t size() const { return table_.size(); }

private:
    void add_entry(const std::string& surface, const std::string& lemma);

    std::unordered_map<std::string, std::string> table_;
    std::unordered_set<std::string> known_lemmas_;
};

using StopwordSet = std::unordered_set<std::string>;

StopwordSet load_stopwords(const std::string& path);

// Whitespace tokenization after compatibility folding of typographic
// Unicode (curly quotes, dashes, ellipsis, exotic spaces, fullwidth forms)
// to their ASCII equivalents. Control characters are dropped. Alphanumeric
// characters are never altered.
TokenStream tokenize_preserving(const std::string& text);

// Folding step exposed for tests.
std::string fold_compatibility(const std::string& text);

LemmaStream lemmatize(const std::string& text, const LemmaTable& table,
                      const StopwordSet& stopwords);

// Strip leading/trailing characters that are not ASCII alphanumerics.
// Internal apostrophes and hyphens survive ("don't", "self-made").
std::string strip_token_edges(const std::string& token);

}  // namespace moralens
