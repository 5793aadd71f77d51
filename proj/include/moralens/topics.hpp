#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "moralens/textprep.hpp"

namespace moralens {

struct VocabularyParams {
    double max_df = 0.9;  // exclude words in more than this fraction of docs
    int min_df = 5;       // exclude words in fewer than this many docs
};

struct Vocabulary {
    std::vector<std::string> words;                     // index -> word
    std::unordered_map<std::string, std::size_t> index; // word -> index
    std::vector<std::size_t> doc_frequency;

    std::size_t size() const { return words.size(); }
};

// Sparse per-document term counts.
struct DocTermMatrix {
    struct Cell {
        std::uint32_t word;
        std::uint32_t count;
    };
    std::vector<std::vector<Cell>> docs;
    std::size_t vocab_size = 0;
    std::size_t total_tokens = 0;
};

// Builds the vocabulary over lemma streams, excluding words above the
// document-frequency ratio cap (strict >) or below the absolute floor.
// Throws if nothing survives.
std::pair<Vocabulary, DocTermMatrix> build_vocab(
    const std::vector<LemmaStream>& streams,
    const VocabularyParams& params = {});

struct LdaParams {
    std::size_t k = 4;
    double alpha = 0.0;  // 0 -> 50/k heuristic
    double beta = 0.01;
    std::size_t iterations = 1000;
    std::size_t burn_in = 200;
    std::uint64_t seed = 1;
};

struct LdaModel {
    std::size_t k = 0;
    double alpha = 0.0;
    double beta = 0.01;
    std::uint64_t seed = 0;
    Vocabulary vocab;
    std::vector<std::vector<double>> phi;    // k x V, rows sum to 1
    std::vector<std::vector<double>> theta;  // D x k, rows sum to 1

    void save(const std::string& path) const;
    static LdaModel load(const std::string& path);

    std::vector<std::size_t> top_words(std::size_t topic,
                                       std::size_t n) const;
};

// Collapsed Gibbs sampler; phi/theta are means of the smoothed count
// estimates over post-burn-in sweeps. Deterministic given the seed.
LdaModel train_lda(const DocTermMatrix& dtm, const Vocabulary& vocab,
                   const LdaParams& params);

// Per-document topic proportions with phi frozen (fold-in Gibbs).
// Out-of-vocabulary tokens are ignored; a document with no in-vocabulary
// tokens gets the uniform vector.
std::vector<double> infer_topics(const LdaModel& model,
                                 const LemmaStream& stream,
                                 std::size_t fold_in_iterations = 100,
                                 std::uint64_t seed = 1);

struct CoherenceParams {
    std::size_t top_n = 10;
    std::size_t window = 110;
};

struct CoherenceReport {
    std::vector<double> per_topic;
    double mean = 0.0;
    std::vector<std::vector<std::string>> top_words;
    std::size_t window = 0;
};

// C_v: boolean sliding-window probabilities, NPMI vectors for the top-n
// topic words with one-set segmentation, per-topic mean cosine similarity
// of each word's vector against the summed set vector.
CoherenceReport coherence_cv(const LdaModel& model,
                             const std::vector<LemmaStream>& streams,
                             const CoherenceParams& params = {});

struct SelectKResult {
    std::size_t best_k = 0;
    std::vector<std::pair<std::size_t, double>> table;  // k -> mean C_v
};

// Argmax over a (k, coherence) table; ties within 1e-12 go to the
// smaller k. The table need not be sorted.
std::size_t pick_best_k(
    const std::vector<std::pair<std::size_t, double>>& table);

// Trains one model per (k, seed) and returns the k with the highest mean
// coherence; ties go to the smaller k.
SelectKResult select_k(const DocTermMatrix& dtm, const Vocabulary& vocab,
                       const std::vector<LemmaStream>& streams,
                       const std::vector<std::size_t>& grid,
                       const std::vector<std::uint64_t>& seeds,
                       const LdaParams& base_params = {},
                       const CoherenceParams& coherence_params = {},
                       unsigned threads = 1);

// Test hook: verifies that the sampler's count tables stay consistent with
// the token total during a short training run.
bool lda_counts_conserved(const DocTermMatrix& dtm, const Vocabulary& vocab,
                          const LdaParams& params);

}  // namespace moralens
