#pragma once

#include <string>
#include <vector>

#include "moralens/config.hpp"
#include "moralens/corpus.hpp"
#include "moralens/features.hpp"
#include "moralens/models.hpp"

namespace moralens {

// Pipeline stages behind the CLI subcommands. Each stage reads its inputs
// (raw files or upstream artifacts), writes its artifacts under
// cfg.out_dir, and records digests in <out_dir>/manifest.json. Artifact
// bytes depend only on the configuration and seed, never on the thread
// count; manifest timings are informational.
void stage_synth(const PipelineConfig& cfg);
void stage_ingest(const PipelineConfig& cfg);
void stage_filter(const PipelineConfig& cfg);
void stage_select_k(const PipelineConfig& cfg);
void stage_train_lda(const PipelineConfig& cfg);
void stage_extract(const PipelineConfig& cfg);
void stage_aggregate(const PipelineConfig& cfg);
CvReport stage_evaluate(const PipelineConfig& cfg);
void stage_train(const PipelineConfig& cfg);
void stage_explain(const PipelineConfig& cfg);
void stage_correlate(const PipelineConfig& cfg);

// Dispatch by subcommand name ("synth", "ingest", "filter", "select-k",
// "train-lda", "extract", "aggregate", "train", "evaluate", "explain",
// "correlate", or "all" for the full chain).
void run_stage(const std::string& name, const PipelineConfig& cfg);

// Reads the per-user feature table written by the aggregate stage.
std::vector<UserFeatures> load_user_features(const std::string& csv_path,
                                             std::size_t* k_topics);

// Per-target evaluation reports for every requested experiment, in the
// order they ran (used by tests to inspect results without re-parsing CSV).
struct EvaluateResult {
    std::vector<CvReport> reports;
    // target index -> resolved base experiment id for EX4-EX8.
    std::vector<std::string> base_by_target;
};
EvaluateResult run_evaluation(const PipelineConfig& cfg,
                              const std::vector<UserFeatures>& users,
                              std::size_t k_topics);

}  // namespace moralens
