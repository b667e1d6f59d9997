#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sva/context.hpp"
#include "sva/corpus.hpp"
#include "sva/models.hpp"

namespace sva::runner {

enum class InputKind {
  vuln_only,
  nonvuln_random,
  nonvuln_all,
  ps_plus_vuln,
  surrounding_plus_vuln,
  function_plus_vuln,
  ps_only,
  surrounding_only,
  function_only,
  residual_only,
};

InputKind input_kind_from_string(std::string_view name);
std::string to_string(InputKind kind);
bool is_plus_vuln(InputKind kind);
bool is_ps_based(InputKind kind);

struct InputType {
  InputKind kind = InputKind::vuln_only;
  context::AssembleMode mode = context::AssembleMode::single;
  int window = 6;  // surrounding n

  std::string label() const;  // e.g. "surrounding_plus_vuln(6)/double"
};

enum class FeatureKind { bag_tokens, bag_subtokens, embedding_average };

FeatureKind feature_kind_from_string(std::string_view name);
std::string to_string(FeatureKind kind);

struct FeatureSpec {
  FeatureKind kind = FeatureKind::bag_tokens;
  std::string table_path;  // embedding_average only

  std::string label() const;
};

struct ExperimentConfig {
  std::string dataset_path;
  std::vector<std::string> tasks;  // subset of the seven CVSS fields
  std::vector<InputType> input_types;
  std::vector<FeatureSpec> features;
  std::vector<models::Family> classifiers;
  std::uint64_t seed = 0;
  bool rq2_filter = false;  // drop records with empty PS context
  int jobs = 1;

  // Throws ValidationError: unknown task, double mode on a non *_plus_vuln
  // input, negative window, empty axes.
  void validate() const;

  static ExperimentConfig from_json_text(std::string_view text);
  static ExperimentConfig load(const std::string& path);
  std::string to_json_text() const;
};

struct CellScore {
  int round = 0;
  std::string task;
  std::string input_type;
  std::string feature;
  std::string classifier;
  double mcc = 0.0;
  double f1 = 0.0;
};

struct MeanScore {
  std::string task;
  std::string input_type;
  std::string feature;
  std::string classifier;
  double mcc = 0.0;
  double f1 = 0.0;
};

struct PairStat {
  std::string first;   // input type labels
  std::string second;
  double p_value = 1.0;
  double z = 0.0;
  double r = 0.0;
  std::string effect;  // negligible/small/medium/large
  std::size_t n_used = 0;
};

struct ExperimentReport {
  std::vector<CellScore> cells;
  std::vector<MeanScore> means;   // per (task, input, feature, classifier)
  std::vector<PairStat> stats;    // one-sided Wilcoxon per input-type pair
  std::string config_hash;
  std::string dataset_fingerprint;
  std::uint64_t seed = 0;
  std::size_t n_records = 0;
  std::size_t dropped_empty_ps = 0;

  std::string to_json_text() const;
  static ExperimentReport from_json_text(std::string_view text);
};

// Full protocol: one shared split plan, per-round train-fold vocabularies,
// validation-MCC grid search, test-fold scoring, pairwise input-type
// statistics paired at the (task, feature, classifier, round) cell.
ExperimentReport run_experiment(const ExperimentConfig& config);

enum class ReportFormat { csv, json, markdown };

ReportFormat report_format_from_string(std::string_view name);

// Deterministic rendering: csv -> the scores table, json -> canonical dump,
// markdown -> task x input-type matrix (mean over features/classifiers/
// rounds, best per row in bold) plus the statistics table.
std::string render_report(const ExperimentReport& report, ReportFormat format);
std::string render_stats_csv(const ExperimentReport& report);

// --- pipeline stages behind the CLI -----------------------------------------

struct MineStats {
  std::size_t commits_seen = 0;
  std::size_t commits_rejected_files = 0;
  std::size_t commits_rejected_lines = 0;
  std::size_t test_file_changes_skipped = 0;
  std::size_t functions_emitted = 0;
  std::size_t records_dropped_unlabeled = 0;
  std::size_t orphan_deleted_lines = 0;
  double vulnerable_line_ratio = 0.0;
};

// diffs_path: one .diff/.patch file (commit id = file stem) or a directory
// of them. Writes the labeled dataset as JSON lines.
MineStats mine_dataset(const std::string& diffs_path, const std::string& boundaries_path,
                       const std::string& manifest_path, const std::string& project,
                       const std::string& out_path);

struct ContextualizeOptions {
  context::ContextKind kind = context::ContextKind::ps;
  int window = 6;
  std::uint64_t seed = 0;
};

std::size_t contextualize_dataset(const std::string& dataset_path,
                                  const ContextualizeOptions& options,
                                  const std::string& out_path);

struct FeaturizeOptions {
  InputType input;
  FeatureSpec feature;
  std::uint64_t seed = 0;
  std::size_t min_df = 2;
};

struct FeaturizeResult {
  std::size_t rows = 0;
  std::size_t dimension = 0;
};

// Audit featurization over the whole file (experiment-internal vocabularies
// are train-fold scoped instead). Writes vocabulary.tsv (bags only),
// features.txt triplets and meta.json into out_dir.
FeaturizeResult featurize_dataset(const std::string& dataset_path,
                                  const FeaturizeOptions& options,
                                  const std::string& out_dir);

// Runs the experiment and writes report.json, scores.csv and stats.csv.
ExperimentReport run_experiment_to_dir(const ExperimentConfig& config,
                                       const std::string& out_dir);

}  // namespace sva::runner
