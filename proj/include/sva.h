/* C API for the sva library: function-level vulnerability assessment
 * pipeline (dataset mining, context extraction, featurization, experiment
 * runs). All functions return sva_status; on failure sva_last_error() holds
 * a thread-local message. Handles are opaque and freed by their close
 * functions. */

#ifndef SVA_H
#define SVA_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sva_status {
  SVA_STATUS_OK = 0,
  SVA_STATUS_VALIDATION = 1, /* bad input, file, or configuration */
  SVA_STATUS_RUNTIME = 2     /* execution failure */
} sva_status;

const char* sva_version(void);

/* Message for the most recent failure on this thread; empty string if none. */
const char* sva_last_error(void);

/* ---- dataset handle ---------------------------------------------------- */

typedef struct sva_dataset sva_dataset;

/* Loads and validates a JSON-lines dataset of function records. */
sva_status sva_dataset_open(const char* path, sva_dataset** out);
void sva_dataset_close(sva_dataset* dataset);
long long sva_dataset_count(const sva_dataset* dataset);
/* Share of vulnerable lines among non-cosmetic statements. */
double sva_dataset_vuln_line_ratio(const sva_dataset* dataset);
/* Copies the record id at `index` into buf (NUL-terminated, truncating). */
sva_status sva_dataset_record_id(const sva_dataset* dataset, long long index,
                                 char* buf, size_t buf_len);

/* ---- pipeline stages ---------------------------------------------------- */

typedef struct sva_mine_stats {
  unsigned long long commits_seen;
  unsigned long long commits_rejected_files;
  unsigned long long commits_rejected_lines;
  unsigned long long test_file_changes_skipped;
  unsigned long long functions_emitted;
  unsigned long long records_dropped_unlabeled;
  unsigned long long orphan_deleted_lines;
  double vulnerable_line_ratio;
} sva_mine_stats;

/* Mines a labeled dataset out of unified diffs (file or directory of
 * <commit_id>.diff), a function-boundary JSON file and a CVSS manifest. */
sva_status sva_mine(const char* diffs_path, const char* boundaries_path,
                    const char* manifest_path, const char* project,
                    const char* out_path, sva_mine_stats* stats_out);

/* kind: ps | surrounding | function | random_nonvuln | residual | none.
 * window applies to surrounding, seed to random_nonvuln. Writes one JSON
 * line {function_id, kind, vuln_lines, context_lines} per record. */
sva_status sva_contextualize(const char* dataset_path, const char* kind,
                             int window, uint64_t seed, const char* out_path,
                             long long* records_out);

/* input_type: vuln_only | nonvuln_random | nonvuln_all | ps_plus_vuln |
 * surrounding_plus_vuln | function_plus_vuln | ps_only | surrounding_only |
 * function_only | residual_only. mode: single | double. feature: bag_tokens
 * | bag_subtokens | embedding_average (requires table_path). Writes
 * vocabulary.tsv / features.txt / meta.json into out_dir. */
sva_status sva_featurize(const char* dataset_path, const char* input_type,
                         const char* mode, int window, const char* feature,
                         const char* table_path, uint64_t seed,
                         const char* out_dir, long long* rows_out,
                         long long* dimension_out);

/* Runs the configured experiment; writes report.json, scores.csv and
 * stats.csv into out_dir. jobs > 0 overrides the config's parallelism;
 * seed_override >= 0 replaces the config seed. */
sva_status sva_run_experiment(const char* config_path, const char* out_dir,
                              int jobs, long long seed_override);

/* format: csv | json | markdown. Renders an experiment report written by
 * sva_run_experiment into out_path (csv also writes stats next to it as
 * <out_path stem>_stats.csv). */
sva_status sva_render_report(const char* report_path, const char* format,
                             const char* out_path);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* SVA_H */
