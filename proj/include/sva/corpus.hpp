#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace sva::corpus {

// The seven CVSS v2 base metrics. Values are opaque categorical strings; the
// pipeline never assumes a fixed class set.
struct CvssLabelSet {
  std::string access_vector;
  std::string access_complexity;
  std::string authentication;
  std::string confidentiality;
  std::string integrity;
  std::string availability;
  std::string severity;

  static constexpr std::array<std::string_view, 7> field_names = {
      "access_vector", "access_complexity", "authentication", "confidentiality",
      "integrity",     "availability",      "severity"};

  const std::string& field(std::string_view name) const;
  bool complete() const;
  // Throws ValidationError naming the first empty field.
  void validate(std::string_view context) const;

  bool operator==(const CvssLabelSet&) const = default;
};

struct Statement {
  int original_line_number = 0;
  std::string text;
  bool is_cosmetic = false;
};

// One vulnerable function: the unit of analysis for every downstream stage.
struct FunctionRecord {
  std::string id;
  std::string project;
  std::string commit_id;
  std::vector<Statement> statements;
  std::vector<std::size_t> vuln_line_indices;  // ascending indices into statements
  CvssLabelSet labels;

  bool is_vuln(std::size_t index) const;
  // Structural invariants: vuln indices non-empty, in range, ascending,
  // non-cosmetic, and a strict subset of the non-cosmetic statements.
  void validate_structure() const;
  void validate() const;  // structure + labels
};

struct LineEntry {
  int line_number = 0;  // 1-based; pre-change numbering for deleted/context
  std::string text;
};

// Per-file change content of one commit. Context lines carry the unchanged
// hunk lines so function bodies can be rebuilt without repository access.
struct CommitChange {
  std::string commit_id;
  std::string file_path;  // pre-change path
  bool is_test_file = false;
  std::vector<LineEntry> deleted_lines;
  std::vector<LineEntry> added_lines;
  std::vector<LineEntry> context_lines;
};

struct FunctionBoundary {
  std::string name;
  int start_line = 0;  // inclusive, 1-based, pre-change numbering
  int end_line = 0;    // inclusive
};

// "test"/"tests" path-segment match, case-insensitive.
bool is_test_path(std::string_view path);

// Parses unified-diff text into per-file changes. Line numbers are rebuilt
// from the @@ hunk headers. Throws ValidationError on a malformed hunk
// header, naming the offending line.
std::vector<CommitChange> parse_unified_diff(std::string_view diff_text,
                                             std::string_view commit_id);

// True iff the line is blank or consists solely of comment content.
// `in_block_comment` carries open /* ... */ state between consecutive lines.
bool is_cosmetic_line(std::string_view line, bool& in_block_comment);
bool is_cosmetic_line(std::string_view line);

enum class RejectReason { none, too_many_files, too_many_lines };

struct VfcDecision {
  bool accepted = false;
  RejectReason reason = RejectReason::none;
};

// Tangled-commit filter: reject when the commit touches more than 100 files
// or changes (deleted + added) more than 10,000 lines.
VfcDecision filter_vfc(const std::vector<CommitChange>& changes);

struct ExtractionResult {
  std::vector<FunctionRecord> records;  // labels still empty
  std::vector<LineEntry> orphan_deleted_lines;
};

// Emits one unlabeled record per function with at least one non-cosmetic
// deleted line and at least one non-cosmetic surviving line. Functions with
// added-only, all-cosmetic, or whole-body deletions produce nothing. Deleted
// lines outside every boundary are reported as orphans.
ExtractionResult extract_vulnerable_functions(const CommitChange& change,
                                              const std::vector<FunctionBoundary>& boundaries,
                                              std::string_view project);

struct AttachResult {
  std::vector<FunctionRecord> records;
  std::size_t dropped = 0;  // records whose commit has no manifest entry
};

using Manifest = std::map<std::string, CvssLabelSet>;

AttachResult attach_labels(std::vector<FunctionRecord> records, const Manifest& manifest);

// Cohen's kappa over two equal-length annotation lists. Both constant and
// identical (chance agreement 1) is defined as 1.
double cohen_kappa(const std::vector<std::string>& annot_a,
                   const std::vector<std::string>& annot_b);

// Share of vulnerable lines among all non-cosmetic statements; reported, not
// asserted, since it is corpus-specific.
double vulnerable_line_ratio(const std::vector<FunctionRecord>& records);

// --- file formats -----------------------------------------------------------

using BoundaryMap = std::map<std::string, std::vector<FunctionBoundary>>;

Manifest load_manifest(const std::string& path);
BoundaryMap load_boundaries(const std::string& path);

std::string record_to_json_line(const FunctionRecord& record);
FunctionRecord record_from_json_line(std::string_view line);

std::vector<FunctionRecord> load_dataset(const std::string& path);
void save_dataset(const std::vector<FunctionRecord>& records, const std::string& path);

}  // namespace sva::corpus
