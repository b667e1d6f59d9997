#include "sva/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "sva/error.hpp"
#include "sva/io.hpp"
#include "sva/lex.hpp"

using nlohmann::json;

namespace sva::corpus {

const std::string& CvssLabelSet::field(std::string_view name) const {
  if (name == "access_vector") return access_vector;
  if (name == "access_complexity") return access_complexity;
  if (name == "authentication") return authentication;
  if (name == "confidentiality") return confidentiality;
  if (name == "integrity") return integrity;
  if (name == "availability") return availability;
  if (name == "severity") return severity;
  throw ValidationError("unknown CVSS field: " + std::string(name));
}

bool CvssLabelSet::complete() const {
  for (auto name : field_names) {
    if (field(name).empty()) return false;
  }
  return true;
}

void CvssLabelSet::validate(std::string_view context) const {
  for (auto name : field_names) {
    if (field(name).empty()) {
      throw ValidationError(std::string(context) + ": missing CVSS field '" +
                            std::string(name) + "'");
    }
  }
}

bool FunctionRecord::is_vuln(std::size_t index) const {
  return std::binary_search(vuln_line_indices.begin(), vuln_line_indices.end(), index);
}

void FunctionRecord::validate_structure() const {
  const std::string where = "record '" + id + "'";
  if (vuln_line_indices.empty())
    throw ValidationError(where + ": no vulnerable statements");
  for (std::size_t k = 0; k < vuln_line_indices.size(); ++k) {
    const std::size_t idx = vuln_line_indices[k];
    if (idx >= statements.size())
      throw ValidationError(where + ": vulnerable index out of range");
    if (k > 0 && vuln_line_indices[k - 1] >= idx)
      throw ValidationError(where + ": vulnerable indices not strictly ascending");
    if (statements[idx].is_cosmetic)
      throw ValidationError(where + ": cosmetic statement flagged vulnerable");
  }
  bool has_nonvuln_code = false;
  for (std::size_t i = 0; i < statements.size(); ++i) {
    if (!statements[i].is_cosmetic && !is_vuln(i)) {
      has_nonvuln_code = true;
      break;
    }
  }
  if (!has_nonvuln_code)
    throw ValidationError(where + ": no non-vulnerable statement left");
}

void FunctionRecord::validate() const {
  validate_structure();
  labels.validate("record '" + id + "'");
}

bool is_test_path(std::string_view path) {
  std::string segment;
  auto check = [&segment]() {
    std::string lower = segment;
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return lower == "test" || lower == "tests";
  };
  for (char c : path) {
    if (c == '/' || c == '\\') {
      if (check()) return true;
      segment.clear();
    } else {
      segment.push_back(c);
    }
  }
  return check();
}

bool is_cosmetic_line(std::string_view line, bool& in_block_comment) {
  const std::string stripped = lex::strip_comments(line, in_block_comment);
  return std::all_of(stripped.begin(), stripped.end(),
                     [](unsigned char c) { return std::isspace(c) != 0; });
}

bool is_cosmetic_line(std::string_view line) {
  bool state = false;
  return is_cosmetic_line(line, state);
}

namespace {

std::string_view chomp(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

// "--- a/path\t2009-01-01 ..." -> "path"
std::string clean_diff_path(std::string_view raw) {
  if (auto tab = raw.find('\t'); tab != std::string_view::npos) raw = raw.substr(0, tab);
  while (!raw.empty() && raw.back() == ' ') raw.remove_suffix(1);
  if (raw.rfind("a/", 0) == 0 || raw.rfind("b/", 0) == 0) raw.remove_prefix(2);
  return std::string(raw);
}

struct HunkHeader {
  long old_start = 0;
  long old_count = 1;
  long new_start = 0;
  long new_count = 1;
};

HunkHeader parse_hunk_header(std::string_view line) {
  // @@ -old_start[,old_count] +new_start[,new_count] @@ [section]
  auto fail = [&line]() -> HunkHeader {
    throw ValidationError("malformed hunk header: " + std::string(line));
  };
  std::size_t i = 2;  // after "@@"
  auto skip_spaces = [&] {
    while (i < line.size() && line[i] == ' ') ++i;
  };
  auto read_long = [&]() -> long {
    std::size_t start = i;
    while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
    if (i == start) fail();
    return std::stol(std::string(line.substr(start, i - start)));
  };
  HunkHeader h;
  skip_spaces();
  if (i >= line.size() || line[i] != '-') return fail();
  ++i;
  h.old_start = read_long();
  if (i < line.size() && line[i] == ',') {
    ++i;
    h.old_count = read_long();
  }
  skip_spaces();
  if (i >= line.size() || line[i] != '+') return fail();
  ++i;
  h.new_start = read_long();
  if (i < line.size() && line[i] == ',') {
    ++i;
    h.new_count = read_long();
  }
  skip_spaces();
  if (line.substr(i, 2) != "@@") return fail();
  return h;
}

}  // namespace

std::vector<CommitChange> parse_unified_diff(std::string_view diff_text,
                                             std::string_view commit_id) {
  std::vector<CommitChange> changes;
  CommitChange current;
  bool have_file = false;
  std::string old_path;
  std::string new_path;

  auto flush = [&]() {
    if (have_file) {
      changes.push_back(std::move(current));
      current = CommitChange{};
      have_file = false;
    }
  };

  std::size_t pos = 0;
  long old_remaining = 0;
  long new_remaining = 0;
  long old_line = 0;
  long new_line = 0;

  while (pos <= diff_text.size()) {
    std::size_t eol = diff_text.find('\n', pos);
    std::string_view line = chomp(diff_text.substr(
        pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos));
    const bool last = eol == std::string_view::npos;

    const bool in_hunk = old_remaining > 0 || new_remaining > 0;
    if (in_hunk && !line.empty() && line[0] == '\\') {
      // "\ No newline at end of file"
    } else if (in_hunk) {
      const char tag = line.empty() ? ' ' : line[0];
      const std::string_view body = line.empty() ? line : line.substr(1);
      switch (tag) {
        case ' ':
          current.context_lines.push_back({static_cast<int>(old_line), std::string(body)});
          ++old_line;
          ++new_line;
          --old_remaining;
          --new_remaining;
          break;
        case '-':
          current.deleted_lines.push_back({static_cast<int>(old_line), std::string(body)});
          ++old_line;
          --old_remaining;
          break;
        case '+':
          current.added_lines.push_back({static_cast<int>(new_line), std::string(body)});
          ++new_line;
          --new_remaining;
          break;
        default:
          throw ValidationError("unexpected line inside hunk: " + std::string(line));
      }
    } else if (line.rfind("--- ", 0) == 0) {
      old_path = clean_diff_path(line.substr(4));
    } else if (line.rfind("+++ ", 0) == 0) {
      new_path = clean_diff_path(line.substr(4));
      flush();
      current.commit_id = std::string(commit_id);
      current.file_path = (old_path == "/dev/null" || old_path.empty()) ? new_path : old_path;
      current.is_test_file = is_test_path(current.file_path);
      have_file = true;
    } else if (line.rfind("@@", 0) == 0) {
      if (!have_file)
        throw ValidationError("hunk header before any file header: " + std::string(line));
      const HunkHeader h = parse_hunk_header(line);
      old_remaining = h.old_count;
      new_remaining = h.new_count;
      old_line = h.old_start;
      new_line = h.new_start;
    }
    // Anything else (diff --git, index, mode lines) is ignored.

    if (last) break;
    pos = eol + 1;
  }
  flush();
  return changes;
}

VfcDecision filter_vfc(const std::vector<CommitChange>& changes) {
  if (changes.size() > 100) return {false, RejectReason::too_many_files};
  std::size_t lines = 0;
  for (const auto& change : changes)
    lines += change.deleted_lines.size() + change.added_lines.size();
  if (lines > 10000) return {false, RejectReason::too_many_lines};
  return {true, RejectReason::none};
}

ExtractionResult extract_vulnerable_functions(const CommitChange& change,
                                              const std::vector<FunctionBoundary>& boundaries,
                                              std::string_view project) {
  ExtractionResult result;
  if (change.is_test_file) return result;

  std::map<int, std::string> pre_lines;
  for (const auto& entry : change.context_lines) pre_lines[entry.line_number] = entry.text;
  std::set<int> deleted;
  for (const auto& entry : change.deleted_lines) {
    pre_lines[entry.line_number] = entry.text;
    deleted.insert(entry.line_number);
  }

  std::set<int> covered;
  for (const auto& boundary : boundaries) {
    auto begin = pre_lines.lower_bound(boundary.start_line);
    auto end = pre_lines.upper_bound(boundary.end_line);
    FunctionRecord record;
    bool in_block_comment = false;
    std::vector<std::size_t> vuln;
    std::size_t non_cosmetic = 0;
    for (auto it = begin; it != end; ++it) {
      Statement stmt;
      stmt.original_line_number = it->first;
      stmt.text = it->second;
      stmt.is_cosmetic = is_cosmetic_line(stmt.text, in_block_comment);
      if (!stmt.is_cosmetic) ++non_cosmetic;
      if (deleted.count(it->first)) {
        covered.insert(it->first);
        if (!stmt.is_cosmetic) vuln.push_back(record.statements.size());
      }
      record.statements.push_back(std::move(stmt));
    }
    // Added-only and all-cosmetic changes leave vuln empty; whole-body
    // deletions leave no non-vulnerable code. Both cases emit nothing.
    if (vuln.empty() || non_cosmetic == vuln.size()) continue;
    record.commit_id = change.commit_id;
    record.project = std::string(project);
    record.id = change.commit_id + ":" + change.file_path + ":" + boundary.name + "@" +
                std::to_string(boundary.start_line);
    record.vuln_line_indices = std::move(vuln);
    record.validate_structure();
    result.records.push_back(std::move(record));
  }

  for (const auto& entry : change.deleted_lines) {
    bool inside = false;
    for (const auto& boundary : boundaries) {
      if (entry.line_number >= boundary.start_line && entry.line_number <= boundary.end_line) {
        inside = true;
        break;
      }
    }
    if (!inside) result.orphan_deleted_lines.push_back(entry);
  }
  return result;
}

AttachResult attach_labels(std::vector<FunctionRecord> records, const Manifest& manifest) {
  AttachResult result;
  for (auto& record : records) {
    auto it = manifest.find(record.commit_id);
    if (it == manifest.end()) {
      ++result.dropped;
      continue;
    }
    it->second.validate("manifest entry for commit '" + record.commit_id + "'");
    record.labels = it->second;
    result.records.push_back(std::move(record));
  }
  return result;
}

double cohen_kappa(const std::vector<std::string>& annot_a,
                   const std::vector<std::string>& annot_b) {
  if (annot_a.size() != annot_b.size() || annot_a.empty())
    throw ValidationError("cohen_kappa needs two equal-length, non-empty lists");
  const double n = static_cast<double>(annot_a.size());
  std::size_t agree = 0;
  std::map<std::string, std::size_t> freq_a;
  std::map<std::string, std::size_t> freq_b;
  for (std::size_t i = 0; i < annot_a.size(); ++i) {
    if (annot_a[i] == annot_b[i]) ++agree;
    ++freq_a[annot_a[i]];
    ++freq_b[annot_b[i]];
  }
  const double p_o = static_cast<double>(agree) / n;
  double p_e = 0.0;
  for (const auto& [label, count_a] : freq_a) {
    auto it = freq_b.find(label);
    if (it == freq_b.end()) continue;
    p_e += (static_cast<double>(count_a) / n) * (static_cast<double>(it->second) / n);
  }
  if (p_e >= 1.0) return 1.0;  // both annotators constant and identical
  return (p_o - p_e) / (1.0 - p_e);
}

double vulnerable_line_ratio(const std::vector<FunctionRecord>& records) {
  std::size_t vuln = 0;
  std::size_t total = 0;
  for (const auto& record : records) {
    vuln += record.vuln_line_indices.size();
    for (const auto& stmt : record.statements)
      if (!stmt.is_cosmetic) ++total;
  }
  return total == 0 ? 0.0 : static_cast<double>(vuln) / static_cast<double>(total);
}

// --- file formats -------------------------------------------------------------

namespace {

json require(const json& object, const char* key, std::string_view where) {
  auto it = object.find(key);
  if (it == object.end())
    throw ValidationError(std::string(where) + ": missing key '" + key + "'");
  return *it;
}

CvssLabelSet labels_from_json(const json& object, std::string_view where) {
  CvssLabelSet labels;
  auto get = [&](const char* key) -> std::string {
    auto it = object.find(key);
    if (it == object.end() || !it->is_string()) return {};
    return it->get<std::string>();
  };
  labels.access_vector = get("access_vector");
  labels.access_complexity = get("access_complexity");
  labels.authentication = get("authentication");
  labels.confidentiality = get("confidentiality");
  labels.integrity = get("integrity");
  labels.availability = get("availability");
  labels.severity = get("severity");
  if (!object.is_object())
    throw ValidationError(std::string(where) + ": labels must be an object");
  return labels;
}

json labels_to_json(const CvssLabelSet& labels) {
  json object;
  for (auto name : CvssLabelSet::field_names)
    object[std::string(name)] = labels.field(name);
  return object;
}

}  // namespace

Manifest load_manifest(const std::string& path) {
  json root;
  try {
    root = json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw ValidationError("manifest '" + path + "': " + e.what());
  }
  if (!root.is_object()) throw ValidationError("manifest '" + path + "': expected an object");
  Manifest manifest;
  for (const auto& [commit, entry] : root.items())
    manifest[commit] = labels_from_json(entry, "manifest entry '" + commit + "'");
  return manifest;
}

BoundaryMap load_boundaries(const std::string& path) {
  json root;
  try {
    root = json::parse(read_file(path));
  } catch (const json::exception& e) {
    throw ValidationError("boundary file '" + path + "': " + e.what());
  }
  if (!root.is_object())
    throw ValidationError("boundary file '" + path + "': expected an object");
  BoundaryMap map;
  for (const auto& [file, list] : root.items()) {
    if (!list.is_array())
      throw ValidationError("boundary file '" + path + "': '" + file + "' must be an array");
    for (const auto& item : list) {
      FunctionBoundary boundary;
      boundary.name = require(item, "name", file).get<std::string>();
      boundary.start_line = require(item, "start", file).get<int>();
      boundary.end_line = require(item, "end", file).get<int>();
      if (boundary.start_line < 1 || boundary.end_line < boundary.start_line)
        throw ValidationError("boundary '" + boundary.name + "' in '" + file +
                              "': bad line range");
      map[file].push_back(std::move(boundary));
    }
  }
  return map;
}

std::string record_to_json_line(const FunctionRecord& record) {
  json object;
  object["id"] = record.id;
  object["project"] = record.project;
  object["commit_id"] = record.commit_id;
  json statements = json::array();
  for (const auto& stmt : record.statements) {
    statements.push_back({{"original_line_number", stmt.original_line_number},
                          {"text", stmt.text},
                          {"is_cosmetic", stmt.is_cosmetic}});
  }
  object["statements"] = std::move(statements);
  object["vuln_line_indices"] = record.vuln_line_indices;
  object["labels"] = labels_to_json(record.labels);
  return object.dump();
}

FunctionRecord record_from_json_line(std::string_view line) {
  json object;
  try {
    object = json::parse(line);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("bad record JSON: ") + e.what());
  }
  FunctionRecord record;
  record.id = require(object, "id", "record").get<std::string>();
  const std::string where = "record '" + record.id + "'";
  record.project = require(object, "project", where).get<std::string>();
  record.commit_id = require(object, "commit_id", where).get<std::string>();
  for (const auto& item : require(object, "statements", where)) {
    Statement stmt;
    stmt.original_line_number = require(item, "original_line_number", where).get<int>();
    stmt.text = require(item, "text", where).get<std::string>();
    stmt.is_cosmetic = require(item, "is_cosmetic", where).get<bool>();
    record.statements.push_back(std::move(stmt));
  }
  for (const auto& idx : require(object, "vuln_line_indices", where))
    record.vuln_line_indices.push_back(idx.get<std::size_t>());
  record.labels = labels_from_json(require(object, "labels", where), where);
  record.validate();
  return record;
}

std::vector<FunctionRecord> load_dataset(const std::string& path) {
  const std::string text = read_file(path);
  std::vector<FunctionRecord> records;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = chomp(text.substr(
        pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos));
    ++line_no;
    if (!line.empty()) {
      try {
        records.push_back(record_from_json_line(line));
      } catch (const ValidationError& e) {
        throw ValidationError(path + ":" + std::to_string(line_no) + ": " + e.what());
      }
    }
    if (eol == std::string_view::npos) break;
    pos = eol + 1;
  }
  return records;
}

void save_dataset(const std::vector<FunctionRecord>& records, const std::string& path) {
  std::ostringstream out;
  for (const auto& record : records) out << record_to_json_line(record) << '\n';
  write_file_atomic(path, out.str());
}

}  // namespace sva::corpus
