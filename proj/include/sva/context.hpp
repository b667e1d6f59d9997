#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sva/corpus.hpp"
#include "sva/depgraph.hpp"

namespace sva::context {

enum class ContextKind { ps, surrounding, function, random_nonvuln, residual, none };

std::string to_string(ContextKind kind);

// A named subset of a function's non-vulnerable, non-cosmetic lines paired
// with its vulnerable lines. Indices are statement indices in ascending
// program order; the two sets never intersect.
struct ContextSelection {
  std::string function_id;
  ContextKind kind = ContextKind::none;
  int window = 0;          // surrounding(n)
  std::uint64_t seed = 0;  // random_nonvuln
  std::vector<std::size_t> context_indices;
  std::vector<std::size_t> vuln_indices;
};

// Nodes from which any seed is reachable via one or more directed edges,
// seeds excluded. Result ascending.
std::vector<std::size_t> backward_slice(const depgraph::DependenceGraph& graph,
                                        const std::vector<std::size_t>& seeds);

// Nodes reachable from any seed via one or more directed edges, seeds
// excluded. Result ascending.
std::vector<std::size_t> forward_slice(const depgraph::DependenceGraph& graph,
                                       const std::vector<std::size_t>& seeds);

// Builds the record's dependence graph (one node per statement). Cosmetic
// flags stored on the record win over re-lexing.
depgraph::DependenceGraph graph_for_record(
    const corpus::FunctionRecord& record,
    const depgraph::LanguageProfile& profile = depgraph::LanguageProfile::java());

// backward ∪ forward slices of the vulnerable lines, minus the vulnerable
// lines themselves and any cosmetic lines.
ContextSelection program_slicing_context(const corpus::FunctionRecord& record,
                                         const depgraph::DependenceGraph& graph);

// Up to n non-cosmetic lines before and after each vulnerable statement,
// within the function; vulnerable lines excluded, windows unioned.
ContextSelection surrounding_context(const corpus::FunctionRecord& record, int n);

// Every non-cosmetic, non-vulnerable statement.
ContextSelection function_context(const corpus::FunctionRecord& record);

// Uniform sample (without replacement) of min(|vuln|, |non-vuln|) lines from
// the non-vulnerable, non-cosmetic statements; deterministic per seed.
ContextSelection random_nonvuln(const corpus::FunctionRecord& record, std::uint64_t seed);

// Function context minus PS context.
ContextSelection residual_context(const corpus::FunctionRecord& record,
                                  const ContextSelection& ps);

ContextSelection none_context(const corpus::FunctionRecord& record);

enum class AssembleMode { single, double_input };

struct AssembledInput {
  AssembleMode mode = AssembleMode::single;
  std::string part_vuln;     // single: all selected lines merged in program order
  std::string part_context;  // empty in single mode
};

AssembledInput assemble_input(const corpus::FunctionRecord& record,
                              const ContextSelection& selection, AssembleMode mode);

// Text of the context lines alone (the Non-vuln / ctx-only conditions).
std::string context_only_text(const corpus::FunctionRecord& record,
                              const ContextSelection& selection);

// Audit dump: one JSON line {function_id, kind, vuln_lines, context_lines}
// per selection, with original line numbers.
std::string selection_to_json_line(const corpus::FunctionRecord& record,
                                   const ContextSelection& selection);

}  // namespace sva::context
