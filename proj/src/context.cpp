#include "sva/context.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "sva/error.hpp"
#include "sva/rng.hpp"

namespace sva::context {

std::string to_string(ContextKind kind) {
  switch (kind) {
    case ContextKind::ps: return "ps";
    case ContextKind::surrounding: return "surrounding";
    case ContextKind::function: return "function";
    case ContextKind::random_nonvuln: return "random_nonvuln";
    case ContextKind::residual: return "residual";
    case ContextKind::none: return "none";
  }
  return "none";
}

namespace {

std::vector<std::size_t> reachable(const depgraph::DependenceGraph& graph,
                                   const std::vector<std::size_t>& seeds,
                                   const std::vector<std::vector<std::size_t>>& adj) {
  std::vector<char> seen(graph.nodes.size(), 0);
  std::vector<std::size_t> queue;
  for (std::size_t seed : seeds) {
    if (seed >= graph.nodes.size()) throw ValidationError("slice seed out of range");
    for (std::size_t nb : adj[seed]) {
      if (!seen[nb]) {
        seen[nb] = 1;
        queue.push_back(nb);
      }
    }
  }
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (std::size_t nb : adj[queue[q]]) {
      if (!seen[nb]) {
        seen[nb] = 1;
        queue.push_back(nb);
      }
    }
  }
  std::set<std::size_t> seed_set(seeds.begin(), seeds.end());
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (seen[i] && !seed_set.count(i)) out.push_back(i);
  return out;
}

ContextSelection make_selection(const corpus::FunctionRecord& record, ContextKind kind,
                                std::vector<std::size_t> context_indices) {
  ContextSelection selection;
  selection.function_id = record.id;
  selection.kind = kind;
  selection.vuln_indices = record.vuln_line_indices;
  selection.context_indices = std::move(context_indices);
  return selection;
}

}  // namespace

std::vector<std::size_t> backward_slice(const depgraph::DependenceGraph& graph,
                                        const std::vector<std::size_t>& seeds) {
  return reachable(graph, seeds, graph.predecessors());
}

std::vector<std::size_t> forward_slice(const depgraph::DependenceGraph& graph,
                                       const std::vector<std::size_t>& seeds) {
  return reachable(graph, seeds, graph.successors());
}

depgraph::DependenceGraph graph_for_record(const corpus::FunctionRecord& record,
                                           const depgraph::LanguageProfile& profile) {
  std::vector<depgraph::SourceLine> lines;
  lines.reserve(record.statements.size());
  for (const auto& stmt : record.statements)
    lines.emplace_back(stmt.original_line_number, stmt.text);
  auto nodes = depgraph::split_statements(lines, profile);
  // The record's stored cosmetic flags win over re-lexing.
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (record.statements[i].is_cosmetic) {
      nodes[i].kind = depgraph::NodeKind::cosmetic;
      nodes[i].defs.clear();
      nodes[i].uses.clear();
      nodes[i].control_parent.reset();
    }
  }
  for (auto& node : nodes) {
    if (node.control_parent &&
        nodes[*node.control_parent].kind == depgraph::NodeKind::cosmetic)
      node.control_parent.reset();
  }
  return depgraph::build_dependence_graph(std::move(nodes));
}

ContextSelection program_slicing_context(const corpus::FunctionRecord& record,
                                         const depgraph::DependenceGraph& graph) {
  if (record.vuln_line_indices.empty())
    throw ValidationError("record '" + record.id + "' has no vulnerable lines");
  std::set<std::size_t> merged;
  for (std::size_t idx : backward_slice(graph, record.vuln_line_indices)) merged.insert(idx);
  for (std::size_t idx : forward_slice(graph, record.vuln_line_indices)) merged.insert(idx);
  std::vector<std::size_t> context;
  for (std::size_t idx : merged) {
    if (record.is_vuln(idx) || record.statements[idx].is_cosmetic) continue;
    context.push_back(idx);
  }
  return make_selection(record, ContextKind::ps, std::move(context));
}

ContextSelection surrounding_context(const corpus::FunctionRecord& record, int n) {
  if (n < 0) throw ValidationError("surrounding window must be >= 0");
  std::set<std::size_t> picked;
  for (std::size_t v : record.vuln_line_indices) {
    int remaining = n;
    for (std::size_t i = v; i > 0 && remaining > 0;) {
      --i;
      if (record.statements[i].is_cosmetic) continue;  // skipped, not counted
      picked.insert(i);
      --remaining;
    }
    remaining = n;
    for (std::size_t i = v + 1; i < record.statements.size() && remaining > 0; ++i) {
      if (record.statements[i].is_cosmetic) continue;
      picked.insert(i);
      --remaining;
    }
  }
  std::vector<std::size_t> context;
  for (std::size_t idx : picked)
    if (!record.is_vuln(idx)) context.push_back(idx);
  auto selection = make_selection(record, ContextKind::surrounding, std::move(context));
  selection.window = n;
  return selection;
}

ContextSelection function_context(const corpus::FunctionRecord& record) {
  std::vector<std::size_t> context;
  for (std::size_t i = 0; i < record.statements.size(); ++i)
    if (!record.statements[i].is_cosmetic && !record.is_vuln(i)) context.push_back(i);
  return make_selection(record, ContextKind::function, std::move(context));
}

ContextSelection random_nonvuln(const corpus::FunctionRecord& record, std::uint64_t seed) {
  const auto pool = function_context(record).context_indices;
  const std::size_t k = std::min(record.vuln_line_indices.size(), pool.size());
  Rng rng(seed);
  std::vector<std::size_t> context;
  for (std::size_t pos : rng.sample_without_replacement(pool.size(), k))
    context.push_back(pool[pos]);
  auto selection = make_selection(record, ContextKind::random_nonvuln, std::move(context));
  selection.seed = seed;
  return selection;
}

ContextSelection residual_context(const corpus::FunctionRecord& record,
                                  const ContextSelection& ps) {
  if (ps.kind != ContextKind::ps || ps.function_id != record.id)
    throw ValidationError("residual_context needs the record's own ps selection");
  const std::set<std::size_t> ps_set(ps.context_indices.begin(), ps.context_indices.end());
  std::vector<std::size_t> context;
  for (std::size_t idx : function_context(record).context_indices)
    if (!ps_set.count(idx)) context.push_back(idx);
  return make_selection(record, ContextKind::residual, std::move(context));
}

ContextSelection none_context(const corpus::FunctionRecord& record) {
  return make_selection(record, ContextKind::none, {});
}

namespace {

std::string join_lines(const corpus::FunctionRecord& record,
                       const std::vector<std::size_t>& indices) {
  std::string out;
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (k > 0) out.push_back('\n');
    out += record.statements[indices[k]].text;
  }
  return out;
}

}  // namespace

AssembledInput assemble_input(const corpus::FunctionRecord& record,
                              const ContextSelection& selection, AssembleMode mode) {
  if (selection.function_id != record.id)
    throw ValidationError("selection does not belong to record '" + record.id + "'");
  AssembledInput input;
  input.mode = mode;
  if (mode == AssembleMode::single) {
    std::vector<std::size_t> merged;
    merged.reserve(selection.vuln_indices.size() + selection.context_indices.size());
    std::merge(selection.vuln_indices.begin(), selection.vuln_indices.end(),
               selection.context_indices.begin(), selection.context_indices.end(),
               std::back_inserter(merged));
    input.part_vuln = join_lines(record, merged);
  } else {
    input.part_vuln = join_lines(record, selection.vuln_indices);
    input.part_context = join_lines(record, selection.context_indices);
  }
  return input;
}

std::string context_only_text(const corpus::FunctionRecord& record,
                              const ContextSelection& selection) {
  return join_lines(record, selection.context_indices);
}

std::string selection_to_json_line(const corpus::FunctionRecord& record,
                                   const ContextSelection& selection) {
  nlohmann::json object;
  object["function_id"] = selection.function_id;
  std::string kind = to_string(selection.kind);
  if (selection.kind == ContextKind::surrounding)
    kind += "(" + std::to_string(selection.window) + ")";
  object["kind"] = kind;
  auto line_numbers = [&record](const std::vector<std::size_t>& indices) {
    std::vector<int> lines;
    lines.reserve(indices.size());
    for (std::size_t idx : indices)
      lines.push_back(record.statements[idx].original_line_number);
    return lines;
  };
  object["vuln_lines"] = line_numbers(selection.vuln_indices);
  object["context_lines"] = line_numbers(selection.context_indices);
  return object.dump();
}

}  // namespace sva::context
