#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sva::depgraph {

// Keyword tables for the lexical def/use approximation. The default profile
// targets Java-like syntax; keywords never count as identifiers.
struct LanguageProfile {
  std::set<std::string, std::less<>> keywords;

  bool is_keyword(std::string_view word) const {
    return keywords.find(word) != keywords.end();
  }

  static const LanguageProfile& java();
};

enum class NodeKind { plain, control, cosmetic };

struct StatementNode {
  std::size_t index = 0;
  int original_line_number = 0;
  std::string text;
  std::set<std::string> defs;
  std::set<std::string> uses;
  NodeKind kind = NodeKind::plain;
  std::optional<std::size_t> control_parent;
};

enum class EdgeLabel { data, control };

struct Edge {
  std::size_t from = 0;
  std::size_t to = 0;
  EdgeLabel label = EdgeLabel::data;

  auto operator<=>(const Edge&) const = default;
};

struct DependenceGraph {
  std::vector<StatementNode> nodes;
  std::vector<Edge> edges;  // unique, sorted by (from, to, label)

  std::vector<std::vector<std::size_t>> successors() const;
  std::vector<std::vector<std::size_t>> predecessors() const;
};

using SourceLine = std::pair<int, std::string>;  // (line number, text)

// One node per physical line. Cosmetic lines (blank/comment-only, tracked
// with block-comment state) get empty def/use sets. Control lines are those
// whose first token (after leading braces) is if/for/while/switch/case/do/
// else/try/catch. Defs are identifiers left of an assignment operator,
// receivers of method calls, and ++/-- operands; every other identifier
// referenced is a use. Call names and member names are neither.
std::vector<StatementNode> split_statements(const std::vector<SourceLine>& function_source,
                                            const LanguageProfile& profile = LanguageProfile::java());

// Forward program-order data edges with the no-intervening-redefinition kill
// rule, plus control edges from each control node to the nodes it governs.
DependenceGraph build_dependence_graph(std::vector<StatementNode> statements);

// DOT text dump for inspection.
std::string dump_graph(const DependenceGraph& graph);

}  // namespace sva::depgraph
