#include "sva/depgraph.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "sva/lex.hpp"

namespace sva::depgraph {

using lex::Token;
using lex::TokenKind;

const LanguageProfile& LanguageProfile::java() {
  static const LanguageProfile profile{std::set<std::string, std::less<>>{
      "abstract",   "assert",       "boolean",  "break",      "byte",      "case",
      "catch",      "char",         "class",    "const",      "continue",  "default",
      "do",         "double",       "else",     "enum",       "extends",   "final",
      "finally",    "float",        "for",      "goto",       "if",        "implements",
      "import",     "instanceof",   "int",      "interface",  "long",      "native",
      "new",        "package",      "private",  "protected",  "public",    "return",
      "short",      "static",       "strictfp", "super",      "switch",    "synchronized",
      "this",       "throw",        "throws",   "transient",  "try",       "void",
      "volatile",   "while",        "null",     "true",       "false",     "var"}};
  return profile;
}

namespace {

const std::set<std::string_view> control_keywords = {
    "if", "for", "while", "switch", "case", "do", "else", "try", "catch"};

const std::set<std::string_view> assignment_ops = {
    "=", "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>=", ">>>="};

bool all_space(std::string_view s) {
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isspace(c) != 0; });
}

bool is_op(const Token& t, std::string_view text) {
  return t.kind == TokenKind::Operator && t.text == text;
}

// First word token after leading braces/semicolons; empty if none.
std::string_view leading_word(const std::vector<Token>& tokens) {
  for (const auto& t : tokens) {
    if (t.kind == TokenKind::Operator &&
        (t.text == "{" || t.text == "}" || t.text == ";"))
      continue;
    if (t.kind == TokenKind::Word) return t.text;
    return {};
  }
  return {};
}

void analyze_def_use(const std::vector<Token>& tokens, const LanguageProfile& profile,
                     std::set<std::string>& defs, std::set<std::string>& uses) {
  // Position of the first assignment operator, if any; identifiers to its
  // left are definitions.
  std::size_t assign_pos = tokens.size();
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].kind == TokenKind::Operator && assignment_ops.count(tokens[i].text)) {
      assign_pos = i;
      break;
    }
  }

  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Token& tok = tokens[i];
    if (tok.kind != TokenKind::Word || profile.is_keyword(tok.text)) continue;
    const Token* prev = i > 0 ? &tokens[i - 1] : nullptr;
    const Token* next = i + 1 < tokens.size() ? &tokens[i + 1] : nullptr;

    // Member names are not identifiers of their own.
    if (prev && is_op(*prev, ".")) continue;
    // Plain call names ("func(c)" uses only c).
    if (next && is_op(*next, "(")) continue;

    // Receiver of a member-access chain: use; use+def when the chain is a
    // method call ("sb.append(x)" both reads and mutates sb).
    bool receiver_call = false;
    bool receiver = false;
    if (next && is_op(*next, ".")) {
      receiver = true;
      std::size_t j = i + 1;
      while (j + 1 < tokens.size() && is_op(tokens[j], ".") &&
             tokens[j + 1].kind == TokenKind::Word) {
        j += 2;
        if (j < tokens.size() && is_op(tokens[j], "(")) {
          receiver_call = true;
          break;
        }
      }
    }

    const bool incremented =
        (prev && (is_op(*prev, "++") || is_op(*prev, "--"))) ||
        (next && (is_op(*next, "++") || is_op(*next, "--")));

    if (i < assign_pos) {
      defs.insert(tok.text);
    } else if (incremented || receiver_call) {
      defs.insert(tok.text);
      uses.insert(tok.text);
    } else {
      (void)receiver;
      uses.insert(tok.text);
    }
  }
}

struct LineShape {
  int depth_before = 0;
  int min_depth = 0;
  int depth_after = 0;
};

LineShape trace_braces(const std::vector<Token>& tokens, int depth) {
  LineShape shape{depth, depth, depth};
  int d = depth;
  for (const auto& t : tokens) {
    if (t.kind != TokenKind::Operator) continue;
    if (t.text == "{") {
      ++d;
    } else if (t.text == "}") {
      --d;
      shape.min_depth = std::min(shape.min_depth, d);
    }
  }
  shape.depth_after = d;
  return shape;
}

}  // namespace

std::vector<StatementNode> split_statements(const std::vector<SourceLine>& function_source,
                                            const LanguageProfile& profile) {
  std::vector<StatementNode> nodes;
  nodes.reserve(function_source.size());
  std::vector<std::vector<Token>> node_tokens(function_source.size());

  bool in_block_comment = false;
  for (std::size_t i = 0; i < function_source.size(); ++i) {
    const auto& [line_number, text] = function_source[i];
    StatementNode node;
    node.index = i;
    node.original_line_number = line_number;
    node.text = text;
    const std::string stripped = lex::strip_comments(text, in_block_comment);
    if (all_space(stripped)) {
      node.kind = NodeKind::cosmetic;
      nodes.push_back(std::move(node));
      continue;
    }
    node_tokens[i] = lex::tokenize_code(stripped);
    const std::string_view first = leading_word(node_tokens[i]);
    node.kind = (!first.empty() && control_keywords.count(first)) ? NodeKind::control
                                                                  : NodeKind::plain;
    analyze_def_use(node_tokens[i], profile, node.defs, node.uses);
    nodes.push_back(std::move(node));
  }

  // Control governance: track lexical scopes so each statement knows its
  // innermost governing control line.
  enum class ScopeKind { brace, single, case_arm };
  struct Scope {
    std::size_t control_idx;
    int close_depth;  // scope ends once brace depth returns to this level
    ScopeKind kind;
    bool consumed = false;  // single scopes: statement already seen
  };
  std::vector<Scope> stack;
  int depth = 0;

  auto cascade_singles = [&stack]() {
    while (!stack.empty() && stack.back().kind == ScopeKind::single && stack.back().consumed)
      stack.pop_back();
  };

  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].kind == NodeKind::cosmetic) continue;
    const auto& tokens = node_tokens[i];
    const LineShape shape = trace_braces(tokens, depth);
    const std::string_view first = leading_word(tokens);

    while (!stack.empty()) {
      const Scope& top = stack.back();
      if (top.kind == ScopeKind::brace && shape.min_depth <= top.close_depth) {
        stack.pop_back();
        cascade_singles();
      } else if (top.kind == ScopeKind::case_arm &&
                 (shape.min_depth < top.close_depth || first == "case" || first == "default")) {
        stack.pop_back();
        cascade_singles();
      } else {
        break;
      }
    }

    if (!stack.empty()) nodes[i].control_parent = stack.back().control_idx;

    bool consumed_single = false;
    if (!stack.empty() && stack.back().kind == ScopeKind::single && !stack.back().consumed) {
      stack.back().consumed = true;
      consumed_single = true;
    }

    bool spawned = false;
    const bool opens_block = shape.depth_after > shape.min_depth;
    if (nodes[i].kind == NodeKind::control) {
      if (opens_block) {
        stack.push_back({i, shape.min_depth, ScopeKind::brace});
        spawned = true;
      } else if (first == "case") {
        stack.push_back({i, shape.depth_before, ScopeKind::case_arm});
        spawned = true;
      } else if (!tokens.empty() && is_op(tokens.back(), ";")) {
        // Inline body ("if (c) doIt();") or do-while tail: governs nothing
        // that follows.
      } else {
        stack.push_back({i, 0, ScopeKind::single});
        spawned = true;
      }
    } else if (opens_block && consumed_single) {
      // The single statement is a brace block: the governing control keeps
      // the whole block.
      stack.back().close_depth = shape.min_depth;
      stack.back().kind = ScopeKind::brace;
      spawned = true;  // scope continues; do not pop below
    }

    if (!spawned && consumed_single) {
      stack.pop_back();
      cascade_singles();
    }

    depth = shape.depth_after;
  }

  return nodes;
}

DependenceGraph build_dependence_graph(std::vector<StatementNode> statements) {
  DependenceGraph graph;
  std::set<Edge> edges;

  // Control edges from each control node to the statements it governs.
  for (const auto& node : statements) {
    if (node.control_parent)
      edges.insert({*node.control_parent, node.index, EdgeLabel::control});
  }

  // Forward program-order data edges with the redefinition kill rule: a use
  // links to the most recent prior definition only. A node both using and
  // defining an identifier (mutating call, ++) reads the previous definition
  // before redefining, which chains successive mutations.
  std::map<std::string, std::size_t> last_def;
  for (const auto& node : statements) {
    for (const auto& id : node.uses) {
      auto it = last_def.find(id);
      if (it != last_def.end() && it->second != node.index)
        edges.insert({it->second, node.index, EdgeLabel::data});
    }
    for (const auto& id : node.defs) last_def[id] = node.index;
  }

  graph.nodes = std::move(statements);
  graph.edges.assign(edges.begin(), edges.end());
  return graph;
}

std::vector<std::vector<std::size_t>> DependenceGraph::successors() const {
  std::vector<std::vector<std::size_t>> adj(nodes.size());
  for (const auto& edge : edges) adj[edge.from].push_back(edge.to);
  return adj;
}

std::vector<std::vector<std::size_t>> DependenceGraph::predecessors() const {
  std::vector<std::vector<std::size_t>> adj(nodes.size());
  for (const auto& edge : edges) adj[edge.to].push_back(edge.from);
  return adj;
}

std::string dump_graph(const DependenceGraph& graph) {
  std::ostringstream out;
  out << "digraph pdg {\n";
  for (const auto& node : graph.nodes) {
    std::string text;
    for (char c : node.text) {
      if (c == '"' || c == '\\') text.push_back('\\');
      text.push_back(c);
    }
    const char* kind = node.kind == NodeKind::control
                           ? "control"
                           : node.kind == NodeKind::cosmetic ? "cosmetic" : "plain";
    out << "  n" << node.index << " [label=\"" << node.original_line_number << ": " << text
        << "\" kind=" << kind << "];\n";
  }
  for (const auto& edge : graph.edges) {
    out << "  n" << edge.from << " -> n" << edge.to << " [label="
        << (edge.label == EdgeLabel::data ? "data" : "control") << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace sva::depgraph
