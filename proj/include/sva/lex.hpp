#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace sva::lex {

enum class TokenKind {
  Word,      // identifier or keyword; classification is the caller's business
  Number,    // numeric literal
  String,    // string or char literal, quotes included
  Operator,  // operator or punctuation, maximal munch over a fixed table
};

struct Token {
  TokenKind kind;
  std::string text;

  bool operator==(const Token&) const = default;
};

// Removes comment content from one physical line. `in_block_comment` carries
// the open /* ... */ state across lines; string and char literals are honored
// so quoted comment markers do not toggle it. Returns the line with comment
// spans replaced by spaces.
std::string strip_comments(std::string_view line, bool& in_block_comment);

// Tokenizes comment-free code. Whitespace separates tokens; string literals
// stay whole; operators are split by maximal munch ("var++" -> var, ++).
std::vector<Token> tokenize_code(std::string_view code);

// Convenience: strip comments (fresh block state, tracked across embedded
// newlines) and tokenize.
std::vector<Token> tokenize(std::string_view text);

}  // namespace sva::lex
