#include "sva/lex.hpp"

#include <array>
#include <cctype>

namespace sva::lex {

namespace {

bool is_word_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

// Longest first so maximal munch works by scanning in order.
constexpr std::array<std::string_view, 25> multi_char_ops = {
    ">>>=", "<<=", ">>=", ">>>", "...", "::", "->", "++", "--",
    "==",   "!=",  "<=",  ">=",  "&&",  "||", "+=", "-=", "*=",
    "/=",   "%=",  "&=",  "|=",  "^=",  "<<", ">>"};

}  // namespace

std::string strip_comments(std::string_view line, bool& in_block_comment) {
  std::string out(line.size(), ' ');
  bool in_string = false;
  bool in_char = false;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (in_block_comment) {
      if (c == '*' && i + 1 < line.size() && line[i + 1] == '/') {
        in_block_comment = false;
        i += 2;
      } else {
        ++i;
      }
      continue;
    }
    if (in_string || in_char) {
      out[i] = c;
      if (c == '\\' && i + 1 < line.size()) {
        out[i + 1] = line[i + 1];
        i += 2;
        continue;
      }
      if (in_string && c == '"') in_string = false;
      if (in_char && c == '\'') in_char = false;
      ++i;
      continue;
    }
    if (c == '"') {
      in_string = true;
      out[i] = c;
      ++i;
      continue;
    }
    if (c == '\'') {
      in_char = true;
      out[i] = c;
      ++i;
      continue;
    }
    if (c == '/' && i + 1 < line.size() && line[i + 1] == '/') break;
    if (c == '/' && i + 1 < line.size() && line[i + 1] == '*') {
      in_block_comment = true;
      i += 2;
      continue;
    }
    out[i] = c;
    ++i;
  }
  // Literals do not span lines in the target syntax; reset per line.
  return out;
}

std::vector<Token> tokenize_code(std::string_view code) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  const std::size_t n = code.size();
  while (i < n) {
    const char c = code[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (is_word_start(c)) {
      std::size_t j = i + 1;
      while (j < n && is_word_char(code[j])) ++j;
      tokens.push_back({TokenKind::Word, std::string(code.substr(i, j - i))});
      i = j;
      continue;
    }
    if (is_digit(c)) {
      std::size_t j = i + 1;
      while (j < n) {
        const char d = code[j];
        if (is_word_char(d) || d == '.') {
          ++j;
        } else if ((d == '+' || d == '-') && (code[j - 1] == 'e' || code[j - 1] == 'E') &&
                   j + 1 < n && is_digit(code[j + 1])) {
          ++j;  // exponent sign
        } else {
          break;
        }
      }
      tokens.push_back({TokenKind::Number, std::string(code.substr(i, j - i))});
      i = j;
      continue;
    }
    if (c == '"' || c == '\'') {
      const char quote = c;
      std::size_t j = i + 1;
      while (j < n) {
        if (code[j] == '\\' && j + 1 < n) {
          j += 2;
          continue;
        }
        if (code[j] == quote) {
          ++j;
          break;
        }
        ++j;
      }
      tokens.push_back({TokenKind::String, std::string(code.substr(i, j - i))});
      i = j;
      continue;
    }
    bool matched = false;
    for (std::string_view op : multi_char_ops) {
      if (code.substr(i, op.size()) == op) {
        tokens.push_back({TokenKind::Operator, std::string(op)});
        i += op.size();
        matched = true;
        break;
      }
    }
    if (!matched) {
      tokens.push_back({TokenKind::Operator, std::string(1, c)});
      ++i;
    }
  }
  return tokens;
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  bool in_block = false;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    const std::string_view line =
        text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    const std::string stripped = strip_comments(line, in_block);
    auto line_tokens = tokenize_code(stripped);
    tokens.insert(tokens.end(), std::make_move_iterator(line_tokens.begin()),
                  std::make_move_iterator(line_tokens.end()));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return tokens;
}

}  // namespace sva::lex
