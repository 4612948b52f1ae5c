// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 ESDP Contributors

#include "esdp/abstract/tokenizer.hpp"

#include <algorithm>
#include <array>

namespace esdp {

namespace {

constexpr std::array<std::string_view, 53> kKeywords = {
    "abstract", "assert",     "boolean", "break",     "byte",      "case",         "catch",    "char",
    "class",    "const",      "continue", "default",  "do",        "double",       "else",     "enum",
    "extends",  "final",      "finally", "float",     "for",       "goto",         "if",       "implements",
    "import",   "instanceof", "int",     "interface", "long",      "native",       "new",      "package",
    "private",  "protected",  "public",  "return",    "short",     "static",       "strictfp", "super",
    "switch",   "synchronized", "this",  "throw",     "throws",    "transient",    "try",      "void",
    "volatile", "while",      "true",    "false",     "null"};

bool is_ident_start(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c == '$' || c >= 0x80;
}

bool is_ident_part(unsigned char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); }

bool is_digit(unsigned char c) { return c >= '0' && c <= '9'; }

bool is_space(unsigned char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f'; }

class Lexer {
 public:
  Lexer(std::string_view text, std::vector<LexWarning>* warnings) : text_(text), warnings_(warnings) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (pos_ < text_.size()) {
      const std::size_t start = pos_;
      const int line = line_;
      const int col = col_;
      const TokenKind kind = scan_one();
      out.push_back(Token{kind, text_.substr(start, pos_ - start), line, col, start});
    }
    return out;
  }

 private:
  unsigned char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? static_cast<unsigned char>(text_[pos_ + ahead]) : 0;
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void warn(std::string message, int line, int col) {
    if (warnings_ != nullptr) warnings_->push_back(LexWarning{std::move(message), line, col});
  }

  TokenKind scan_one() {
    const unsigned char c = peek();
    if (is_space(c)) {
      while (pos_ < text_.size() && is_space(peek())) advance();
      return TokenKind::Whitespace;
    }
    if (c == '/' && peek(1) == '/') {
      while (pos_ < text_.size() && peek() != '\n') advance();
      return TokenKind::Comment;
    }
    if (c == '/' && peek(1) == '*') {
      const int line = line_;
      const int col = col_;
      advance();
      advance();
      while (pos_ < text_.size() && !(peek() == '*' && peek(1) == '/')) advance();
      if (pos_ < text_.size()) {
        advance();
        advance();
      } else {
        warn("unterminated block comment", line, col);
      }
      return TokenKind::Comment;
    }
    if (c == '"') {
      if (peek(1) == '"' && peek(2) == '"') {
        scan_quoted("\"\"\"", "unterminated text block");
      } else {
        scan_quoted("\"", "unterminated string literal");
      }
      return TokenKind::StringLiteral;
    }
    if (c == '\'') {
      scan_quoted("'", "unterminated char literal");
      return TokenKind::CharLiteral;
    }
    if (is_digit(c) || (c == '.' && is_digit(peek(1)))) {
      scan_number();
      return TokenKind::Number;
    }
    if (is_ident_start(c)) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && is_ident_part(peek())) advance();
      return is_java_keyword(text_.substr(start, pos_ - start)) ? TokenKind::Keyword : TokenKind::Identifier;
    }
    advance();
    return TokenKind::Punctuation;
  }

  void scan_quoted(std::string_view delimiter, const char* unterminated) {
    const int line = line_;
    const int col = col_;
    for (std::size_t i = 0; i < delimiter.size(); ++i) advance();
    while (pos_ < text_.size()) {
      if (peek() == '\\') {
        advance();
        if (pos_ < text_.size()) advance();
        continue;
      }
      if (text_.substr(pos_, delimiter.size()) == delimiter) {
        for (std::size_t i = 0; i < delimiter.size(); ++i) advance();
        return;
      }
      advance();
    }
    warn(unterminated, line, col);
  }

  void scan_number() {
    const bool hex = peek() == '0' && (peek(1) == 'x' || peek(1) == 'X');
    while (pos_ < text_.size()) {
      const unsigned char c = peek();
      if (is_ident_part(c) && c < 0x80) {
        const bool exponent = hex ? (c == 'p' || c == 'P') : (c == 'e' || c == 'E');
        advance();
        if (exponent && (peek() == '+' || peek() == '-')) advance();
      } else if (c == '.' && is_digit(peek(1))) {
        advance();
      } else if (c == '.' && !hex && peek(1) != '.' && !is_ident_start(peek(1))) {
        // trailing dot as in "1." belongs to the literal
        advance();
      } else {
        break;
      }
    }
  }

  std::string_view text_;
  std::vector<LexWarning>* warnings_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::Identifier: return "identifier";
    case TokenKind::Keyword: return "keyword";
    case TokenKind::Punctuation: return "punctuation";
    case TokenKind::StringLiteral: return "string-literal";
    case TokenKind::CharLiteral: return "char-literal";
    case TokenKind::Number: return "number";
    case TokenKind::Comment: return "comment";
    case TokenKind::Whitespace: return "whitespace";
  }
  return "unknown";
}

bool is_java_keyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

std::vector<Token> tokenize(std::string_view text, std::vector<LexWarning>* warnings) {
  return Lexer(text, warnings).run();
}

}  // namespace esdp
