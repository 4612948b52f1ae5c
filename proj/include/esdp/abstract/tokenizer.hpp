// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 ESDP Contributors

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace esdp {

enum class TokenKind { Identifier, Keyword, Punctuation, StringLiteral, CharLiteral, Number, Comment, Whitespace };

std::string_view to_string(TokenKind kind);

/// A lexical token. `text` views into the tokenized buffer, so tokens must
/// not outlive it.
struct Token {
  TokenKind kind = TokenKind::Punctuation;
  std::string_view text;
  int line = 1;
  int col = 1;
  std::size_t offset = 0;

  bool is(std::string_view s) const noexcept { return text == s; }
  bool is_punct(char c) const noexcept {
    return kind == TokenKind::Punctuation && text.size() == 1 && text[0] == c;
  }
  bool is_keyword(std::string_view s) const noexcept { return kind == TokenKind::Keyword && text == s; }
  bool significant() const noexcept { return kind != TokenKind::Whitespace && kind != TokenKind::Comment; }
};

/// Warning raised while tokenizing, e.g. an unterminated literal.
struct LexWarning {
  std::string message;
  int line = 0;
  int col = 0;
};

bool is_java_keyword(std::string_view word);

/// Lossless tokenization: concatenating the token texts reproduces `text`.
/// Comments and string/char literals are atomic; every other non-word,
/// non-space byte is a single punctuation token. Unterminated block comments
/// and literals extend to end of input and add a warning.
std::vector<Token> tokenize(std::string_view text, std::vector<LexWarning>* warnings = nullptr);

}  // namespace esdp
