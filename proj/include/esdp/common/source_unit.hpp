// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 ESDP Contributors

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace esdp {

/// Byte offsets of line starts, for 1-based line lookup.
class LineIndex {
 public:
  LineIndex() = default;
  explicit LineIndex(std::string_view text);

  /// Number of lines; an empty text has one (empty) line.
  std::size_t line_count() const noexcept { return starts_.size(); }

  /// 1-based line containing `offset`. Offsets past the end map to the last line.
  std::size_t line_of(std::size_t offset) const;

  /// Text of 1-based `line` without its terminator.
  std::string_view line_text(std::string_view text, std::size_t line) const;

  std::size_t line_start(std::size_t line) const { return starts_.at(line - 1); }

 private:
  std::vector<std::size_t> starts_{0};
};

/// One source file loaded from a declared source. `path` is the manifest
/// path, i.e. "<source id>/<path relative to the source root>".
struct SourceUnit {
  std::string path;
  std::string source_id;
  std::string package;
  std::string text;
  LineIndex line_index;
  std::string digest;
  std::size_t size = 0;
};

}  // namespace esdp
