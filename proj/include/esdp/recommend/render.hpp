// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 ESDP Contributors

#pragma once

#include <optional>
#include <string>

#include "esdp/recommend/matcher.hpp"
#include "esdp/recommend/skeleton.hpp"

namespace esdp {

/// One line per entry: rank, score, support, confidence, pattern, tab-separated.
std::string render_text(const Recommendation& rec, const MinedRepository& repo);

/// Header lines, then each block line prefixed by its number; highlighted
/// lines are marked with '>'.
std::string render_skeleton(const CodeSkeleton& skeleton);

/// <recommendation> document with one <pattern> element per entry; the
/// skeleton, when given, belongs to the first entry.
std::string render_xml(const Recommendation& rec, const MinedRepository& repo,
                       const std::optional<CodeSkeleton>& skeleton);

}  // namespace esdp
