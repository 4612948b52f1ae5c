// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 ESDP Contributors

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace esdp {

std::string_view trim(std::string_view s);
std::string to_lower(std::string_view s);
bool starts_with_icase(std::string_view s, std::string_view prefix);
bool contains_icase(std::string_view haystack, std::string_view needle);
std::vector<std::string> split(std::string_view s, char sep);
std::string join(const std::vector<std::string>& parts, std::string_view sep);

/// Strict non-negative integer parse; the whole string must be digits.
std::optional<long> parse_long(std::string_view s);

/// Replaces invalid UTF-8 sequences with U+FFFD. Returns the number of
/// replacements through `replaced` when non-null.
std::string sanitize_utf8(std::string_view bytes, std::size_t* replaced = nullptr);

}  // namespace esdp
