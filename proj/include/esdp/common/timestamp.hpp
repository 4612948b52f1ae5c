// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 ESDP Contributors

#pragma once

#include <chrono>
#include <string>
#include <string_view>

namespace esdp {

using Timestamp = std::chrono::sys_seconds;

Timestamp now_utc();

/// "YYYY-MM-DDTHH:MM:SSZ"
std::string format_iso8601(Timestamp t);

/// Accepts exactly the format produced by format_iso8601; throws Error otherwise.
Timestamp parse_iso8601(std::string_view text);

}  // namespace esdp
