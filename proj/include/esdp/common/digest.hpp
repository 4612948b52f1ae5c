// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 ESDP Contributors

#pragma once

#include <string>
#include <string_view>

namespace esdp {

/// Name recorded in repository documents for the content digest.
inline constexpr std::string_view kDigestAlgorithm = "sha256";

/// Lowercase hex SHA-256 of the given bytes.
std::string sha256_hex(std::string_view bytes);

}  // namespace esdp
