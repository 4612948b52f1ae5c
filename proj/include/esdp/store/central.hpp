// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 ESDP Contributors

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "esdp/abstract/transaction.hpp"
#include "esdp/corpus/corpus.hpp"

namespace esdp {

inline constexpr std::string_view kSchemaVersion = "1";

/// Manifest plus every abstracted transaction and the trending-term lists.
struct CentralRepository {
  Manifest manifest;
  std::vector<Transaction> transactions;
  std::vector<TermList> terms;

  friend bool operator==(const CentralRepository&, const CentralRepository&) = default;
};

/// Puts the repository in document order: sources by id, units by path,
/// transactions by unit then span then id, term lists by source id.
void canonicalize(CentralRepository& repo);

/// Serializes in document order. Throws InternalConsistencyError when a
/// transaction names a unit absent from the manifest.
std::string write_central_xml(const CentralRepository& repo);

/// Strict inverse of write_central_xml. Throws XmlParseError,
/// SchemaVersionError or SchemaError; never returns a partial result.
CentralRepository read_central_xml(std::string_view bytes);

/// Writes via a temporary file and rename. Throws IoError.
void write_file_atomic(const std::filesystem::path& path, std::string_view bytes);

}  // namespace esdp
