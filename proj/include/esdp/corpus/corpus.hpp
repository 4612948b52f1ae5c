// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 ESDP Contributors

#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "esdp/abstract/transaction.hpp"
#include "esdp/common/source_unit.hpp"
#include "esdp/common/timestamp.hpp"

namespace esdp {

enum class SourceKind { OpenSourceProject, CompanyProject, StandardLibrary, TrendingTerms, AuthoredApi };

std::string_view to_string(SourceKind kind);
std::optional<SourceKind> parse_source_kind(std::string_view text);

struct SourceDescriptor {
  std::string id;
  SourceKind kind = SourceKind::OpenSourceProject;
  /// Directory of sources, a pre-abstracted ".jsonl" records file, or, for
  /// trending-terms, a term-list file.
  std::filesystem::path root;
  std::string label;

  friend bool operator==(const SourceDescriptor&, const SourceDescriptor&) = default;
};

struct UnitSummary {
  std::string path;
  std::string source_id;
  std::string package;
  std::string digest;

  friend bool operator==(const UnitSummary&, const UnitSummary&) = default;
};

inline constexpr int kDefaultUpdateIntervalDays = 90;

struct Manifest {
  std::vector<SourceDescriptor> sources;
  std::vector<UnitSummary> units;
  Timestamp built_at{};
  int update_interval_days = kDefaultUpdateIntervalDays;
  std::string digest_algorithm = "sha256";

  friend bool operator==(const Manifest&, const Manifest&) = default;
};

struct TermList {
  std::vector<std::string> terms;
  std::string source_id;

  friend bool operator==(const TermList&, const TermList&) = default;
};

using ExtensionSet = std::set<std::string, std::less<>>;

inline ExtensionSet default_extensions() { return {".java"}; }

struct ScanResult {
  std::vector<SourceUnit> units;
  std::vector<std::string> warnings;
};

/// Regular files under the descriptor root whose extension is in
/// `extensions`, ordered lexicographically by root-relative path. Text is
/// decoded as UTF-8 with invalid bytes replaced; unreadable files are
/// skipped with a warning. Unit paths are root-relative.
ScanResult scan_corpus(const SourceDescriptor& descriptor, const ExtensionSet& extensions);

/// The central corpus: manifest plus everything loaded while building it.
struct Corpus {
  Manifest manifest;
  /// Parsed-from-source units, manifest order, paths "<source id>/<relative>".
  std::vector<SourceUnit> units;
  /// Transactions imported from ".jsonl" record sources.
  std::vector<Transaction> imported;
  std::vector<TermList> terms;
  std::vector<std::string> warnings;
};

/// Scans every descriptor. Unavailable sources become warnings; when all of
/// them are unavailable the build fails with EmptyCorpusError. Duplicate ids
/// and an empty descriptor list are ConfigErrors.
Corpus build_manifest(const std::vector<SourceDescriptor>& descriptors, Timestamp now,
                      const ExtensionSet& extensions = default_extensions(),
                      int update_interval_days = kDefaultUpdateIntervalDays);

struct StalenessReport {
  bool stale = false;
  long age_days = 0;

  friend bool operator==(const StalenessReport&, const StalenessReport&) = default;
};

/// stale exactly when whole elapsed days exceed the update interval, so day
/// 90 of a 90-day interval is still fresh. Throws ClockSkewError when `now`
/// precedes built_at.
StalenessReport check_staleness(const Manifest& manifest, Timestamp now);

/// One term per line; blank lines and repeated terms dropped, first
/// occurrence kept. Throws SourceUnavailableError when the file is missing.
TermList load_term_list(const std::filesystem::path& path, const std::string& source_id);

/// Reads a file as raw bytes; throws IoError.
std::string read_file_bytes(const std::filesystem::path& path);

}  // namespace esdp
