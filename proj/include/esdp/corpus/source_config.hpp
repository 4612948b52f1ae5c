// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 ESDP Contributors

#pragma once

#include <filesystem>
#include <istream>
#include <vector>

#include "esdp/corpus/corpus.hpp"

namespace esdp {

/// Parsed source configuration file:
///
///     # global settings (optional)
///     extensions = .java
///     interval_days = 90
///
///     [source]
///     id = jedit
///     kind = open-source-project
///     root = corpus/jedit
///     label = jEdit 3.0
///
/// Relative roots resolve against the directory holding the config file.
struct SourceConfig {
  std::vector<SourceDescriptor> sources;
  ExtensionSet extensions = default_extensions();
  int update_interval_days = kDefaultUpdateIntervalDays;
};

SourceConfig parse_source_config(std::istream& in, const std::filesystem::path& base_dir);

/// Throws SourceUnavailableError when the file is missing, ConfigError when malformed.
SourceConfig load_source_config(const std::filesystem::path& path);

}  // namespace esdp
