// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 ESDP Contributors

#include "esdp/corpus/source_config.hpp"

#include <fstream>

#include "esdp/common/error.hpp"
#include "esdp/common/strings.hpp"

namespace fs = std::filesystem;

namespace esdp {

namespace {

struct PendingSource {
  SourceDescriptor descriptor;
  bool has_id = false;
  bool has_kind = false;
  bool has_root = false;
  std::size_t line = 0;
};

void finish(PendingSource& pending, SourceConfig& config) {
  const std::string where = "[source] at line " + std::to_string(pending.line);
  if (!pending.has_id) throw ConfigError(where + " is missing 'id'");
  if (!pending.has_kind) throw ConfigError(where + " is missing 'kind'");
  if (!pending.has_root) throw ConfigError(where + " is missing 'root'");
  config.sources.push_back(std::move(pending.descriptor));
}

}  // namespace

SourceConfig parse_source_config(std::istream& in, const fs::path& base_dir) {
  SourceConfig config;
  std::optional<PendingSource> pending;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#' || line.front() == ';') continue;
    if (line.front() == '[') {
      if (line != "[source]") throw ConfigError("line " + std::to_string(line_no) + ": unknown section " + std::string(line));
      if (pending) finish(*pending, config);
      pending = PendingSource{};
      pending->line = line_no;
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (!pending) {
      if (key == "extensions") {
        config.extensions.clear();
        for (const auto& part : split(value, ',')) {
          std::string ext(trim(part));
          if (ext.empty()) continue;
          if (ext.front() != '.') ext.insert(ext.begin(), '.');
          config.extensions.insert(std::move(ext));
        }
        if (config.extensions.empty()) throw ConfigError(where + "extension list is empty");
      } else if (key == "interval_days") {
        const auto days = parse_long(value);
        if (!days || *days < 1 || *days > 100000) throw ConfigError(where + "interval_days must be a positive integer");
        config.update_interval_days = static_cast<int>(*days);
      } else {
        throw ConfigError(where + "unknown setting '" + key + "'");
      }
      continue;
    }
    if (key == "id") {
      if (value.empty()) throw ConfigError(where + "empty source id");
      pending->descriptor.id = value;
      pending->has_id = true;
    } else if (key == "kind") {
      const auto kind = parse_source_kind(value);
      if (!kind) throw ConfigError(where + "unknown source kind '" + value + "'");
      pending->descriptor.kind = *kind;
      pending->has_kind = true;
    } else if (key == "root") {
      if (value.empty()) throw ConfigError(where + "empty root");
      fs::path root(value);
      pending->descriptor.root = root.is_absolute() ? root : (base_dir / root).lexically_normal();
      pending->has_root = true;
    } else if (key == "label") {
      pending->descriptor.label = value;
    } else {
      throw ConfigError(where + "unknown source key '" + key + "'");
    }
  }
  if (pending) finish(*pending, config);
  return config;
}

SourceConfig load_source_config(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw SourceUnavailableError("cannot open config file " + path.string());
  return parse_source_config(in, std::filesystem::absolute(path).parent_path());
}

}  // namespace esdp
