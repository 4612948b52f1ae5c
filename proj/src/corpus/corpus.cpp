// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 ESDP Contributors

#include "esdp/corpus/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>

#include "esdp/abstract/block_tree.hpp"
#include "esdp/abstract/records.hpp"
#include "esdp/abstract/tokenizer.hpp"
#include "esdp/common/digest.hpp"
#include "esdp/common/error.hpp"
#include "esdp/common/strings.hpp"

namespace fs = std::filesystem;

namespace esdp {

namespace {

constexpr std::pair<SourceKind, std::string_view> kKindNames[] = {
    {SourceKind::OpenSourceProject, "open-source-project"}, {SourceKind::CompanyProject, "company-project"},
    {SourceKind::StandardLibrary, "standard-library"},       {SourceKind::TrendingTerms, "trending-terms"},
    {SourceKind::AuthoredApi, "authored-api"},
};

bool is_records_file(const fs::path& root) {
  std::error_code ec;
  return root.extension() == ".jsonl" && fs::is_regular_file(root, ec);
}

}  // namespace

std::string_view to_string(SourceKind kind) {
  for (const auto& [k, name] : kKindNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::optional<SourceKind> parse_source_kind(std::string_view text) {
  for (const auto& [k, name] : kKindNames) {
    if (name == text) return k;
  }
  return std::nullopt;
}

std::string read_file_bytes(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("cannot read " + path.string());
  return bytes;
}

ScanResult scan_corpus(const SourceDescriptor& descriptor, const ExtensionSet& extensions) {
  std::error_code ec;
  if (!fs::exists(descriptor.root, ec)) {
    throw SourceUnavailableError("source '" + descriptor.id + "': root " + descriptor.root.string() +
                                 " does not exist");
  }
  ScanResult result;
  std::vector<std::pair<std::string, fs::path>> files;
  const auto matches = [&](const fs::path& p) { return extensions.count(p.extension().string()) > 0; };
  if (fs::is_regular_file(descriptor.root, ec)) {
    if (matches(descriptor.root)) files.emplace_back(descriptor.root.filename().generic_string(), descriptor.root);
  } else {
    fs::recursive_directory_iterator it(descriptor.root, fs::directory_options::skip_permission_denied, ec);
    if (ec) throw SourceUnavailableError("source '" + descriptor.id + "': " + ec.message());
    for (const fs::recursive_directory_iterator end; it != end; it.increment(ec)) {
      if (ec) {
        result.warnings.push_back("source '" + descriptor.id + "': " + ec.message());
        break;
      }
      std::error_code type_ec;
      if (!it->is_regular_file(type_ec) || !matches(it->path())) continue;
      files.emplace_back(fs::relative(it->path(), descriptor.root, type_ec).generic_string(), it->path());
    }
  }
  std::sort(files.begin(), files.end());
  for (const auto& [rel, full] : files) {
    std::string bytes;
    try {
      bytes = read_file_bytes(full);
    } catch (const IoError& e) {
      result.warnings.push_back(std::string("skipped: ") + e.what());
      continue;
    }
    SourceUnit unit;
    unit.path = rel;
    unit.source_id = descriptor.id;
    unit.size = bytes.size();
    unit.digest = sha256_hex(bytes);
    std::size_t replaced = 0;
    unit.text = sanitize_utf8(bytes, &replaced);
    if (replaced > 0) {
      result.warnings.push_back(rel + ": replaced " + std::to_string(replaced) + " invalid UTF-8 byte(s)");
    }
    unit.line_index = LineIndex(unit.text);
    unit.package = find_package_name(tokenize(unit.text));
    result.units.push_back(std::move(unit));
  }
  return result;
}

Corpus build_manifest(const std::vector<SourceDescriptor>& descriptors, Timestamp now,
                      const ExtensionSet& extensions, int update_interval_days) {
  if (descriptors.empty()) throw ConfigError("no sources declared");
  if (update_interval_days < 1) throw ConfigError("update interval must be positive");
  if (extensions.empty()) throw ConfigError("extension set is empty");
  std::set<std::string> ids;
  for (const auto& d : descriptors) {
    if (d.id.empty()) throw ConfigError("source id must be non-empty");
    if (!ids.insert(d.id).second) throw ConfigError("duplicate source id '" + d.id + "'");
  }

  Corpus corpus;
  corpus.manifest.sources = descriptors;
  corpus.manifest.built_at = now;
  corpus.manifest.update_interval_days = update_interval_days;
  corpus.manifest.digest_algorithm = std::string(kDigestAlgorithm);

  std::size_t unavailable = 0;
  for (const auto& d : descriptors) {
    try {
      if (d.kind == SourceKind::TrendingTerms) {
        corpus.terms.push_back(load_term_list(d.root, d.id));
        continue;
      }
      if (is_records_file(d.root)) {
        const std::string bytes = read_file_bytes(d.root);
        std::istringstream in(bytes);
        auto imported = import_records(in, d.id);
        const std::string digest = sha256_hex(bytes);
        for (const auto& path : imported.unit_paths) {
          corpus.manifest.units.push_back(UnitSummary{path, d.id, "", digest});
        }
        for (auto& tx : imported.transactions) corpus.imported.push_back(std::move(tx));
        continue;
      }
      auto scan = scan_corpus(d, extensions);
      for (auto& w : scan.warnings) corpus.warnings.push_back(std::move(w));
      for (auto& unit : scan.units) {
        unit.path = d.id + "/" + unit.path;
        corpus.manifest.units.push_back(UnitSummary{unit.path, unit.source_id, unit.package, unit.digest});
        corpus.units.push_back(std::move(unit));
      }
    } catch (const SourceUnavailableError& e) {
      ++unavailable;
      corpus.warnings.push_back(e.what());
    }
  }
  if (unavailable == descriptors.size()) throw EmptyCorpusError("all declared sources are unavailable");
  std::sort(corpus.manifest.units.begin(), corpus.manifest.units.end(),
            [](const UnitSummary& a, const UnitSummary& b) { return a.path < b.path; });
  std::sort(corpus.units.begin(), corpus.units.end(),
            [](const SourceUnit& a, const SourceUnit& b) { return a.path < b.path; });
  std::sort(corpus.manifest.sources.begin(), corpus.manifest.sources.end(),
            [](const SourceDescriptor& a, const SourceDescriptor& b) { return a.id < b.id; });
  std::sort(corpus.terms.begin(), corpus.terms.end(),
            [](const TermList& a, const TermList& b) { return a.source_id < b.source_id; });
  return corpus;
}

StalenessReport check_staleness(const Manifest& manifest, Timestamp now) {
  if (now < manifest.built_at) {
    throw ClockSkewError("current time " + format_iso8601(now) + " precedes repository build time " +
                         format_iso8601(manifest.built_at));
  }
  const auto age = std::chrono::floor<std::chrono::days>(now - manifest.built_at).count();
  return StalenessReport{age > manifest.update_interval_days, static_cast<long>(age)};
}

TermList load_term_list(const fs::path& path, const std::string& source_id) {
  std::error_code ec;
  if (!fs::is_regular_file(path, ec)) {
    throw SourceUnavailableError("term list " + path.string() + " does not exist");
  }
  const std::string text = sanitize_utf8(read_file_bytes(path));
  TermList list;
  list.source_id = source_id;
  std::set<std::string> seen;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::string term(trim(line));
    if (term.empty() || !seen.insert(term).second) continue;
    list.terms.push_back(std::move(term));
  }
  return list;
}

}  // namespace esdp
