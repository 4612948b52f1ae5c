// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 ESDP Contributors

#include "esdp/store/mined.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>

#include "esdp/common/error.hpp"
#include "esdp/store/central.hpp"
#include "esdp/store/xml.hpp"

namespace esdp {

namespace {

std::size_t to_size(long value) { return static_cast<std::size_t>(value); }

double parse_confidence(const std::string& text, long rank) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value, std::chars_format::fixed);
  if (ec != std::errc{} || ptr != end) throw CorruptRepositoryError("malformed confidence '" + text + "'", rank);
  return value;
}

SequencePattern read_pattern(const xml::Element& e, std::size_t position) {
  const long expected_rank = static_cast<long>(position) + 1;
  xml::AttributeReader attrs(e, {"k", "support", "confidence", "score", "rank"});
  xml::expect_only_children(e, {"item", "exemplar"});
  SequencePattern p;
  p.rank = to_size(attrs.required_long("rank", 1));
  p.k = to_size(attrs.required_long("k", 1));
  p.support = to_size(attrs.required_long("support", 1));
  p.score = static_cast<std::uint64_t>(attrs.required_long("score", 1));
  p.confidence = parse_confidence(attrs.required("confidence"), static_cast<long>(p.rank));
  if (static_cast<long>(p.rank) != expected_rank) {
    throw CorruptRepositoryError("ranks are not contiguous, expected " + std::to_string(expected_rank),
                                 static_cast<long>(p.rank));
  }
  for (const auto& child : e.children) {
    if (child.name == "item") {
      xml::AttributeReader item_attrs(child, {"kind", "name"});
      xml::expect_only_children(child, {});
      const auto kind = parse_item_kind(item_attrs.required("kind"));
      if (!kind) throw SchemaError("unknown item kind '" + item_attrs.required("kind") + "'");
      p.items.push_back(ItemKey{*kind, item_attrs.required("name")});
    } else {
      xml::AttributeReader ex_attrs(child, {"transaction"});
      xml::expect_only_children(child, {});
      p.exemplars.push_back(ex_attrs.required("transaction"));
    }
  }
  return p;
}

}  // namespace

std::string write_mined_xml(const std::vector<SequencePattern>& input, const MiningConfig& config,
                            const std::string& central_digest, std::size_t sequences) {
  std::vector<const SequencePattern*> ordered;
  ordered.reserve(input.size());
  for (const auto& p : input) ordered.push_back(&p);
  std::sort(ordered.begin(), ordered.end(),
            [](const SequencePattern* a, const SequencePattern* b) { return a->rank < b->rank; });
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    const auto& p = *ordered[i];
    if (p.rank != i + 1) throw InternalConsistencyError("rank gap before rank " + std::to_string(p.rank));
    if (p.k != p.items.size() || p.score != score_pattern(p.k, p.support)) {
      throw InternalConsistencyError("pattern rank " + std::to_string(p.rank) + " violates score = k x support");
    }
  }

  std::string out;
  out.reserve(256 + input.size() * 256);
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += fmt::format("<esdp-mined version=\"{}\" centralDigest=\"{}\" minSupport=\"{}\" maxK=\"{}\" sequences=\"{}\" "
                     "count=\"{}\">\n",
                     kSchemaVersion, xml::escape_attribute(central_digest), config.min_support, config.max_k,
                     sequences, ordered.size());
  for (const auto* p : ordered) {
    out += fmt::format("  <pattern k=\"{}\" support=\"{}\" confidence=\"{:.6f}\" score=\"{}\" rank=\"{}\">\n", p->k,
                       p->support, p->confidence, p->score, p->rank);
    for (const auto& item : p->items) {
      out += fmt::format("    <item kind=\"{}\" name=\"{}\"/>\n", code(item.kind), xml::escape_attribute(item.name));
    }
    for (const auto& ex : p->exemplars) {
      out += fmt::format("    <exemplar transaction=\"{}\"/>\n", xml::escape_attribute(ex));
    }
    out += "  </pattern>\n";
  }
  out += "</esdp-mined>\n";
  return out;
}

MinedRepository::MinedRepository(std::vector<SequencePattern> patterns, MinedProvenance provenance)
    : patterns_(std::move(patterns)), provenance_(std::move(provenance)) {
  for (std::size_t i = 0; i < patterns_.size(); ++i) {
    const auto& p = patterns_[i];
    const long rank = static_cast<long>(p.rank);
    if (p.rank != i + 1) throw CorruptRepositoryError("ranks are not contiguous", rank);
    if (p.k != p.items.size()) throw CorruptRepositoryError("k does not match the item count", rank);
    if (p.score != score_pattern(p.k, p.support)) throw CorruptRepositoryError("score is not k x support", rank);
    if (provenance_.sequences != 0 && p.support > provenance_.sequences) {
      throw CorruptRepositoryError("support exceeds the sequence count", rank);
    }
    if (!(p.confidence > 0.0) || p.confidence > 1.0) throw CorruptRepositoryError("confidence out of range", rank);
    for (std::size_t j = 0; j < p.items.size(); ++j) {
      auto& list = by_item_[p.items[j].name];
      if (list.empty() || list.back() != i) list.push_back(i);
    }
    if (!p.items.empty()) by_first_[p.items.front().name].push_back(i);
  }
}

std::span<const std::size_t> MinedRepository::with_item(std::string_view name) const {
  const auto it = by_item_.find(name);
  if (it == by_item_.end()) return {};
  return it->second;
}

std::span<const std::size_t> MinedRepository::starting_with(std::string_view name) const {
  const auto it = by_first_.find(name);
  if (it == by_first_.end()) return {};
  return it->second;
}

MinedRepository read_mined_xml(std::string_view bytes) {
  const xml::Element root = xml::parse_document(bytes);
  if (root.name != "esdp-mined") throw SchemaError("root element is <" + root.name + ">, not <esdp-mined>");
  const std::string* version = root.attribute("version");
  if (version == nullptr) throw SchemaVersionError("missing schema version");
  if (*version != kSchemaVersion) throw SchemaVersionError("unsupported schema version '" + *version + "'");
  xml::AttributeReader attrs(root, {"version", "centralDigest", "minSupport", "maxK", "sequences", "count"});
  xml::expect_only_children(root, {"pattern"});

  MinedProvenance provenance;
  provenance.central_digest = attrs.required("centralDigest");
  provenance.min_support = to_size(attrs.required_long("minSupport", 1));
  provenance.max_k = to_size(attrs.required_long("maxK", 1));
  provenance.sequences = to_size(attrs.required_long("sequences", 0));
  const auto count = to_size(attrs.required_long("count", 0));
  if (count != root.children.size()) {
    throw SchemaError("count=\"" + std::to_string(count) + "\" but document holds " +
                      std::to_string(root.children.size()) + " patterns");
  }

  std::vector<SequencePattern> patterns;
  patterns.reserve(root.children.size());
  for (std::size_t i = 0; i < root.children.size(); ++i) patterns.push_back(read_pattern(root.children[i], i));
  return MinedRepository(std::move(patterns), std::move(provenance));
}

}  // namespace esdp
