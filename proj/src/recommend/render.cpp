// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 ESDP Contributors

#include "esdp/recommend/render.hpp"

#include <fmt/format.h>

#include <algorithm>

#include "esdp/store/xml.hpp"

namespace esdp {

std::string render_text(const Recommendation& rec, const MinedRepository& repo) {
  std::string out;
  for (const auto& entry : rec.entries) {
    const auto& p = repo.patterns()[entry.pattern_index];
    out += fmt::format("{}\t{}\t{}\t{:.6f}\t{}\n", p.rank, p.score, p.support, p.confidence, render_pattern(p));
  }
  return out;
}

std::string render_skeleton(const CodeSkeleton& skeleton) {
  std::string out;
  for (const auto& line : skeleton.header) out += line + "\n";
  if (skeleton.synthetic) {
    for (const auto& line : skeleton.lines) out += "      " + line + "\n";
    return out;
  }
  for (std::size_t i = 0; i < skeleton.lines.size(); ++i) {
    const int number = skeleton.span.start + static_cast<int>(i);
    const bool marked = std::binary_search(skeleton.highlights.begin(), skeleton.highlights.end(), number);
    out += fmt::format("{}{:>5} {}\n", marked ? '>' : ' ', number, skeleton.lines[i]);
  }
  return out;
}

std::string render_xml(const Recommendation& rec, const MinedRepository& repo,
                       const std::optional<CodeSkeleton>& skeleton) {
  using xml::escape_attribute;
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += fmt::format("<recommendation query=\"{}\" count=\"{}\" elapsedMs=\"{:.3f}\">\n",
                     escape_attribute(rec.query.raw), rec.entries.size(), rec.elapsed_ms);
  for (std::size_t i = 0; i < rec.entries.size(); ++i) {
    const auto& entry = rec.entries[i];
    const auto& p = repo.patterns()[entry.pattern_index];
    out += fmt::format("  <pattern k=\"{}\" support=\"{}\" confidence=\"{:.6f}\" score=\"{}\" rank=\"{}\" match=\"{}\">\n",
                       p.k, p.support, p.confidence, p.score, p.rank, entry.match_strength);
    for (const auto& item : p.items) {
      out += fmt::format("    <item kind=\"{}\" name=\"{}\"/>\n", code(item.kind), escape_attribute(item.name));
    }
    for (const auto& ex : p.exemplars) {
      out += fmt::format("    <exemplar transaction=\"{}\"/>\n", escape_attribute(ex));
    }
    if (i == 0 && skeleton) {
      const auto& sk = *skeleton;
      out += fmt::format("    <skeleton unit=\"{}\" entity=\"{}\" start=\"{}\" end=\"{}\" synthetic=\"{}\">\n",
                         escape_attribute(sk.unit_path), escape_attribute(sk.entity), sk.span.start, sk.span.end,
                         sk.synthetic ? "true" : "false");
      for (std::size_t j = 0; j < sk.lines.size(); ++j) {
        const int number = sk.synthetic ? static_cast<int>(j) + 1 : sk.span.start + static_cast<int>(j);
        const bool marked =
            !sk.synthetic && std::binary_search(sk.highlights.begin(), sk.highlights.end(), number);
        out += fmt::format("      <line n=\"{}\" highlight=\"{}\">{}</line>\n", number, marked ? "true" : "false",
                           xml::escape_text(sk.lines[j]));
      }
      out += "    </skeleton>\n";
    }
    out += "  </pattern>\n";
  }
  out += "</recommendation>\n";
  return out;
}

}  // namespace esdp
