// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 ESDP Contributors

#include "esdp/store/central.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <fstream>
#include <set>
#include <system_error>

#include "esdp/common/error.hpp"
#include "esdp/store/xml.hpp"

namespace esdp {

namespace {

using xml::escape_attribute;

bool transaction_less(const Transaction& a, const Transaction& b) {
  if (a.unit_path != b.unit_path) return a.unit_path < b.unit_path;
  if (a.span != b.span) return a.span < b.span;
  return a.id < b.id;
}

int to_int(long value, const xml::Element& element) {
  if (value > 2147483647L) throw SchemaError("integer out of range on <" + element.name + ">");
  return static_cast<int>(value);
}

SourceDescriptor read_source(const xml::Element& e) {
  xml::AttributeReader attrs(e, {"id", "kind", "root", "label"});
  xml::expect_only_children(e, {});
  SourceDescriptor d;
  d.id = attrs.required("id");
  const auto kind = parse_source_kind(attrs.required("kind"));
  if (!kind) throw SchemaError("unknown source kind '" + attrs.required("kind") + "'");
  d.kind = *kind;
  d.root = attrs.required("root");
  d.label = attrs.required("label");
  return d;
}

Transaction read_transaction(const xml::Element& e, const std::string& unit_path) {
  xml::AttributeReader attrs(e, {"id", "entity", "block", "start", "end"});
  xml::expect_only_children(e, {"item"});
  Transaction tx;
  tx.id = attrs.required("id");
  tx.entity = attrs.required("entity");
  const auto block = parse_block_kind(attrs.required("block"));
  if (!block) throw SchemaError("unknown block kind '" + attrs.required("block") + "'");
  tx.block = *block;
  tx.span.start = to_int(attrs.required_long("start", 1), e);
  tx.span.end = to_int(attrs.required_long("end", tx.span.start), e);
  tx.unit_path = unit_path;
  for (const auto& child : e.children) {
    xml::AttributeReader item_attrs(child, {"kind", "name", "line"});
    xml::expect_only_children(child, {});
    const auto kind = parse_item_kind(item_attrs.required("kind"));
    if (!kind) throw SchemaError("unknown item kind '" + item_attrs.required("kind") + "'");
    Item item;
    item.kind = *kind;
    item.name = item_attrs.required("name");
    item.entity = tx.entity;
    item.line = to_int(item_attrs.required_long("line", 1), child);
    tx.items.push_back(std::move(item));
  }
  return tx;
}

}  // namespace

void canonicalize(CentralRepository& repo) {
  auto& m = repo.manifest;
  std::sort(m.sources.begin(), m.sources.end(),
            [](const SourceDescriptor& a, const SourceDescriptor& b) { return a.id < b.id; });
  std::sort(m.units.begin(), m.units.end(), [](const UnitSummary& a, const UnitSummary& b) { return a.path < b.path; });
  std::sort(repo.transactions.begin(), repo.transactions.end(), transaction_less);
  std::sort(repo.terms.begin(), repo.terms.end(),
            [](const TermList& a, const TermList& b) { return a.source_id < b.source_id; });
}

std::string write_central_xml(const CentralRepository& input) {
  CentralRepository repo = input;
  canonicalize(repo);
  std::set<std::string_view> unit_paths;
  for (const auto& u : repo.manifest.units) unit_paths.insert(u.path);
  for (const auto& tx : repo.transactions) {
    if (!unit_paths.contains(tx.unit_path)) {
      throw InternalConsistencyError("transaction " + tx.id + " names unknown unit " + tx.unit_path);
    }
  }

  std::string out;
  out.reserve(256 + repo.transactions.size() * 256);
  const auto& m = repo.manifest;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += fmt::format("<esdp-repository version=\"{}\" built=\"{}\" digestAlgo=\"{}\" intervalDays=\"{}\">\n",
                     kSchemaVersion, format_iso8601(m.built_at), escape_attribute(m.digest_algorithm),
                     m.update_interval_days);
  for (const auto& s : m.sources) {
    out += fmt::format("  <source id=\"{}\" kind=\"{}\" root=\"{}\" label=\"{}\"/>\n", escape_attribute(s.id),
                       to_string(s.kind), escape_attribute(s.root.generic_string()), escape_attribute(s.label));
  }
  auto tx = repo.transactions.begin();
  for (const auto& u : m.units) {
    out += fmt::format("  <unit path=\"{}\" source=\"{}\" package=\"{}\" digest=\"{}\">\n", escape_attribute(u.path),
                       escape_attribute(u.source_id), escape_attribute(u.package), escape_attribute(u.digest));
    for (; tx != repo.transactions.end() && tx->unit_path == u.path; ++tx) {
      out += fmt::format("    <transaction id=\"{}\" entity=\"{}\" block=\"{}\" start=\"{}\" end=\"{}\">\n",
                         escape_attribute(tx->id), escape_attribute(tx->entity), to_string(tx->block),
                         tx->span.start, tx->span.end);
      for (const auto& item : tx->items) {
        out += fmt::format("      <item kind=\"{}\" name=\"{}\" line=\"{}\"/>\n", code(item.kind),
                           escape_attribute(item.name), item.line);
      }
      out += "    </transaction>\n";
    }
    out += "  </unit>\n";
  }
  for (const auto& list : repo.terms) {
    out += fmt::format("  <terms source=\"{}\">", escape_attribute(list.source_id));
    for (const auto& term : list.terms) out += fmt::format("<term>{}</term>", xml::escape_text(term));
    out += "</terms>\n";
  }
  out += "</esdp-repository>\n";
  return out;
}

CentralRepository read_central_xml(std::string_view bytes) {
  const xml::Element root = xml::parse_document(bytes);
  if (root.name != "esdp-repository") throw SchemaError("root element is <" + root.name + ">, not <esdp-repository>");
  const std::string* version = root.attribute("version");
  if (version == nullptr) throw SchemaVersionError("missing schema version");
  if (*version != kSchemaVersion) throw SchemaVersionError("unsupported schema version '" + *version + "'");
  xml::AttributeReader attrs(root, {"version", "built", "digestAlgo", "intervalDays"});
  xml::expect_only_children(root, {"source", "unit", "terms"});

  CentralRepository repo;
  auto& m = repo.manifest;
  try {
    m.built_at = parse_iso8601(attrs.required("built"));
  } catch (const SchemaError&) {
    throw;
  } catch (const Error& e) {
    throw SchemaError(std::string("bad built timestamp: ") + e.what());
  }
  m.digest_algorithm = attrs.required("digestAlgo");
  m.update_interval_days = to_int(attrs.required_long("intervalDays", 1), root);

  for (const auto& child : root.children) {
    if (child.name == "source") {
      m.sources.push_back(read_source(child));
    } else if (child.name == "unit") {
      xml::AttributeReader unit_attrs(child, {"path", "source", "package", "digest"});
      xml::expect_only_children(child, {"transaction"});
      UnitSummary u;
      u.path = unit_attrs.required("path");
      u.source_id = unit_attrs.required("source");
      u.package = unit_attrs.required("package");
      u.digest = unit_attrs.required("digest");
      for (const auto& tx : child.children) repo.transactions.push_back(read_transaction(tx, u.path));
      m.units.push_back(std::move(u));
    } else {
      xml::AttributeReader term_attrs(child, {"source"});
      xml::expect_only_children(child, {"term"});
      TermList list;
      list.source_id = term_attrs.required("source");
      for (const auto& term : child.children) {
        xml::AttributeReader none(term, {});
        if (!term.children.empty()) throw SchemaError("<term> must contain text only");
        list.terms.push_back(term.text);
      }
      repo.terms.push_back(std::move(list));
    }
  }
  return repo;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view bytes) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + tmp.string() + " for writing");
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) throw IoError("write to " + tmp.string() + " failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot replace " + path.string());
  }
}

}  // namespace esdp
