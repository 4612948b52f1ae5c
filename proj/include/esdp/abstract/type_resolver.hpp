// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 ESDP Contributors

#pragma once

#include <map>
#include <string>
#include <string_view>

#include "esdp/abstract/block_tree.hpp"

namespace esdp {

/// Simple names that resolve without an import, e.g. String -> java.lang.String.
class DefaultTypeTable {
 public:
  DefaultTypeTable() = default;

  /// The common java.lang simple names.
  static DefaultTypeTable java_lang();

  void add(std::string simple_name, std::string qualified_name);
  const std::string* find(std::string_view simple_name) const;
  std::size_t size() const noexcept { return table_.size(); }

 private:
  std::map<std::string, std::string, std::less<>> table_;
};

struct TypeResolution {
  std::string name;
  bool resolved = true;

  friend bool operator==(const TypeResolution&, const TypeResolution&) = default;
};

/// Resolution order: already qualified, import table, type declared in the
/// same file, default table. Anything else comes back unchanged with
/// `resolved == false`. Array and varargs suffixes are kept.
TypeResolution resolve_type(std::string_view simple_name, const BlockTree& tree, const DefaultTypeTable& defaults);

bool is_primitive_type(std::string_view name);

}  // namespace esdp
