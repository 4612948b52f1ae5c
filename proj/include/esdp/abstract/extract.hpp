// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 ESDP Contributors

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "esdp/abstract/block_tree.hpp"
#include "esdp/abstract/item.hpp"
#include "esdp/abstract/type_resolver.hpp"

namespace esdp {

enum class BlockKind { Class, Method };

std::string_view to_string(BlockKind kind);
std::optional<BlockKind> parse_block_kind(std::string_view text);

struct LineSpan {
  int start = 0;
  int end = 0;

  bool contains(int line) const noexcept { return line >= start && line <= end; }
  friend bool operator==(const LineSpan&, const LineSpan&) = default;
  friend auto operator<=>(const LineSpan&, const LineSpan&) = default;
};

/// An item together with where it came from: its column (for ordering) and
/// the block whose transaction it belongs to.
struct ExtractedItem {
  Item item;
  int col = 0;
  BlockKind block = BlockKind::Class;
  LineSpan span;
};

/// Method signatures of every type in the corpus, keyed by declaring type.
/// Built once, single-threaded, before extraction; read-only afterwards.
class DeclarationIndex {
 public:
  void add(const BlockTree& tree, const DefaultTypeTable& defaults);

  /// "name(T1,T2):R" of the first method of `qualified_type` named `name`
  /// with `arity` parameters.
  std::optional<std::string> find_in_type(const std::string& qualified_type, const std::string& name,
                                          int arity) const;

  /// Corpus-wide lookup; answers only when every declaration of name/arity
  /// renders to the same signature.
  std::optional<std::string> find_unique(const std::string& name, int arity) const;

 private:
  struct MethodSig {
    std::string name;
    int arity = 0;
    std::string rendered;
  };
  std::map<std::string, std::vector<MethodSig>> by_type_;
  std::map<std::pair<std::string, int>, std::vector<std::string>> by_name_;
};

/// "name(T1,T2):R" with resolved types. Constructors render without ":R".
std::string render_signature(const MethodDecl& method, const BlockTree& tree, const DefaultTypeTable& defaults);

/// One item per recognized fact. Class-level items carry the enclosing type
/// as entity; method-level items carry "pkg.Type.method()". Package and
/// import items attach to the first top-level type. Unsorted.
std::vector<ExtractedItem> extract_items(const BlockTree& tree, const SourceUnit& unit,
                                         const DeclarationIndex& index, const DefaultTypeTable& defaults);

}  // namespace esdp
