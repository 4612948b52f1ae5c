// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 ESDP Contributors

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "esdp/abstract/item.hpp"
#include "esdp/abstract/tokenizer.hpp"
#include "esdp/common/source_unit.hpp"

namespace esdp {

struct SourcePos {
  int line = 0;
  int col = 0;

  friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

/// A type as written, with generic arguments and annotations removed.
struct TypeRef {
  std::string name;
  SourcePos pos;
};

/// A statement-level fact recovered from a method body. Names are raw; they
/// are resolved against the file's imports during item extraction.
struct BodyFact {
  ItemKind kind = ItemKind::MI;
  std::string name;
  SourcePos pos;
  int arity = -1;         // MI only
  std::string qualifier;  // FA only: type head to resolve, prefixed to `name`
};

struct MethodDecl {
  std::string name;
  bool is_constructor = false;
  std::string return_type;
  std::vector<TypeRef> params;
  SourcePos pos;
  int start_line = 0;
  int end_line = 0;
  bool has_body = false;
  std::vector<BodyFact> facts;
};

struct FieldDecl {
  TypeRef type;
  std::string name;
};

enum class TypeDeclKind { Class, Interface, Enum, Record, Annotation };

struct TypeDecl {
  TypeDeclKind kind = TypeDeclKind::Class;
  std::string name;
  std::string qualified_name;
  SourcePos pos;
  int start_line = 0;
  int end_line = 0;
  std::vector<TypeRef> extends;
  std::vector<TypeRef> implements;
  std::vector<FieldDecl> fields;
  std::vector<MethodDecl> methods;
  std::vector<TypeDecl> nested;
};

struct ImportDecl {
  std::string name;
  bool is_static = false;
  bool wildcard = false;
  SourcePos pos;
};

/// Structure recovered from one source file.
struct BlockTree {
  std::string package;
  std::optional<SourcePos> package_pos;
  std::vector<ImportDecl> imports;
  /// simple name -> qualified name, from single-type imports
  std::map<std::string, std::string> import_table;
  /// simple name -> qualified name, for every type declared in this file
  std::map<std::string, std::string> declared_types;
  std::vector<TypeDecl> types;
  /// Set when braces did not balance or a literal/comment was unterminated.
  bool degraded = false;
  std::vector<std::string> warnings;
};

/// Recovers package, imports, type declarations, members, and statement-level
/// facts. Never throws; malformed input yields a partial tree flagged degraded.
BlockTree parse_structure(const std::vector<Token>& tokens, const SourceUnit& unit);

/// Convenience: tokenize `unit.text` and parse it, folding lexer warnings
/// into the tree.
BlockTree parse_unit(const SourceUnit& unit);

/// Package named by the file's package declaration, or empty.
std::string find_package_name(const std::vector<Token>& tokens);

/// Visits every type declaration depth-first, outer before nested.
template <typename Fn>
void for_each_type(const std::vector<TypeDecl>& types, Fn&& fn) {
  for (const auto& t : types) {
    fn(t);
    for_each_type(t.nested, fn);
  }
}

}  // namespace esdp
