// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 ESDP Contributors

#include "esdp/abstract/type_resolver.hpp"

#include <array>

namespace esdp {

namespace {

constexpr std::string_view kJavaLang[] = {
    "AbstractMethodError", "Appendable", "ArithmeticException", "ArrayIndexOutOfBoundsException",
    "ArrayStoreException", "AssertionError", "AutoCloseable", "Boolean", "Byte", "CharSequence",
    "Character", "Class", "ClassCastException", "ClassLoader", "ClassNotFoundException", "CloneNotSupportedException",
    "Cloneable", "Comparable", "Deprecated", "Double", "Enum", "Error", "Exception", "Float",
    "FunctionalInterface", "IllegalAccessException", "IllegalArgumentException", "IllegalStateException",
    "IndexOutOfBoundsException", "InstantiationException", "Integer", "InterruptedException", "Iterable", "Long",
    "Math", "NegativeArraySizeException", "NoSuchFieldException", "NoSuchMethodException", "NullPointerException",
    "Number", "NumberFormatException", "Object", "OutOfMemoryError", "Override", "Process", "Readable",
    "Runnable", "Runtime", "RuntimeException", "SafeVarargs", "SecurityException", "Short", "StackOverflowError",
    "String", "StringBuffer", "StringBuilder", "SuppressWarnings", "System", "Thread", "Throwable"};

constexpr std::array<std::string_view, 9> kPrimitives = {"boolean", "byte",  "char",   "short", "int",
                                                          "long",    "float", "double", "void"};

}  // namespace

DefaultTypeTable DefaultTypeTable::java_lang() {
  DefaultTypeTable table;
  for (const auto name : kJavaLang) table.add(std::string(name), "java.lang." + std::string(name));
  table.add("UnsupportedOperationException", "java.lang.UnsupportedOperationException");
  table.add("Void", "java.lang.Void");
  return table;
}

void DefaultTypeTable::add(std::string simple_name, std::string qualified_name) {
  table_.insert_or_assign(std::move(simple_name), std::move(qualified_name));
}

const std::string* DefaultTypeTable::find(std::string_view simple_name) const {
  const auto it = table_.find(simple_name);
  return it == table_.end() ? nullptr : &it->second;
}

bool is_primitive_type(std::string_view name) {
  for (const auto p : kPrimitives) {
    if (p == name) return true;
  }
  return false;
}

TypeResolution resolve_type(std::string_view simple_name, const BlockTree& tree, const DefaultTypeTable& defaults) {
  std::string_view base = simple_name;
  std::string_view suffix;
  if (const auto pos = base.find_first_of("[."); pos != std::string_view::npos) {
    // "T[]" and "T..." keep their suffix; a '.' inside the name means it is
    // already qualified.
    const auto bracket = base.find('[');
    const auto dots = base.find("...");
    const auto cut = std::min(bracket, dots);
    if (cut != std::string_view::npos) {
      suffix = base.substr(cut);
      base = base.substr(0, cut);
    }
  }
  const auto with_suffix = [&](std::string_view name) { return std::string(name) + std::string(suffix); };
  if (base.empty()) return {std::string(simple_name), false};
  if (base.find('.') != std::string_view::npos || is_primitive_type(base)) return {with_suffix(base), true};
  const std::string key(base);
  if (const auto it = tree.import_table.find(key); it != tree.import_table.end()) return {with_suffix(it->second), true};
  if (const auto it = tree.declared_types.find(key); it != tree.declared_types.end()) {
    return {with_suffix(it->second), true};
  }
  if (const auto* qualified = defaults.find(base)) return {with_suffix(*qualified), true};
  return {with_suffix(base), false};
}

}  // namespace esdp
