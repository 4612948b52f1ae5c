// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 ESDP Contributors

#include <algorithm>
#include <array>
#include <limits>

#include "esdp/abstract/block_tree.hpp"

namespace esdp {

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

const Token kEnd{TokenKind::Punctuation, "", 0, 0, 0};

constexpr std::array<std::string_view, 12> kModifierKeywords = {
    "public", "protected", "private",  "static",   "final",    "abstract",
    "native", "synchronized", "transient", "volatile", "strictfp", "default"};

constexpr std::array<std::string_view, 9> kPrimitiveTypes = {"boolean", "byte",  "char",   "short", "int",
                                                              "long",    "float", "double", "void"};

constexpr std::array<std::string_view, 6> kControlKeywords = {"if",    "while",        "for",
                                                               "switch", "synchronized", "catch"};

template <std::size_t N>
bool contains(const std::array<std::string_view, N>& set, std::string_view word) {
  return std::find(set.begin(), set.end(), word) != set.end();
}

bool is_primitive(const Token& t) { return t.kind == TokenKind::Keyword && contains(kPrimitiveTypes, t.text); }

bool is_uppercase_initial(std::string_view s) { return !s.empty() && s.front() >= 'A' && s.front() <= 'Z'; }

bool is_lowercase_initial(std::string_view s) { return !s.empty() && s.front() >= 'a' && s.front() <= 'z'; }

std::string join_segments(const std::vector<std::string_view>& segs, std::size_t from, std::size_t to) {
  std::string out;
  for (std::size_t i = from; i < to; ++i) {
    if (i > from) out.push_back('.');
    out.append(segs[i]);
  }
  return out;
}

struct ParsedType {
  std::string name;
  std::size_t begin = 0;  // first token of the type proper, after annotations
  std::size_t next = 0;   // token after the type
};

class StructureParser {
 public:
  explicit StructureParser(const std::vector<Token>& tokens) {
    for (const auto& tok : tokens) {
      if (tok.significant()) t_.push_back(tok);
    }
    last_line_ = t_.empty() ? 1 : t_.back().line;
    match_brackets();
  }

  BlockTree run() {
    std::size_t i = 0;
    std::size_t decl_start = kNone;
    while (i < size()) {
      const Token& tok = at(i);
      if (decl_start == kNone) decl_start = i;
      if (is_annotation_start(i)) {
        i = skip_annotation(i);
        continue;
      }
      if (tok.is_keyword("package")) {
        i = parse_package(i);
        decl_start = kNone;
        continue;
      }
      if (tok.is_keyword("import")) {
        i = parse_import(i);
        decl_start = kNone;
        continue;
      }
      if (const auto after = skip_modifier(i); after != i) {
        i = after;
        continue;
      }
      if (is_type_decl_start(i)) {
        i = parse_type_decl(i, decl_start, "", tree_.types);
        decl_start = kNone;
        continue;
      }
      if (tok.is_punct('}')) degrade("unexpected '}' at line " + std::to_string(tok.line));
      ++i;
      decl_start = kNone;
    }
    return std::move(tree_);
  }

 private:
  std::size_t size() const noexcept { return t_.size(); }

  const Token& at(std::size_t i) const noexcept { return i < t_.size() ? t_[i] : kEnd; }

  static SourcePos pos(const Token& t) { return SourcePos{t.line, t.col}; }

  void degrade(std::string warning) {
    tree_.degraded = true;
    if (tree_.warnings.size() < 32) tree_.warnings.push_back(std::move(warning));
  }

  // Pairs (), [] and {}. A '}' closes the nearest open '{', abandoning any
  // unclosed parens in between; ')' and ']' never search past a '{'.
  void match_brackets() {
    match_.assign(t_.size(), kNone);
    std::vector<std::size_t> stack;
    for (std::size_t i = 0; i < t_.size(); ++i) {
      const Token& tok = t_[i];
      if (tok.kind != TokenKind::Punctuation || tok.text.size() != 1) continue;
      const char c = tok.text[0];
      if (c == '(' || c == '[' || c == '{') {
        stack.push_back(i);
        continue;
      }
      if (c != ')' && c != ']' && c != '}') continue;
      const char open = c == ')' ? '(' : (c == ']' ? '[' : '{');
      std::size_t k = stack.size();
      while (k > 0) {
        const char top = t_[stack[k - 1]].text[0];
        if (top == open) break;
        if (top == '{' && c != '}') {
          k = 0;
          break;
        }
        --k;
      }
      if (k == 0) {
        degrade("unbalanced '" + std::string(1, c) + "' at line " + std::to_string(tok.line));
        continue;
      }
      if (k != stack.size()) degrade("unclosed bracket before line " + std::to_string(tok.line));
      match_[stack[k - 1]] = i;
      match_[i] = stack[k - 1];
      stack.resize(k - 1);
    }
    if (!stack.empty()) {
      degrade("unclosed '" + std::string(t_[stack.back()].text) + "' opened at line " +
              std::to_string(t_[stack.back()].line));
    }
  }

  // Index just past the group opened at i; end of input when unmatched.
  std::size_t skip_group(std::size_t i) const {
    const std::size_t close = i < match_.size() ? match_[i] : kNone;
    return close == kNone || close < i ? size() : close + 1;
  }

  std::size_t close_of(std::size_t i) const {
    const std::size_t close = i < match_.size() ? match_[i] : kNone;
    return close == kNone || close < i ? kNone : close;
  }

  bool is_annotation_start(std::size_t i) const {
    return at(i).is_punct('@') && at(i + 1).kind == TokenKind::Identifier;
  }

  std::size_t skip_annotation(std::size_t i) const {
    std::size_t j = i + 2;
    while (at(j).is_punct('.') && at(j + 1).kind == TokenKind::Identifier) j += 2;
    if (at(j).is_punct('(')) j = skip_group(j);
    return j;
  }

  std::size_t skip_annotations(std::size_t i) const {
    while (is_annotation_start(i)) i = skip_annotation(i);
    return i;
  }

  // Returns i unchanged when the token is not a modifier.
  std::size_t skip_modifier(std::size_t i) const {
    const Token& tok = at(i);
    if (tok.kind == TokenKind::Keyword && contains(kModifierKeywords, tok.text)) {
      if (tok.text == "default" && at(i + 1).is_punct(':')) return i;
      // synchronized blocks and default labels are not modifiers
      if (tok.text == "synchronized" && at(i + 1).is_punct('(')) return i;
      return i + 1;
    }
    if (tok.kind == TokenKind::Identifier) {
      if (tok.text == "sealed" && at(i + 1).kind != TokenKind::Punctuation) return i + 1;
      if (tok.text == "non" && at(i + 1).is_punct('-') && at(i + 2).is("sealed")) return i + 3;
    }
    return i;
  }

  std::size_t skip_modifiers_and_annotations(std::size_t i, std::size_t end) const {
    while (i < end) {
      if (is_annotation_start(i)) {
        i = skip_annotation(i);
        continue;
      }
      const auto after = skip_modifier(i);
      if (after == i) break;
      i = after;
    }
    return i;
  }

  bool is_type_decl_start(std::size_t i) const {
    const Token& tok = at(i);
    if (tok.is_keyword("class") || tok.is_keyword("interface") || tok.is_keyword("enum")) {
      return !at(i - 1).is_punct('.') || i == 0;
    }
    if (tok.is_punct('@') && at(i + 1).is_keyword("interface")) return true;
    return tok.kind == TokenKind::Identifier && tok.text == "record" && at(i + 1).kind == TokenKind::Identifier &&
           (at(i + 2).is_punct('(') || at(i + 2).is_punct('<'));
  }

  // Dotted identifier chain starting at i; optionally accepts a trailing ".*".
  std::pair<std::string, std::size_t> qualified_name(std::size_t i, bool allow_star) const {
    std::string name;
    if (at(i).kind != TokenKind::Identifier) return {name, i};
    name.append(at(i).text);
    ++i;
    while (at(i).is_punct('.')) {
      if (at(i + 1).kind == TokenKind::Identifier) {
        name.push_back('.');
        name.append(at(i + 1).text);
        i += 2;
      } else if (allow_star && at(i + 1).is_punct('*')) {
        name.append(".*");
        i += 2;
        break;
      } else {
        break;
      }
    }
    return {name, i};
  }

  std::size_t skip_past_semicolon(std::size_t i) const {
    while (i < size() && !at(i).is_punct(';')) {
      if (at(i).is_punct('{') || at(i).is_punct('}')) return i;
      ++i;
    }
    return i < size() ? i + 1 : i;
  }

  std::size_t parse_package(std::size_t i) {
    auto [name, next] = qualified_name(i + 1, false);
    if (!name.empty() && tree_.package.empty() && !tree_.package_pos) {
      tree_.package = name;
      tree_.package_pos = pos(at(i));
    }
    return std::max(skip_past_semicolon(next), i + 1);
  }

  std::size_t parse_import(std::size_t i) {
    std::size_t j = i + 1;
    ImportDecl imp;
    imp.pos = pos(at(i));
    if (at(j).is_keyword("static")) {
      imp.is_static = true;
      ++j;
    }
    auto [name, next] = qualified_name(j, true);
    if (!name.empty()) {
      imp.wildcard = name.size() > 2 && name.compare(name.size() - 2, 2, ".*") == 0;
      imp.name = name;
      if (!imp.is_static && !imp.wildcard) {
        const auto dot = name.rfind('.');
        const std::string simple = dot == std::string::npos ? name : name.substr(dot + 1);
        tree_.import_table.emplace(simple, name);
      }
      tree_.imports.push_back(std::move(imp));
    }
    return std::max(skip_past_semicolon(next), i + 1);
  }

  // Skips a balanced <...> run that looks like type arguments; kNone when
  // the run contains tokens that cannot appear in a type.
  std::size_t skip_angles(std::size_t i) const {
    int depth = 0;
    for (std::size_t j = i; j < size(); ++j) {
      const Token& tok = at(j);
      if (tok.is_punct('<')) {
        ++depth;
      } else if (tok.is_punct('>')) {
        if (--depth == 0) return j + 1;
      } else if (tok.kind == TokenKind::Identifier || is_primitive(tok) || tok.is_keyword("extends") ||
                 tok.is_keyword("super") || tok.is_punct('.') || tok.is_punct(',') || tok.is_punct('?') ||
                 tok.is_punct('[') || tok.is_punct(']') || tok.is_punct('&') || tok.is_punct('@')) {
        continue;
      } else {
        return kNone;
      }
    }
    return kNone;
  }

  std::optional<ParsedType> parse_type(std::size_t i, bool allow_varargs) const {
    ParsedType out;
    std::size_t j = skip_annotations(i);
    out.begin = j;
    const Token& head = at(j);
    if (is_primitive(head)) {
      out.name = std::string(head.text);
      ++j;
    } else if (head.kind == TokenKind::Identifier) {
      out.name = std::string(head.text);
      ++j;
      while (true) {
        if (at(j).is_punct('<')) {
          const auto after = skip_angles(j);
          if (after == kNone) return std::nullopt;
          j = after;
        } else if (at(j).is_punct('.') && at(j + 1).kind == TokenKind::Identifier) {
          out.name.push_back('.');
          out.name.append(at(j + 1).text);
          j += 2;
        } else {
          break;
        }
      }
    } else {
      return std::nullopt;
    }
    while (true) {
      const std::size_t k = skip_annotations(j);
      if (at(k).is_punct('[') && at(k + 1).is_punct(']')) {
        out.name.append("[]");
        j = k + 2;
      } else {
        break;
      }
    }
    if (allow_varargs && at(j).is_punct('.') && at(j + 1).is_punct('.') && at(j + 2).is_punct('.')) {
      out.name.append("...");
      j += 3;
    }
    out.next = j;
    return out;
  }

  std::size_t parse_type_list(std::size_t i, std::vector<TypeRef>* out) const {
    while (true) {
      const auto ty = parse_type(i, false);
      if (!ty) return i;
      if (out != nullptr) out->push_back(TypeRef{ty->name, pos(at(ty->begin))});
      i = ty->next;
      if (!at(i).is_punct(',')) return i;
      ++i;
    }
  }

  std::string qualify(const std::string& outer, std::string_view name) const {
    if (!outer.empty()) return outer + "." + std::string(name);
    if (tree_.package.empty()) return std::string(name);
    return tree_.package + "." + std::string(name);
  }

  std::size_t parse_type_decl(std::size_t i, std::size_t decl_start, const std::string& outer,
                              std::vector<TypeDecl>& out) {
    const std::size_t start = i;
    TypeDecl d;
    if (at(i).is_keyword("class")) {
      d.kind = TypeDeclKind::Class;
      ++i;
    } else if (at(i).is_keyword("interface")) {
      d.kind = TypeDeclKind::Interface;
      ++i;
    } else if (at(i).is_keyword("enum")) {
      d.kind = TypeDeclKind::Enum;
      ++i;
    } else if (at(i).is_punct('@')) {
      d.kind = TypeDeclKind::Annotation;
      i += 2;
    } else {
      d.kind = TypeDeclKind::Record;
      ++i;
    }
    if (at(i).kind != TokenKind::Identifier) {
      degrade("type declaration without a name at line " + std::to_string(at(start).line));
      return std::max(i, start + 1);
    }
    d.name = std::string(at(i).text);
    d.pos = pos(at(i));
    d.qualified_name = qualify(outer, d.name);
    tree_.declared_types.emplace(d.name, d.qualified_name);
    ++i;
    if (at(i).is_punct('<')) {
      const auto after = skip_angles(i);
      i = after == kNone ? i + 1 : after;
    }
    if (d.kind == TypeDeclKind::Record && at(i).is_punct('(')) {
      for (auto& param : parse_params(i)) d.fields.push_back(FieldDecl{std::move(param.first), param.second});
      i = skip_group(i);
    }
    while (i < size()) {
      const Token& tok = at(i);
      if (tok.is_keyword("extends")) {
        i = parse_type_list(i + 1, &d.extends);
      } else if (tok.is_keyword("implements")) {
        i = parse_type_list(i + 1, &d.implements);
      } else if (tok.is("permits") && tok.kind == TokenKind::Identifier) {
        i = parse_type_list(i + 1, nullptr);
      } else if (tok.is_punct('{') || tok.is_punct(';') || tok.is_punct('}')) {
        break;
      } else {
        ++i;
      }
    }
    d.start_line = at(decl_start).line;
    std::size_t next = i;
    if (at(i).is_punct('{')) {
      const std::size_t close = close_of(i);
      parse_class_body(i + 1, close == kNone ? size() : close, d);
      d.end_line = close == kNone ? last_line_ : at(close).line;
      next = close == kNone ? size() : close + 1;
    } else {
      d.end_line = i < size() ? at(i).line : last_line_;
      if (at(i).is_punct(';')) ++next;
    }
    out.push_back(std::move(d));
    return std::max(next, start + 1);
  }

  std::size_t skip_enum_constants(std::size_t i, std::size_t end) const {
    while (i < end) {
      const Token& tok = at(i);
      if (tok.is_punct(';')) return i + 1;
      if (tok.is_punct('(') || tok.is_punct('{') || tok.is_punct('[')) {
        i = skip_group(i);
      } else {
        ++i;
      }
    }
    return end;
  }

  std::size_t recover(std::size_t i, std::size_t end) const {
    std::size_t j = i;
    while (j < end) {
      const Token& tok = at(j);
      if (tok.is_punct(';')) return j + 1;
      if (tok.is_punct('{')) return skip_group(j);
      if (tok.is_punct('(') || tok.is_punct('[')) {
        j = skip_group(j);
      } else {
        ++j;
      }
    }
    return std::max(j, i + 1);
  }

  void parse_class_body(std::size_t begin, std::size_t end, TypeDecl& d) {
    std::size_t i = begin;
    if (d.kind == TypeDeclKind::Enum) i = skip_enum_constants(begin, end);
    while (i < end) {
      const std::size_t member_start = i;
      i = skip_modifiers_and_annotations(i, end);
      if (i >= end) break;
      const Token& tok = at(i);
      if (tok.is_punct(';')) {
        ++i;
        continue;
      }
      if (is_type_decl_start(i)) {
        i = parse_type_decl(i, member_start, d.qualified_name, d.nested);
        continue;
      }
      if (tok.is_punct('{')) {
        // instance or static initializer; not a method block
        i = skip_group(i);
        continue;
      }
      if (tok.is_punct('<')) {
        const auto after = skip_angles(i);
        i = after == kNone ? i + 1 : after;
      }
      if (at(i).kind == TokenKind::Identifier && at(i).text == d.name && at(i + 1).is_punct('(')) {
        i = parse_method(i, member_start, true, "", d);
        continue;
      }
      if (const auto ty = parse_type(i, false); ty && at(ty->next).kind == TokenKind::Identifier) {
        if (at(ty->next + 1).is_punct('(')) {
          i = parse_method(ty->next, member_start, false, ty->name, d);
        } else {
          i = parse_fields(*ty, d, end);
        }
        continue;
      }
      i = recover(i, end);
    }
  }

  // (type, name) pairs of a parameter list opened at `open`.
  std::vector<std::pair<TypeRef, std::string>> parse_params(std::size_t open) const {
    std::vector<std::pair<TypeRef, std::string>> params;
    const std::size_t close = close_of(open);
    const std::size_t end = close == kNone ? size() : close;
    std::size_t j = open + 1;
    while (j < end) {
      while (j < end && (at(j).is_keyword("final") || is_annotation_start(j))) {
        j = at(j).is_keyword("final") ? j + 1 : skip_annotation(j);
      }
      if (const auto ty = parse_type(j, true); ty && ty->next <= end) {
        std::string name;
        if (at(ty->next).kind == TokenKind::Identifier || at(ty->next).is_keyword("this")) {
          name = std::string(at(ty->next).text);
        }
        params.emplace_back(TypeRef{ty->name, pos(at(ty->begin))}, std::move(name));
        j = ty->next;
      }
      while (j < end && !at(j).is_punct(',')) {
        j = (at(j).is_punct('(') || at(j).is_punct('[') || at(j).is_punct('{')) ? skip_group(j) : j + 1;
      }
      ++j;
    }
    return params;
  }

  std::size_t parse_method(std::size_t name_idx, std::size_t member_start, bool ctor, const std::string& ret,
                           TypeDecl& d) {
    MethodDecl m;
    m.name = std::string(at(name_idx).text);
    m.is_constructor = ctor;
    m.return_type = ret;
    m.pos = pos(at(name_idx));
    m.start_line = at(member_start).line;
    const std::size_t open = name_idx + 1;
    for (auto& param : parse_params(open)) m.params.push_back(std::move(param.first));
    std::size_t i = skip_group(open);
    while (at(i).is_punct('[') && at(i + 1).is_punct(']')) i += 2;
    if (at(i).is_keyword("throws")) i = parse_type_list(i + 1, nullptr);
    if (at(i).is_keyword("default")) {
      while (i < size() && !at(i).is_punct(';') && !at(i).is_punct('}')) {
        i = (at(i).is_punct('(') || at(i).is_punct('{') || at(i).is_punct('[')) ? skip_group(i) : i + 1;
      }
    }
    if (at(i).is_punct('{')) {
      const std::size_t close = close_of(i);
      const std::size_t body_end = close == kNone ? size() : close;
      m.has_body = true;
      m.facts = scan_body(i + 1, body_end);
      m.end_line = close == kNone ? last_line_ : at(close).line;
      i = close == kNone ? size() : close + 1;
    } else {
      m.end_line = i < size() ? at(i).line : last_line_;
      if (at(i).is_punct(';')) ++i;
    }
    m.end_line = std::max(m.end_line, m.start_line);
    d.methods.push_back(std::move(m));
    return std::max(i, name_idx + 1);
  }

  std::size_t skip_initializer(std::size_t j, std::size_t end) const {
    int angle = 0;
    while (j < end) {
      const Token& tok = at(j);
      if (tok.is_punct('(') || tok.is_punct('[') || tok.is_punct('{')) {
        j = skip_group(j);
        continue;
      }
      if (tok.is_punct('<') && at(j - 1).kind == TokenKind::Identifier &&
          (at(j + 1).kind == TokenKind::Identifier || at(j + 1).is_punct('?') || at(j + 1).is_punct('>'))) {
        ++angle;
      } else if (tok.is_punct('>') && angle > 0) {
        --angle;
      } else if ((tok.is_punct(',') || tok.is_punct(';')) && angle == 0) {
        return j;
      }
      ++j;
    }
    return j;
  }

  std::size_t parse_fields(const ParsedType& ty, TypeDecl& d, std::size_t end) {
    std::size_t j = ty.next;
    while (j < end && at(j).kind == TokenKind::Identifier) {
      d.fields.push_back(FieldDecl{TypeRef{ty.name, pos(at(j))}, std::string(at(j).text)});
      ++j;
      while (at(j).is_punct('[') && at(j + 1).is_punct(']')) j += 2;
      if (at(j).is_punct('=')) j = skip_initializer(j + 1, end);
      if (at(j).is_punct(',')) {
        ++j;
        continue;
      }
      if (at(j).is_punct(';')) return j + 1;
      break;
    }
    return j >= end ? end : recover(j, end);
  }

  bool cast_follows(const Token& tok) const {
    switch (tok.kind) {
      case TokenKind::Identifier:
      case TokenKind::StringLiteral:
      case TokenKind::CharLiteral:
      case TokenKind::Number:
        return true;
      case TokenKind::Keyword:
        return tok.text == "this" || tok.text == "new" || tok.text == "super" || tok.text == "true" ||
               tok.text == "false" || tok.text == "null";
      case TokenKind::Punctuation:
        return tok.is_punct('(') || tok.is_punct('!') || tok.is_punct('~');
      default:
        return false;
    }
  }

  int count_arguments(std::size_t open) const {
    const std::size_t close = close_of(open);
    const std::size_t end = close == kNone ? size() : close;
    if (open + 1 >= end) return 0;
    int commas = 0;
    std::size_t j = open + 1;
    while (j < end) {
      const Token& tok = at(j);
      if (tok.is_punct('(') || tok.is_punct('[') || tok.is_punct('{')) {
        j = skip_group(j);
        continue;
      }
      if (tok.is_keyword("new")) {
        if (const auto ty = parse_type(j + 1, false)) {
          j = ty->next;
          continue;
        }
      }
      if (tok.is_punct(',')) ++commas;
      ++j;
    }
    return commas + 1;
  }

  // True when the parenthesized group at `open` is followed by a method body
  // or throws clause, i.e. the identifier before it declares a method.
  bool is_method_declaration(std::size_t open) const {
    const std::size_t close = close_of(open);
    if (close == kNone) return false;
    return at(close + 1).is_punct('{') || at(close + 1).is_keyword("throws");
  }

  void add_field_access(std::vector<BodyFact>& facts, const std::vector<std::string_view>& segs, std::size_t count,
                        bool after_dot, SourcePos where) const {
    if (count == 0) return;
    BodyFact fact;
    fact.kind = ItemKind::FA;
    fact.pos = where;
    if (after_dot) {
      fact.name = join_segments(segs, 0, count);
    } else if (count < 2) {
      return;
    } else if (segs[0] == "this" || segs[0] == "super") {
      fact.name = join_segments(segs, 1, count);
    } else if (is_uppercase_initial(segs[0])) {
      fact.qualifier = std::string(segs[0]);
      fact.name = join_segments(segs, 1, count);
    } else {
      std::size_t first_upper = 0;
      for (std::size_t k = 1; k < count; ++k) {
        if (is_uppercase_initial(segs[k])) {
          first_upper = k;
          break;
        }
        if (!is_lowercase_initial(segs[k])) break;
      }
      if (first_upper >= 2) {
        // package-qualified type head, e.g. java.lang.System.out
        fact.qualifier = join_segments(segs, 0, first_upper + 1);
        fact.name = join_segments(segs, first_upper + 1, count);
      } else {
        fact.name = join_segments(segs, 1, count);
      }
    }
    if (!fact.name.empty()) facts.push_back(std::move(fact));
  }

  std::vector<BodyFact> scan_body(std::size_t begin, std::size_t end) const {
    std::vector<BodyFact> facts;
    struct Declaring {
      std::string type;
      int depth = 0;
      bool active = false;
    } declaring;
    int depth = 0;
    bool statement_start = true;
    std::size_t i = begin;
    while (i < end) {
      if (statement_start) {
        statement_start = false;
        const std::size_t j = skip_modifiers_and_annotations(i, end);
        if (is_type_decl_start(j)) {
          // local class: its members fold into this method's facts
          i = at(j).is_punct('@') ? j + 3 : j + 2;
          continue;
        }
        if (const auto ty = parse_type(j, false);
            ty && ty->name != "var" && ty->name != "yield" && at(ty->next).kind == TokenKind::Identifier &&
            (at(ty->next + 1).is_punct('=') || at(ty->next + 1).is_punct(';') || at(ty->next + 1).is_punct(',') ||
             at(ty->next + 1).is_punct(':') || at(ty->next + 1).is_punct('[')) &&
            ty->next < end) {
          facts.push_back(BodyFact{ItemKind::VD, ty->name, pos(at(ty->next)), -1, {}});
          declaring = Declaring{ty->name, depth, true};
          i = ty->next + 1;
          continue;
        }
        if (j != i) {
          i = j;
          continue;
        }
      }
      const Token& tok = at(i);
      if (tok.kind == TokenKind::Punctuation) {
        switch (tok.text[0]) {
          case '{':
            ++depth;
            statement_start = true;
            ++i;
            continue;
          case '}':
            --depth;
            if (declaring.active && depth < declaring.depth) declaring.active = false;
            statement_start = true;
            ++i;
            continue;
          case ';':
            if (declaring.active && depth <= declaring.depth) declaring.active = false;
            statement_start = true;
            ++i;
            continue;
          case ':':
            statement_start = !at(i + 1).is_punct(':') && !at(i - 1).is_punct(':');
            ++i;
            continue;
          case ')':
          case ']':
            --depth;
            if (declaring.active && depth < declaring.depth) declaring.active = false;
            ++i;
            continue;
          case '[':
            ++depth;
            ++i;
            continue;
          case '(': {
            const Token& prev = at(i - 1);
            ++depth;
            if (prev.is_keyword("for") || prev.is_keyword("try")) {
              statement_start = true;
              ++i;
              continue;
            }
            const bool call_paren = prev.kind == TokenKind::Identifier || prev.is_punct(')') ||
                                    prev.is_punct(']') || prev.is_punct('.') ||
                                    (prev.kind == TokenKind::Keyword && contains(kControlKeywords, prev.text)) ||
                                    prev.is_keyword("this") || prev.is_keyword("super");
            if (!call_paren) {
              if (const auto ty = parse_type(i + 1, false);
                  ty && at(ty->next).is_punct(')') && cast_follows(at(ty->next + 1)) && ty->next < end) {
                facts.push_back(BodyFact{ItemKind::CS, ty->name, pos(at(ty->begin)), -1, {}});
                i = ty->next;
                continue;
              }
            }
            ++i;
            continue;
          }
          case ',':
            if (declaring.active && depth == declaring.depth && at(i + 1).kind == TokenKind::Identifier &&
                (at(i + 2).is_punct('=') || at(i + 2).is_punct(',') || at(i + 2).is_punct(';') ||
                 at(i + 2).is_punct('['))) {
              facts.push_back(BodyFact{ItemKind::VD, declaring.type, pos(at(i + 1)), -1, {}});
              i += 2;
              continue;
            }
            ++i;
            continue;
          case '@':
            if (is_annotation_start(i)) {
              i = skip_annotation(i);
              continue;
            }
            ++i;
            continue;
          default:
            ++i;
            continue;
        }
      }
      if (tok.is_keyword("catch") && at(i + 1).is_punct('(')) {
        std::size_t j = i + 2;
        while (at(j).is_keyword("final") || is_annotation_start(j)) {
          j = at(j).is_keyword("final") ? j + 1 : skip_annotation(j);
        }
        while (const auto ty = parse_type(j, false)) {
          facts.push_back(BodyFact{ItemKind::EH, ty->name, pos(at(ty->begin)), -1, {}});
          j = ty->next;
          if (!at(j).is_punct('|')) break;
          ++j;
        }
        i = std::min(skip_group(i + 1), end);
        continue;
      }
      if (tok.is_keyword("throw") && at(i + 1).is_keyword("new")) {
        if (const auto ty = parse_type(i + 2, false)) {
          facts.push_back(BodyFact{ItemKind::EH, ty->name, pos(at(ty->begin)), -1, {}});
        }
        ++i;
        continue;
      }
      if (tok.is_keyword("new")) {
        if (const auto ty = parse_type(i + 1, false); ty && ty->next < end) {
          if (at(ty->next).is_punct('(')) {
            facts.push_back(BodyFact{ItemKind::CI, ty->name, pos(at(ty->begin)), -1, {}});
          }
          i = std::max(ty->next, i + 1);
          continue;
        }
        ++i;
        continue;
      }
      if (tok.kind == TokenKind::Identifier || tok.is_keyword("this") || tok.is_keyword("super")) {
        std::vector<std::string_view> segs{tok.text};
        std::size_t k = i;
        while (at(k + 1).is_punct('.') && at(k + 2).kind == TokenKind::Identifier && k + 2 < end) {
          segs.push_back(at(k + 2).text);
          k += 2;
        }
        const bool after_dot = i > begin && at(i - 1).is_punct('.');
        const Token& next = at(k + 1);
        if (next.is_punct('(') && at(k).kind == TokenKind::Identifier) {
          if (is_method_declaration(k + 1)) {
            i = k + 1;
            continue;
          }
          facts.push_back(BodyFact{ItemKind::MI, std::string(at(k).text), pos(at(k)), count_arguments(k + 1), {}});
          add_field_access(facts, segs, segs.size() - 1, after_dot, pos(tok));
        } else if (next.kind != TokenKind::Identifier && !at(i - 1).is_keyword("instanceof") &&
                   !(next.is_punct(':') && at(k + 2).is_punct(':'))) {
          add_field_access(facts, segs, segs.size(), after_dot, pos(tok));
        }
        i = k + 1;
        continue;
      }
      ++i;
    }
    return facts;
  }

  std::vector<Token> t_;
  std::vector<std::size_t> match_;
  int last_line_ = 1;
  BlockTree tree_;
};

}  // namespace

BlockTree parse_structure(const std::vector<Token>& tokens, const SourceUnit& unit) {
  (void)unit;
  return StructureParser(tokens).run();
}

BlockTree parse_unit(const SourceUnit& unit) {
  std::vector<LexWarning> lex_warnings;
  const auto tokens = tokenize(unit.text, &lex_warnings);
  BlockTree tree = parse_structure(tokens, unit);
  for (const auto& w : lex_warnings) {
    tree.degraded = true;
    tree.warnings.push_back(w.message + " at line " + std::to_string(w.line));
  }
  return tree;
}

std::string find_package_name(const std::vector<Token>& tokens) {
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const Token& tok = tokens[i];
    if (!tok.significant()) continue;
    if (tok.is_keyword("package")) {
      std::string name;
      bool expect_ident = true;
      for (std::size_t j = i + 1; j < tokens.size(); ++j) {
        const Token& part = tokens[j];
        if (!part.significant()) continue;
        if (expect_ident && part.kind == TokenKind::Identifier) {
          name.append(part.text);
        } else if (!expect_ident && part.is_punct('.')) {
          name.push_back('.');
        } else {
          break;
        }
        expect_ident = !expect_ident;
      }
      if (!name.empty() && name.back() == '.') name.pop_back();
      return name;
    }
    if (tok.is_keyword("import") || tok.is_keyword("class") || tok.is_keyword("interface") ||
        tok.is_keyword("enum")) {
      return {};
    }
  }
  return {};
}

}  // namespace esdp
