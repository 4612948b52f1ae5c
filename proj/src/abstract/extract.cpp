// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 ESDP Contributors

#include "esdp/abstract/extract.hpp"

#include <algorithm>

namespace esdp {

std::string_view to_string(BlockKind kind) { return kind == BlockKind::Class ? "class" : "method"; }

std::optional<BlockKind> parse_block_kind(std::string_view text) {
  if (text == "class") return BlockKind::Class;
  if (text == "method") return BlockKind::Method;
  return std::nullopt;
}

std::string render_signature(const MethodDecl& method, const BlockTree& tree, const DefaultTypeTable& defaults) {
  std::string out = method.name;
  out.push_back('(');
  for (std::size_t i = 0; i < method.params.size(); ++i) {
    if (i > 0) out.push_back(',');
    out.append(resolve_type(method.params[i].name, tree, defaults).name);
  }
  out.push_back(')');
  if (!method.is_constructor) {
    out.push_back(':');
    out.append(resolve_type(method.return_type, tree, defaults).name);
  }
  return out;
}

void DeclarationIndex::add(const BlockTree& tree, const DefaultTypeTable& defaults) {
  for_each_type(tree.types, [&](const TypeDecl& type) {
    auto& sigs = by_type_[type.qualified_name];
    for (const auto& method : type.methods) {
      if (method.is_constructor) continue;
      const int arity = static_cast<int>(method.params.size());
      std::string rendered = render_signature(method, tree, defaults);
      auto& corpus_wide = by_name_[{method.name, arity}];
      if (std::find(corpus_wide.begin(), corpus_wide.end(), rendered) == corpus_wide.end()) {
        corpus_wide.push_back(rendered);
      }
      sigs.push_back(MethodSig{method.name, arity, std::move(rendered)});
    }
  });
}

std::optional<std::string> DeclarationIndex::find_in_type(const std::string& qualified_type, const std::string& name,
                                                          int arity) const {
  const auto it = by_type_.find(qualified_type);
  if (it == by_type_.end()) return std::nullopt;
  for (const auto& sig : it->second) {
    if (sig.name == name && sig.arity == arity) return sig.rendered;
  }
  return std::nullopt;
}

std::optional<std::string> DeclarationIndex::find_unique(const std::string& name, int arity) const {
  const auto it = by_name_.find({name, arity});
  if (it == by_name_.end() || it->second.size() != 1) return std::nullopt;
  return it->second.front();
}

namespace {

class Extractor {
 public:
  Extractor(const BlockTree& tree, const DeclarationIndex& index, const DefaultTypeTable& defaults)
      : tree_(tree), index_(index), defaults_(defaults) {}

  std::vector<ExtractedItem> run() {
    bool first = true;
    for (const auto& type : tree_.types) {
      visit_type(type, first);
      first = false;
    }
    return std::move(out_);
  }

 private:
  std::string resolve(const std::string& name) const { return resolve_type(name, tree_, defaults_).name; }

  void emit(ItemKind kind, std::string name, const std::string& entity, SourcePos pos, BlockKind block,
            LineSpan span) {
    if (name.empty()) return;
    out_.push_back(ExtractedItem{Item{kind, std::move(name), entity, std::max(pos.line, 1)}, pos.col, block, span});
  }

  void visit_type(const TypeDecl& type, bool first_top_level) {
    LineSpan span{type.start_line, type.end_line};
    if (first_top_level) {
      // package and import lines precede the class; widen its span to cover them
      if (tree_.package_pos) span.start = std::min(span.start, tree_.package_pos->line);
      for (const auto& imp : tree_.imports) span.start = std::min(span.start, imp.pos.line);
    }
    const std::string& entity = type.qualified_name;
    if (first_top_level) {
      if (tree_.package_pos) emit(ItemKind::PK, tree_.package, entity, *tree_.package_pos, BlockKind::Class, span);
      for (const auto& imp : tree_.imports) {
        emit(ItemKind::IM, imp.is_static ? "static " + imp.name : imp.name, entity, imp.pos, BlockKind::Class, span);
      }
    }
    ItemKind decl_kind = ItemKind::CD;
    if (type.kind == TypeDeclKind::Interface || type.kind == TypeDeclKind::Annotation) decl_kind = ItemKind::ID;
    if (type.kind == TypeDeclKind::Enum) decl_kind = ItemKind::ED;
    emit(decl_kind, type.qualified_name, entity, type.pos, BlockKind::Class, span);
    for (const auto& ref : type.extends) emit(ItemKind::XT, resolve(ref.name), entity, ref.pos, BlockKind::Class, span);
    for (const auto& ref : type.implements) {
      emit(ItemKind::IP, resolve(ref.name), entity, ref.pos, BlockKind::Class, span);
    }
    for (const auto& field : type.fields) {
      emit(ItemKind::FD, resolve(field.type.name), entity, field.type.pos, BlockKind::Class, span);
    }
    for (const auto& method : type.methods) {
      emit(method.is_constructor ? ItemKind::CT : ItemKind::MD, render_signature(method, tree_, defaults_), entity,
           method.pos, BlockKind::Class, span);
      if (method.has_body) visit_method(type, method);
    }
    for (const auto& nested : type.nested) visit_type(nested, false);
  }

  void visit_method(const TypeDecl& type, const MethodDecl& method) {
    const std::string entity = type.qualified_name + "." + method.name + "()";
    const LineSpan span{method.start_line, method.end_line};
    for (const auto& param : method.params) {
      emit(ItemKind::PM, resolve(param.name), entity, param.pos, BlockKind::Method, span);
    }
    for (const auto& fact : method.facts) {
      switch (fact.kind) {
        case ItemKind::MI:
          emit(ItemKind::MI, invocation_name(type, fact), entity, fact.pos, BlockKind::Method, span);
          break;
        case ItemKind::FA:
          emit(ItemKind::FA, fact.qualifier.empty() ? fact.name : resolve(fact.qualifier) + "." + fact.name, entity,
               fact.pos, BlockKind::Method, span);
          break;
        default:
          emit(fact.kind, resolve(fact.name), entity, fact.pos, BlockKind::Method, span);
          break;
      }
    }
  }

  std::string invocation_name(const TypeDecl& type, const BodyFact& fact) const {
    if (auto sig = index_.find_in_type(type.qualified_name, fact.name, fact.arity)) return *sig;
    for (const auto& imp : tree_.imports) {
      if (imp.is_static || imp.wildcard) continue;
      if (auto sig = index_.find_in_type(imp.name, fact.name, fact.arity)) return *sig;
    }
    if (auto sig = index_.find_unique(fact.name, fact.arity)) return *sig;
    return fact.name + "(arity=" + std::to_string(fact.arity) + "):?";
  }

  const BlockTree& tree_;
  const DeclarationIndex& index_;
  const DefaultTypeTable& defaults_;
  std::vector<ExtractedItem> out_;
};

}  // namespace

std::vector<ExtractedItem> extract_items(const BlockTree& tree, const SourceUnit& unit, const DeclarationIndex& index,
                                         const DefaultTypeTable& defaults) {
  (void)unit;
  return Extractor(tree, index, defaults).run();
}

}  // namespace esdp
