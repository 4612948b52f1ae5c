// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 ESDP Contributors

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "esdp/abstract/abstraction.hpp"
#include "esdp/abstract/block_tree.hpp"
#include "esdp/abstract/records.hpp"
#include "esdp/common/error.hpp"
#include "test_support.hpp"

using namespace esdp;
using esdp::testing::make_unit;

namespace {

AbstractionResult abstract_text(const std::string& text, const std::string& path = "t/com/Test.java") {
  return abstract_units({make_unit(path, text)}, DefaultTypeTable::java_lang());
}

const Transaction* find_tx(const AbstractionResult& r, std::string_view entity) {
  for (const auto& tx : r.transactions) {
    if (tx.entity == entity) return &tx;
  }
  return nullptr;
}

std::vector<std::string> rendered(const Transaction& tx) {
  std::vector<std::string> out;
  for (const auto& item : tx.items) out.push_back(std::string(code(item.kind)) + " " + item.name);
  return out;
}

bool has_item(const Transaction& tx, ItemKind kind, std::string_view name) {
  return std::any_of(tx.items.begin(), tx.items.end(),
                     [&](const Item& i) { return i.kind == kind && i.name == name; });
}

}  // namespace

TEST(ItemCatalog, HasSeventeenUniqueCodes) {
  const auto& catalog = item_kind_catalog();
  EXPECT_EQ(catalog.size(), 17u);
  std::set<std::string_view> codes;
  for (const auto& info : catalog) {
    EXPECT_EQ(info.code.size(), 2u);
    EXPECT_FALSE(info.description.empty());
    codes.insert(info.code);
    EXPECT_EQ(parse_item_kind(info.code), info.kind);
  }
  EXPECT_EQ(codes.size(), 17u);
  EXPECT_FALSE(parse_item_kind("ZZ"));
}

TEST(ItemRendering, PadsSingleDigitLines) {
  const Item fd{ItemKind::FD, "dom.ASTParser", "com.Test", 5};
  EXPECT_EQ(render_item(fd), "FD, dom.ASTParser, com.Test:05");
  const Item mi{ItemKind::MI, "method_A(java.lang.String):void", "com.class_B.method_C()", 130};
  EXPECT_EQ(render_item(mi), "MI, method_A(java.lang.String):void, com.class_B.method_C():130");
}

TEST(ItemRendering, RoundTrips) {
  for (const Item& item : {Item{ItemKind::FD, "dom.ASTParser", "com.Test", 5},
                           Item{ItemKind::MI, "m(a, b):?", "p.C.m()", 12}, Item{ItemKind::PK, "com", "com.T", 1}}) {
    const auto parsed = parse_rendered_item(render_item(item));
    ASSERT_TRUE(parsed) << render_item(item);
    EXPECT_EQ(*parsed, item);
  }
  EXPECT_FALSE(parse_rendered_item("FD, x, y:5"));
  EXPECT_FALSE(parse_rendered_item("XX, x, y:05"));
  EXPECT_FALSE(parse_rendered_item("FD x y"));
}

TEST(Parser, PackageAndField) {
  const auto unit = make_unit("t/com/Test.java", "package com;\nclass Test { dom.ASTParser p; }\n");
  const BlockTree tree = parse_unit(unit);
  EXPECT_EQ(tree.package, "com");
  ASSERT_EQ(tree.types.size(), 1u);
  EXPECT_EQ(tree.types[0].name, "Test");
  EXPECT_EQ(tree.types[0].qualified_name, "com.Test");
  ASSERT_EQ(tree.types[0].fields.size(), 1u);
  EXPECT_EQ(tree.types[0].fields[0].type.name, "dom.ASTParser");
  EXPECT_FALSE(tree.degraded);
}

TEST(Parser, PackageOnlyFile) {
  const BlockTree tree = parse_unit(make_unit("t/p/package-info.java", "package com.example;\n"));
  EXPECT_EQ(tree.package, "com.example");
  EXPECT_TRUE(tree.types.empty());
}

TEST(Parser, InvocationFactWithArity) {
  const BlockTree tree =
      parse_unit(make_unit("t/com/class_B.java", "package com;\nclass class_B {\n void method_C() {\n  method_A(\"x\");\n }\n}\n"));
  ASSERT_EQ(tree.types.size(), 1u);
  ASSERT_EQ(tree.types[0].methods.size(), 1u);
  const auto& facts = tree.types[0].methods[0].facts;
  ASSERT_EQ(facts.size(), 1u);
  EXPECT_EQ(facts[0].kind, ItemKind::MI);
  EXPECT_EQ(facts[0].name, "method_A");
  EXPECT_EQ(facts[0].arity, 1);
}

TEST(Parser, UnbalancedBracesDegradeWithoutFailing) {
  const BlockTree tree = parse_unit(make_unit("t/X.java", "class X {\n void f() {\n  g();\n"));
  EXPECT_TRUE(tree.degraded);
  ASSERT_EQ(tree.types.size(), 1u);
  EXPECT_EQ(tree.types[0].name, "X");
}

TEST(Parser, BracesInsideLiteralsAndCommentsIgnored) {
  const BlockTree tree = parse_unit(
      make_unit("t/X.java", "class X {\n void f() {\n  String s = \"}{\"; // }\n  /* { */ g('}');\n }\n}\n"));
  EXPECT_FALSE(tree.degraded);
  ASSERT_EQ(tree.types.size(), 1u);
  ASSERT_EQ(tree.types[0].methods.size(), 1u);
  EXPECT_EQ(tree.types[0].methods[0].end_line, 5);
}

TEST(TypeResolver, ResolutionOrder) {
  const BlockTree tree = parse_unit(
      make_unit("t/p/A.java", "package p;\nimport dom.ASTParser;\nclass A { class Inner {} }\n"));
  const auto defaults = DefaultTypeTable::java_lang();
  EXPECT_EQ(resolve_type("javax.swing.JButton", tree, defaults).name, "javax.swing.JButton");
  EXPECT_EQ(resolve_type("ASTParser", tree, defaults).name, "dom.ASTParser");
  EXPECT_EQ(resolve_type("String", tree, defaults).name, "java.lang.String");
  EXPECT_EQ(resolve_type("A", tree, defaults).name, "p.A");
  EXPECT_EQ(resolve_type("int", tree, defaults).name, "int");
  const auto unknown = resolve_type("Mystery", tree, defaults);
  EXPECT_EQ(unknown.name, "Mystery");
  EXPECT_FALSE(unknown.resolved);
  EXPECT_EQ(resolve_type("String[]", tree, defaults).name, "java.lang.String[]");
}

TEST(Extract, ImportedFieldDeclaration) {
  const auto r = abstract_text("package com;\n\nimport dom.ASTParser;\npublic class Test {\n  ASTParser p;\n}\n");
  const Transaction* tx = find_tx(r, "com.Test");
  ASSERT_NE(tx, nullptr);
  const auto it = std::find_if(tx->items.begin(), tx->items.end(), [](const Item& i) { return i.kind == ItemKind::FD; });
  ASSERT_NE(it, tx->items.end());
  EXPECT_EQ(*it, (Item{ItemKind::FD, "dom.ASTParser", "com.Test", 5}));
  EXPECT_EQ(render_item(*it), "FD, dom.ASTParser, com.Test:05");
}

TEST(Extract, InvocationFromFixture) {
  const std::string text = esdp::testing::read_file(esdp::testing::fixture_dir() / "field_and_call/com/class_B.java");
  const auto r = abstract_text(text, "t/com/class_B.java");
  const Transaction* tx = find_tx(r, "com.class_B.method_C()");
  ASSERT_NE(tx, nullptr);
  ASSERT_EQ(tx->items.size(), 1u);
  EXPECT_EQ(tx->items[0], (Item{ItemKind::MI, "method_A(java.lang.String):void", "com.class_B.method_C()", 130}));
}

TEST(Extract, EmptyClassYieldsOnlyDeclaration) {
  const auto r = abstract_text("class Empty {}\n", "t/Empty.java");
  ASSERT_EQ(r.transactions.size(), 1u);
  EXPECT_EQ(rendered(r.transactions[0]), (std::vector<std::string>{"CD Empty"}));
}

TEST(Extract, UnknownInvocationRendersArity) {
  const auto r = abstract_text("class A {\n void f() {\n  x.run(1, g(2), \"a,b\");\n }\n}\n", "t/A.java");
  const Transaction* tx = find_tx(r, "A.f()");
  ASSERT_NE(tx, nullptr);
  EXPECT_TRUE(has_item(*tx, ItemKind::MI, "run(arity=3):?"));
  EXPECT_TRUE(has_item(*tx, ItemKind::MI, "g(arity=1):?"));
}

TEST(Extract, CorpusWideSignatureLookup) {
  const std::vector<SourceUnit> units = {
      make_unit("t/p/Lib.java", "package p;\npublic class Lib {\n  public static int twice(int v) { return v * 2; }\n}\n"),
      make_unit("t/q/Use.java", "package q;\nclass Use {\n  int f() {\n    return Lib.twice(3);\n  }\n}\n")};
  const auto r = abstract_units(units, DefaultTypeTable::java_lang());
  const Transaction* tx = find_tx(r, "q.Use.f()");
  ASSERT_NE(tx, nullptr);
  EXPECT_TRUE(has_item(*tx, ItemKind::MI, "twice(int):int"));
}

TEST(Extract, BodyFactKinds) {
  const auto r = abstract_text(
      "package p;\nimport java.util.List;\nimport java.util.ArrayList;\n"
      "class A extends Base implements Runnable {\n"
      "  A(int n) { }\n"
      "  void f(Object o) {\n"
      "    List<String> xs = new ArrayList<>();\n"
      "    String s = (String) o;\n"
      "    int n = this.count;\n"
      "    try { g(); } catch (IllegalStateException e) { throw new RuntimeException(e); }\n"
      "  }\n"
      "}\n",
      "t/p/A.java");
  const Transaction* cls = find_tx(r, "p.A");
  ASSERT_NE(cls, nullptr);
  EXPECT_TRUE(has_item(*cls, ItemKind::PK, "p"));
  EXPECT_TRUE(has_item(*cls, ItemKind::IM, "java.util.List"));
  EXPECT_TRUE(has_item(*cls, ItemKind::CD, "p.A"));
  EXPECT_TRUE(has_item(*cls, ItemKind::XT, "Base"));
  EXPECT_TRUE(has_item(*cls, ItemKind::IP, "java.lang.Runnable"));
  EXPECT_TRUE(has_item(*cls, ItemKind::CT, "A(int)"));
  EXPECT_TRUE(has_item(*cls, ItemKind::MD, "f(java.lang.Object):void"));
  const Transaction* f = find_tx(r, "p.A.f()");
  ASSERT_NE(f, nullptr);
  EXPECT_TRUE(has_item(*f, ItemKind::PM, "java.lang.Object"));
  EXPECT_TRUE(has_item(*f, ItemKind::VD, "java.util.List"));
  EXPECT_TRUE(has_item(*f, ItemKind::CI, "java.util.ArrayList"));
  EXPECT_TRUE(has_item(*f, ItemKind::CS, "java.lang.String"));
  EXPECT_TRUE(has_item(*f, ItemKind::FA, "count"));
  EXPECT_TRUE(has_item(*f, ItemKind::EH, "java.lang.IllegalStateException"));
  EXPECT_TRUE(has_item(*f, ItemKind::EH, "java.lang.RuntimeException"));
  EXPECT_TRUE(has_item(*f, ItemKind::MI, "g(arity=0):?"));
}

TEST(Transactions, ClassAndMethodBlocksAreDisjoint) {
  const auto r = abstract_text(
      "class Test {\n  Foo a;\n  Bar b;\n  void run() {\n    one();\n    two();\n    three();\n  }\n}\n",
      "t/Test.java");
  ASSERT_EQ(r.transactions.size(), 2u);
  const Transaction* cls = find_tx(r, "Test");
  const Transaction* m = find_tx(r, "Test.run()");
  ASSERT_TRUE(cls && m);
  EXPECT_EQ(rendered(*cls), (std::vector<std::string>{"CD Test", "FD Foo", "FD Bar", "MD run():void"}));
  EXPECT_EQ(rendered(*m),
            (std::vector<std::string>{"MI one(arity=0):?", "MI two(arity=0):?", "MI three(arity=0):?"}));
  EXPECT_EQ(cls->block, BlockKind::Class);
  EXPECT_EQ(m->block, BlockKind::Method);
  EXPECT_EQ(m->span, (LineSpan{4, 8}));
  EXPECT_EQ(m->id, "t/Test.java#Test.run()@4-8");
}

TEST(Transactions, NoMethodBodiesMeansClassBlocksOnly) {
  const auto r = abstract_text("interface I {\n  void a();\n  int b(String s);\n}\n", "t/I.java");
  for (const auto& tx : r.transactions) EXPECT_EQ(tx.block, BlockKind::Class);
}

TEST(Transactions, InvariantsHoldOnRandomCorpus) {
  for (std::uint32_t seed = 1; seed <= 10; ++seed) {
    esdp::testing::TempDir dir;
    esdp::testing::write_random_corpus(dir.path(), seed);
    std::vector<SourceUnit> units;
    for (const auto& entry : std::filesystem::recursive_directory_iterator(dir.path() / "random")) {
      if (entry.is_regular_file()) {
        units.push_back(make_unit(entry.path().filename().string(), esdp::testing::read_file(entry.path())));
      }
    }
    const auto r = abstract_units(units, DefaultTypeTable::java_lang());
    std::size_t methods = 0;
    for (const auto& tx : r.transactions) {
      EXPECT_FALSE(tx.items.empty());
      methods += tx.block == BlockKind::Method;
      for (const auto& item : tx.items) {
        EXPECT_EQ(item.entity, tx.entity);
        EXPECT_TRUE(tx.span.contains(item.line)) << tx.id << " " << render_item(item);
        EXPECT_FALSE(item.name.empty());
      }
    }
    EXPECT_LE(methods, r.method_bodies);
    const auto again = abstract_units(units, DefaultTypeTable::java_lang(), 3);
    EXPECT_EQ(again.transactions, r.transactions);
  }
}

TEST(Transactions, MethodBlockCountMatchesNonEmptyBodies) {
  std::string text = "package big;\nclass Big {\n";
  for (int i = 0; i < 74; ++i) text += "  void m" + std::to_string(i) + "() {\n    step" + std::to_string(i) + "();\n  }\n";
  text += "}\n";
  const auto r = abstract_text(text, "t/big/Big.java");
  EXPECT_EQ(r.method_bodies, 74u);
  const auto methods = std::count_if(r.transactions.begin(), r.transactions.end(),
                                     [](const Transaction& tx) { return tx.block == BlockKind::Method; });
  EXPECT_EQ(methods, 74);
}

TEST(Records, ImportsValidLines) {
  std::istringstream in(
      R"j({"kind":"MI","name":"b()","entity":"p.C.m()","line":4,"unit":"C.java","block":"method","span":[3,6]})j"
      "\n"
      R"j({"kind":"MI","name":"a()","entity":"p.C.m()","line":3,"unit":"C.java","block":"method","span":[3,6]})j"
      "\n");
  const auto imported = import_records(in, "rec");
  ASSERT_EQ(imported.transactions.size(), 1u);
  const auto& tx = imported.transactions[0];
  EXPECT_EQ(tx.unit_path, "rec/C.java");
  ASSERT_EQ(tx.items.size(), 2u);
  EXPECT_EQ(tx.items[0].name, "a()");
  EXPECT_EQ(imported.unit_paths, (std::vector<std::string>{"rec/C.java"}));
}

TEST(Records, RejectsUnknownFieldsAndBadLines) {
  const std::string base =
      R"j({"kind":"MI","name":"a()","entity":"p.C.m()","line":3,"unit":"C.java","block":"method","span":[3,6])j";
  const std::vector<std::string> bad_lines = {
      base + R"j(,"extra":1})j",
      R"j({"kind":"MI"})j",
      "not json",
      R"j({"kind":"QQ","name":"a()","entity":"e","line":3,"unit":"C.java","block":"method","span":[3,6]})j",
      R"j({"kind":"MI","name":"a()","entity":"e","line":9,"unit":"C.java","block":"method","span":[3,6]})j",
  };
  for (const std::string& bad : bad_lines) {
    std::istringstream in(bad + "\n");
    EXPECT_THROW(import_records(in, "rec"), RecordFormatError) << bad;
  }
}
