#include "ufold/sexpr.hpp"

#include <doctest.h>

#include "support/tree_gen.hpp"
#include "ufold/diagnostics.hpp"
#include "ufold/syntax_tree.hpp"

using namespace ufold;

namespace {

void check_span_nesting(const SyntaxNode& node) {
  std::uint32_t cursor = node.span.begin;
  for (const SyntaxNode& child : node.children) {
    CHECK(node.span.contains(child.span));
    CHECK(child.span.begin > cursor);
    cursor = child.span.end;
    check_span_nesting(child);
  }
}

}  // namespace

TEST_SUITE("sexpr") {

TEST_CASE("single leaf with value") {
  SyntaxTree t = parse_sexpr("(ident \"x\")", "buf");
  CHECK(t.root().label == "ident");
  CHECK(t.root().value == "x");
  CHECK(t.root().is_leaf());
  CHECK(t.root().span == Span{0, 11});
  CHECK(t.node_count() == 1);
}

TEST_CASE("leaf without value") {
  SyntaxTree t = parse_sexpr("(params)", "buf");
  CHECK(t.root().label == "params");
  CHECK(t.root().value.empty());
}

TEST_CASE("nested nodes get nested spans") {
  const char* text = "(block (asg (ident \"x\") (num \"1\")) (ret (ident \"x\")))";
  SyntaxTree t = parse_sexpr(text, "buf");
  CHECK(t.node_count() == 6);
  CHECK(t.root().span.begin == 0);
  CHECK(t.root().span.end == std::string_view(text).size());
  check_span_nesting(t.root());

  const SyntaxNode& asg = t.root().children[0];
  CHECK(asg.label == "asg");
  CHECK(asg.span == Span{7, 34});
}

TEST_CASE("escape sequences round-trip") {
  SyntaxNode n;
  n.label = "str";
  n.value = "a\"b\\c\nd\te\rf";
  std::string text = to_sexpr(n);
  SyntaxTree back = parse_sexpr(text, "buf");
  CHECK(back.root().value == n.value);
}

TEST_CASE("values on interior nodes are dropped") {
  SyntaxTree t = parse_sexpr("(block \"junk\" (num \"1\"))", "buf");
  CHECK(t.root().value.empty());
  CHECK(t.root().children[0].value == "1");
}

TEST_CASE("whitespace between tokens is free-form") {
  const char* text = "(block\n  (num \"1\")\n  (num \"2\"))";
  SyntaxTree t = parse_sexpr(text, "buf");
  CHECK(t.node_count() == 3);
  CHECK(to_sexpr(t.root()) == "(block (num \"1\") (num \"2\"))");
}

TEST_CASE("malformed input is rejected with a position") {
  CHECK_THROWS_AS(parse_sexpr("", "buf"), ParseError);
  CHECK_THROWS_AS(parse_sexpr("(", "buf"), ParseError);
  CHECK_THROWS_AS(parse_sexpr("()", "buf"), ParseError);
  CHECK_THROWS_AS(parse_sexpr("(a \"x\"", "buf"), ParseError);
  CHECK_THROWS_AS(parse_sexpr("(a) junk", "buf"), ParseError);
  CHECK_THROWS_AS(parse_sexpr("(a \"\\q\")", "buf"), ParseError);
  CHECK_THROWS_AS(parse_sexpr("\"x\"", "buf"), ParseError);

  try {
    parse_sexpr("(block\n  (num \"1\" missing)\n)", "lib/Foo.sexp");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.source_id() == "lib/Foo.sexp");
    CHECK(e.pos().line == 2);
    CHECK(std::string(e.what()).find("lib/Foo.sexp:2:") != std::string::npos);
  }
}

TEST_CASE("random trees survive a render-parse round trip") {
  testing::TreeGen gen(7);
  for (int i = 0; i < 200; ++i) {
    SyntaxNode t = gen.tree(1 + static_cast<std::uint32_t>(gen.rng()() % 50));
    SyntaxTree back = testing::materialize(t, "rt");
    CHECK(isomorphic(t, back.root()));
    CHECK(back.node_count() == compute_metrics(t).size);
    check_span_nesting(back.root());
  }
}

}  // TEST_SUITE
