#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "commaforge/dot.hpp"
#include "test_support.hpp"

using namespace commaforge;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string fixture(const std::string& name) {
  return slurp(std::string(COMMAFORGE_FIXTURE_DIR) + "/" + name);
}

const std::vector<std::string> kGoodFixtures = {
    "one.cat",   "two.cat",    "three.cat",  "diamond.cat",   "pair.cat",
    "monoid.cat", "galois.cat", "workspace.cat", "empty.cat",
};

}  // namespace

TEST_CASE("minimal category parses") {
  Workspace ws = parse("category One { objects: x; arrows: ; compose: }");
  const auto& one = ws.category("One");
  CHECK(one->object_count() == 1);
  CHECK(one->arrow_count() == 1);
  CHECK(one->identity("x") == "id_x");
  CHECK(validate_category(*one).ok());
}

TEST_CASE("walking arrow source matches the engine fixture") {
  Workspace ws = parse(fixture("two.cat"));
  const auto& two = ws.category("Two");
  CHECK(two->extensionally_equal(*fixtures::walking_arrow()));
  CHECK(hom_set(*two, "0", "1") == std::vector<ArrId>{"e"});
}

TEST_CASE("forced composition entries are completed") {
  Workspace ws = parse(fixture("three.cat"));
  const auto& three = ws.category("Three");
  CHECK(three->compose("e01", "e12") == "e02");
  CHECK(validate_category(*three).ok());
}

TEST_CASE("non-forced missing entries fail closure") {
  CHECK_THROWS_AS(parse(fixture("bad_closure.cat")), ValidationFailure);
  try {
    parse(fixture("bad_closure.cat"));
  } catch (const ValidationFailure& e) {
    CHECK(e.law == "closure");
  }
}

TEST_CASE("syntax and reference errors carry spans") {
  try {
    parse(fixture("bad_syntax.cat"));
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.span.line == 1);
    CHECK(e.span.column > 1);
  }
  try {
    parse(fixture("bad_unknown.cat"));
    FAIL("expected an unknown-reference error");
  } catch (const UnknownReference& e) {
    CHECK(e.span.line == 3);
  }
}

TEST_CASE("explicit composition entries load") {
  Workspace ws = parse(fixture("monoid.cat"));
  const auto& z2 = ws.category("Z2");
  CHECK(z2->compose("z", "z") == "id_m");
  CHECK(validate_category(*z2).ok());
}

TEST_CASE("functors, transformations and adjunctions load and validate") {
  Workspace ws = parse(fixture("galois.cat"));
  CHECK(validate_functor(ws.functor_named("F")).ok());
  CHECK(validate_functor(ws.functor_named("G")).ok());
  CHECK(validate_nat_trans(ws.nat_named("unit")).ok());
  CHECK(check_adjunction(ws.adjunction_named("galois")).ok());
  // the loaded adjunction is the synthesized one
  auto synthesized = make_poset_adjunction(ws.functor_named("F"), ws.functor_named("G"));
  REQUIRE(synthesized.has_value());
  CHECK(ws.adjunction_named("galois").unit.equal_maps(synthesized->unit));
  CHECK(ws.adjunction_named("galois").counit.equal_maps(synthesized->counit));
}

TEST_CASE("duplicate and dangling references are rejected") {
  CHECK_THROWS_AS(parse("category A { objects: x; } category A { objects: y; }"), SyntaxError);
  CHECK_THROWS_AS(parse("functor F: Missing -> Missing { obj x |-> x; }"), UnknownReference);
  CHECK_THROWS_AS(parse("category A { objects: x; } "
                        "functor F: A -> A { obj x |-> x; } "
                        "nat t: F => Gone { at x: id_x; }"),
                  UnknownReference);
}

TEST_CASE("broken functor laws are validation failures") {
  // e |-> id_0 is not dom/cod coherent with 1 |-> 1
  CHECK_THROWS_AS(parse("category Two { objects: 0, 1; arrows: e: 0 -> 1; } "
                        "functor F: Two -> Two { obj 0 |-> 0, 1 |-> 1; arr e |-> id_0; }"),
                  ValidationFailure);
  // missing component
  CHECK_THROWS_AS(parse("category Two { objects: 0, 1; arrows: e: 0 -> 1; } "
                        "functor F: Two -> Two { obj 0 |-> 0, 1 |-> 1; arr e |-> e; } "
                        "nat t: F => F { at 0: id_0; }"),
                  ValidationFailure);
}

TEST_CASE("serialization is canonical") {
  Workspace one = parse(fixture("one.cat"));
  CHECK(serialize(one) == "category One {\n  objects: x;\n}\n");

  // serialize∘parse is a fixpoint after one normalization
  Workspace two = parse(fixture("two.cat"));
  std::string canonical = serialize(two);
  CHECK(serialize(parse(canonical)) == canonical);

  CHECK(serialize(parse(fixture("empty.cat"))) == "");
}

TEST_CASE("parse∘serialize is the identity on the fixture corpus") {
  for (const auto& name : kGoodFixtures) {
    INFO(name);
    Workspace ws = parse(fixture(name));
    Workspace again = parse(serialize(ws));
    CHECK(ws.extensionally_equal(again));
  }
}

TEST_CASE("dsl snippets in the README parse and validate") {
  std::string readme = slurp(std::string(COMMAFORGE_SOURCE_DIR) + "/README.md");
  std::size_t pos = 0;
  std::size_t blocks = 0;
  while ((pos = readme.find("```cat\n", pos)) != std::string::npos) {
    pos += 7;
    std::size_t end = readme.find("```", pos);
    REQUIRE(end != std::string::npos);
    CHECK_NOTHROW(parse(readme.substr(pos, end - pos)));
    ++blocks;
    pos = end + 3;
  }
  CHECK(blocks > 0);  // the README demonstrates the syntax
}

TEST_CASE("dot emission") {
  auto one = fixtures::terminal_category();
  std::string dot_one = emit_dot(*one);
  CHECK(dot_one.find("label=\"pt\"") != std::string::npos);
  CHECK(dot_one.find("->") == std::string::npos);

  auto two = fixtures::walking_arrow();
  std::string dot_two = emit_dot(*two);
  CHECK(dot_two.find("N0 -> N1 [label=\"e\"]") != std::string::npos);

  auto count_edges = [](const std::string& s) {
    std::size_t n = 0, pos = 0;
    while ((pos = s.find(" -> ", pos)) != std::string::npos) {
      ++n;
      pos += 4;
    }
    return n;
  };
  CHECK(count_edges(dot_two) == 1);
  DotOptions with_ids;
  with_ids.include_identities = true;
  CHECK(count_edges(emit_dot(*two, with_ids)) == 3);

  auto ac = make_arrow_category(two);
  std::string dot_arrow = emit_dot(*ac.cat());
  CHECK(count_edges(dot_arrow) == 3);  // 6 arrows minus 3 identities

  // deterministic output
  CHECK(emit_dot(*ac.cat()) == dot_arrow);
}
