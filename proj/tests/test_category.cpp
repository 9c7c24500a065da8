#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

using namespace commaforge;

TEST_CASE("validation report ok iff no violations") {
  ValidationReport r;
  CHECK(r.ok());
  r.add("some law", {"x"});
  CHECK_FALSE(r.ok());
  CHECK(r.has("some law"));
}

TEST_CASE("terminal and walking-arrow categories validate") {
  CHECK(validate_category(*fixtures::terminal_category()).ok());
  CHECK(validate_category(*fixtures::walking_arrow()).ok());
  CHECK(validate_category(*fixtures::empty_category()).ok());
  CHECK(fixtures::walking_arrow()->object_count() == 2);
  CHECK(fixtures::walking_arrow()->arrow_count() == 3);
}

TEST_CASE("remapped identity composite breaks the identity law") {
  CategoryBuilder b("BrokenTwo");
  b.object("0").object("1");
  b.identity_arrow("id_0", "0").identity_arrow("id_1", "1");
  b.arrow("e", "0", "1");
  b.composite("e", "id_1", "id_1");  // should be e
  auto cat = b.build();
  auto report = validate_category(*cat);
  CHECK_FALSE(report.ok());
  CHECK(report.has("identity law"));
}

TEST_CASE("missing closure entry is reported") {
  CategoryBuilder b("Gappy");
  b.object("x").object("y").object("z");
  b.arrow("f", "x", "y");
  b.arrow("g", "y", "z");
  b.arrow("h", "x", "z");
  // no composite(f, g, h)
  auto report = validate_category(*b.build());
  CHECK_FALSE(report.ok());
  CHECK(report.has("closure"));
}

TEST_CASE("non-associative table is reported") {
  CategoryBuilder b("NonAssoc");
  b.object("m");
  b.identity_arrow("id", "m");
  b.arrow("x", "m", "m").arrow("y", "m", "m");
  b.composite("x", "x", "y");
  b.composite("x", "y", "id");
  b.composite("y", "x", "x");
  b.composite("y", "y", "y");
  auto report = validate_category(*b.build());
  CHECK_FALSE(report.ok());
  CHECK(report.has("associativity"));
}

TEST_CASE("compose follows the identity laws on the walking arrow") {
  auto two = fixtures::walking_arrow();
  CHECK(two->compose("id_0", "e") == "e");
  CHECK(two->compose("e", "id_1") == "e");
  CHECK_THROWS_AS((void)two->compose("e", "id_0"), NotComposable);
}

TEST_CASE("compose in the chain poset hits the unique arrow") {
  auto three = fixtures::chain(3);
  // oracle: posets have at most one arrow per hom-set
  auto hom02 = three->hom("0", "2");
  REQUIRE(hom02.size() == 1);
  CHECK(three->compose("le_0_1", "le_1_2") == hom02.front());
  CHECK(three->compose("le_0_1", "le_1_2") == "le_0_2");
}

TEST_CASE("identity lookups") {
  auto one = fixtures::terminal_category();
  CHECK(identity(*one, "pt") == "id_pt");
  CHECK(identity(*fixtures::walking_arrow(), "0") == "id_0");
  CHECK_THROWS_AS((void)identity(*fixtures::empty_category(), "pt"), UnknownObject);
}

TEST_CASE("hom sets of the walking arrow") {
  auto two = fixtures::walking_arrow();
  CHECK(hom_set(*two, "0", "1") == std::vector<ArrId>{"e"});
  CHECK(hom_set(*two, "1", "0").empty());
  CHECK(hom_set(*two, "0", "0") == std::vector<ArrId>{"id_0"});
  CHECK_THROWS_AS((void)hom_set(*two, "missing", "0"), UnknownObject);
}

TEST_CASE("path commutativity") {
  auto two = fixtures::walking_arrow();
  CHECK(is_commutative(*two, ArrowPath{{"e"}}, ArrowPath{{"id_0", "e"}}));

  auto three = fixtures::chain(3);
  CHECK(is_commutative(*three, ArrowPath{{"le_0_1", "le_1_2"}}, ArrowPath{{"le_0_2"}}));

  auto pair = fixtures::parallel_pair();
  CHECK_FALSE(is_commutative(*pair, ArrowPath{{"pf"}}, ArrowPath{{"pg"}}));

  CHECK_THROWS_AS((void)is_commutative(*two, ArrowPath{{"e"}}, ArrowPath{{"id_0"}}),
                  EndpointMismatch);
  CHECK_THROWS_AS((void)fold_path(*two, ArrowPath{{}}), Error);
  CHECK_THROWS_AS((void)fold_path(*two, ArrowPath{{"e", "e"}}), NotComposable);
}

TEST_CASE("is_commutative is reflexive, symmetric, identity-padded") {
  auto diamond = fixtures::diamond();
  for (const ArrId& f : diamond->arrows()) {
    ArrowPath p{{f}};
    CHECK(is_commutative(*diamond, p, p));
    ArrowPath padded{{diamond->identity(diamond->dom(f)), f}};
    CHECK(is_commutative(*diamond, p, padded));
    CHECK(is_commutative(*diamond, padded, p));
    ArrowPath padded_right{{f, diamond->identity(diamond->cod(f))}};
    CHECK(is_commutative(*diamond, p, padded_right));
  }
}

TEST_CASE("poset factories") {
  auto chain1 = fixtures::chain(1);
  CHECK(chain1->object_count() == 1);
  CHECK(chain1->arrow_count() == 1);

  auto chain2 = fixtures::chain(2);
  CHECK(chain2->object_count() == 2);
  CHECK(chain2->arrow_count() == 3);

  auto diamond = fixtures::diamond();
  CHECK(diamond->object_count() == 4);
  // oracle: count related pairs straight from the order
  std::size_t related = 0;
  auto leq = [](const ObjId& x, const ObjId& y) {
    if (x == y) return true;
    if (x == "bot") return true;
    if (y == "top") return true;
    return false;
  };
  for (const ObjId& x : diamond->objects())
    for (const ObjId& y : diamond->objects())
      if (leq(x, y)) ++related;
  CHECK(related == 9);
  CHECK(diamond->arrow_count() == related);
  CHECK(validate_category(*diamond).ok());
}

TEST_CASE("non-partial orders are rejected") {
  std::vector<ObjId> elems{"x", "y"};
  CHECK_THROWS_AS(make_poset_category("Cycle", elems,
                                      [](const ObjId&, const ObjId&) { return true; }),
                  NotAPartialOrder);
  CHECK_THROWS_AS(make_poset_category("Irrefl", elems,
                                      [](const ObjId& a, const ObjId& b) { return a != b; }),
                  NotAPartialOrder);
}

TEST_CASE("product categories") {
  auto one = fixtures::terminal_category();
  auto two = fixtures::walking_arrow();

  auto ones = product_category({one, one});
  CHECK(ones->object_count() == 1);
  CHECK(ones->arrow_count() == 1);

  auto twos = product_category({two, two});
  CHECK(twos->object_count() == 4);
  CHECK(twos->arrow_count() == 9);  // 3 x 3
  CHECK(validate_category(*twos).ok());

  // D^1 = D, same value
  auto single = product_category({two});
  CHECK(single->name() == two->name());
  CHECK(single->extensionally_equal(*two));

  CHECK_THROWS_AS(product_category({}), InvalidFactor);
}

TEST_CASE("product counts are multiplicative on the random corpus") {
  auto corpus = support::random_category_corpus(8);
  for (std::size_t i = 0; i + 1 < corpus.size(); i += 2) {
    const auto& a = corpus[i];
    const auto& b = corpus[i + 1];
    if (a->arrow_count() * b->arrow_count() > 400) continue;
    auto p = product_category({a, b});
    CHECK(p->object_count() == a->object_count() * b->object_count());
    CHECK(p->arrow_count() == a->arrow_count() * b->arrow_count());
    CHECK(validate_category(*p).ok());
  }
}

TEST_CASE("random corpus categories all validate") {
  for (const auto& cat : support::random_category_corpus()) {
    INFO(cat->name());
    CHECK(validate_category(*cat).ok());
    CHECK(cat->object_count() <= 6);
    CHECK(cat->arrow_count() <= 20);
  }
}

TEST_CASE("opposite category swaps boundaries and transposes the table") {
  auto three = fixtures::chain(3);
  auto op = opposite_category(three);
  CHECK(validate_category(*op).ok());
  CHECK(op->dom("le_0_1") == "1");
  CHECK(op->cod("le_0_1") == "0");
  CHECK(op->compose("le_1_2", "le_0_1") == "le_0_2");
  auto opop = opposite_category(op);
  CHECK(opop->arrow_count() == three->arrow_count());
  for (const ArrId& f : three->arrows()) {
    CHECK(opop->dom(f) == three->dom(f));
    CHECK(opop->cod(f) == three->cod(f));
  }
}

TEST_CASE("builder rejects malformed input") {
  CategoryBuilder b("Bad");
  b.object("x");
  CHECK_THROWS_AS(b.object("x"), Error);
  CHECK_THROWS_AS(b.arrow("f", "x", "nowhere"), UnknownObject);
  b.object("y");
  b.arrow("f", "x", "y");
  b.arrow("g", "x", "y");
  CHECK_THROWS_AS(b.composite("f", "g", "f"), NotComposable);
}
