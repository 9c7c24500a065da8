#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <thread>

#include "test_support.hpp"

using namespace commaforge;

TEST_CASE("arrow categories of the small fixtures") {
  auto one = make_arrow_category(fixtures::terminal_category());
  CHECK(one.cat()->object_count() == 1);
  CHECK(one.cat()->arrow_count() == 1);

  auto two = make_arrow_category(fixtures::walking_arrow());
  CHECK(two.cat()->object_count() == 3);
  CHECK(two.cat()->arrow_count() == 6);
  CHECK(validate_category(*two.cat()).ok());

  // independent brute-force square enumeration
  auto counts = support::oracle_square_counts(*fixtures::walking_arrow());
  CHECK(two.cat()->object_count() == counts.objects);
  CHECK(two.cat()->arrow_count() == counts.arrows);

  auto zero = make_arrow_category(fixtures::empty_category());
  CHECK(zero.cat()->object_count() == 0);
  CHECK(zero.cat()->arrow_count() == 0);
}

TEST_CASE("arrow category counts match the oracle on the random corpus") {
  for (const auto& cat : support::random_category_corpus(12)) {
    INFO(cat->name());
    auto ac = make_arrow_category(cat);
    CHECK(ac.cat()->object_count() == cat->arrow_count());
    auto counts = support::oracle_square_counts(*cat);
    CHECK(ac.cat()->arrow_count() == counts.arrows);
    CHECK(validate_category(*ac.cat()).ok());
  }
}

TEST_CASE("every constructed square commutes in the base") {
  auto diamond = fixtures::diamond();
  auto ac = make_arrow_category(diamond);
  for (const ArrId& s : ac.cat()->arrows()) {
    SquareArrow sq = ac.square(s);
    const ArrId f = ac.decapsulate(sq.src);
    const ArrId g = ac.decapsulate(sq.dst);
    CHECK(diamond->compose(f, sq.k) == diamond->compose(sq.h, g));
  }
}

TEST_CASE("size budget failure is loud") {
  Budget tiny;
  tiny.max_arrows = 3;
  CHECK_THROWS_AS(make_arrow_category(fixtures::walking_arrow(), tiny), SizeBudgetExceeded);
}

TEST_CASE("comma projections") {
  auto ac = make_arrow_category(fixtures::walking_arrow());
  Functor fst = proj_fst(ac);
  Functor snd = proj_snd(ac);
  CHECK(validate_functor(fst).ok());
  CHECK(validate_functor(snd).ok());
  CHECK(fst.obj("J(e)") == "0");
  CHECK(snd.obj("J(e)") == "1");
  // identity squares project to identities
  const ObjId x = ac.encapsulate("e");
  CHECK(fst.arr(ac.cat()->identity(x)) == "id_0");
  CHECK(snd.arr(ac.cat()->identity(x)) == "id_1");
}

TEST_CASE("psi picks out the encapsulated arrow") {
  auto two = fixtures::walking_arrow();
  auto ac = make_arrow_category(two);
  NatTrans p = psi(ac);
  CHECK(p.at("J(e)") == "e");
  CHECK(p.at("J(id_0)") == "id_0");
  CHECK(validate_nat_trans(p).ok());

  // naturality at the (e;e) square, by direct composition
  ArrId s = ac.square_id("e", "e", "J(id_0)", "J(id_1)");
  SquareArrow sq = ac.square(s);
  CHECK(two->compose(p.at(sq.src), sq.k) == two->compose(sq.h, p.at(sq.dst)));
}

TEST_CASE("encapsulation is a bijection") {
  auto three = fixtures::chain(3);
  auto ac = make_arrow_category(three);
  CHECK(ac.encapsulate("le_0_1") == "J(le_0_1)");
  ArrowObject ao = ac.arrow_object("J(le_0_1)");
  CHECK(ao.a == "0");
  CHECK(ao.b == "1");
  CHECK(ao.f == "le_0_1");
  for (const ArrId& f : three->arrows()) CHECK(ac.decapsulate(ac.encapsulate(f)) == f);
  for (const ObjId& x : ac.cat()->objects()) CHECK(ac.encapsulate(ac.decapsulate(x)) == x);
  CHECK_THROWS_AS((void)ac.encapsulate("nope"), UnknownArrow);
  CHECK_THROWS_AS((void)ac.decapsulate("J(nope)"), UnknownObject);
}

TEST_CASE("arrow diagonal") {
  auto one_ac = make_arrow_category(fixtures::terminal_category());
  Functor d1 = arrow_diagonal(one_ac);
  CHECK(validate_functor(d1).ok());

  auto two = fixtures::walking_arrow();
  auto ac = make_arrow_category(two);
  Functor d = arrow_diagonal(ac);
  CHECK(validate_functor(d).ok());
  CHECK(d.obj("0") == "J(id_0)");
  CHECK(d.arr("e") == ac.square_id("e", "e", "J(id_0)", "J(id_1)"));

  // the nat-functor of the identity transformation is the diagonal
  NatTrans idnat = identity_nat(identity_functor(two));
  CHECK(nat_functor(idnat, ac).equal_maps(d));
}

TEST_CASE("the (f;f) square exists for every base arrow") {
  for (const auto& cat : {fixtures::walking_arrow(), fixtures::diamond()}) {
    auto ac = make_arrow_category(cat);
    for (const ArrId& f : cat->arrows()) {
      ObjId src = ac.encapsulate(cat->identity(cat->dom(f)));
      ObjId dst = ac.encapsulate(cat->identity(cat->cod(f)));
      CHECK_NOTHROW((void)ac.square_id(f, f, src, dst));
    }
  }
}

TEST_CASE("comma lifting of functors") {
  auto two = fixtures::walking_arrow();
  auto three = fixtures::chain(3);

  Functor lifted_id = comma_lift_functor(identity_functor(two));
  CHECK(lifted_id.equal_maps(identity_functor(make_arrow_category(two).cat())));

  Functor konst = constant_functor(two, fixtures::terminal_category(), "pt");
  Functor lifted_konst = comma_lift_functor(konst);
  CHECK(lifted_konst.equal_maps(constant_functor(make_arrow_category(two).cat(),
                                                 make_arrow_category(fixtures::terminal_category()).cat(),
                                                 "J(id_pt)")));

  // inclusion Two -> Chain3, evaluated on all six arrows
  auto src_ac = make_arrow_category(two);
  auto dst_ac = make_arrow_category(three);
  Functor incl = support::chain_inclusion();
  Functor lifted = comma_lift_functor(incl, src_ac, dst_ac);
  CHECK(validate_functor(lifted).ok());
  CHECK(lifted.obj("J(e)") == "J(le_0_1)");
  for (const ArrId& s : src_ac.cat()->arrows()) {
    SquareArrow sq = src_ac.square(s);
    SquareArrow img = dst_ac.square(lifted.arr(s));
    CHECK(img.h == incl.arr(sq.h));
    CHECK(img.k == incl.arr(sq.k));
  }
}

TEST_CASE("lifted functor agrees with the compositional formula") {
  // object part J∘F1∘psi, arrow part (F1 Fst1; F1 Snd1)
  auto src_ac = make_arrow_category(fixtures::walking_arrow());
  auto dst_ac = make_arrow_category(fixtures::chain(3));
  Functor F = support::galois_left();
  Functor lifted = comma_lift_functor(F, src_ac, dst_ac);
  NatTrans p = psi(src_ac);
  Functor fst = proj_fst(src_ac);
  Functor snd = proj_snd(src_ac);
  for (const ObjId& x : src_ac.cat()->objects())
    CHECK(lifted.obj(x) == dst_ac.encapsulate(F.arr(p.at(x))));
  for (const ArrId& s : src_ac.cat()->arrows()) {
    SquareArrow img = dst_ac.square(lifted.arr(s));
    CHECK(img.h == F.arr(fst.arr(s)));
    CHECK(img.k == F.arr(snd.arr(s)));
  }
}

TEST_CASE("comma lifting of natural transformations") {
  auto diamond = fixtures::diamond();
  NatTrans up = support::poset_nat(support::diamond_meet_a(), identity_functor(diamond));

  NatTrans lifted_id = comma_lift_nat(identity_nat(identity_functor(diamond)));
  CHECK(lifted_id.equal_maps(identity_nat(identity_functor(make_arrow_category(diamond).cat()))));

  auto ac = make_arrow_category(diamond);
  NatTrans lifted = comma_lift_nat(up, ac, ac);
  CHECK(validate_nat_trans(lifted).ok());
  for (const ObjId& x : ac.cat()->objects()) {
    ArrowObject ao = ac.arrow_object(x);
    SquareArrow comp = ac.square(lifted.at(x));
    CHECK(comp.h == up.at(ao.a));
    CHECK(comp.k == up.at(ao.b));
  }
}

TEST_CASE("nat-functor") {
  auto diamond = fixtures::diamond();
  NatTrans up = support::poset_nat(support::diamond_meet_a(), identity_functor(diamond));
  auto ac = make_arrow_category(diamond);
  Functor n = nat_functor(up, ac);
  CHECK(validate_functor(n).ok());
  for (const ObjId& a : diamond->objects()) CHECK(n.obj(a) == ac.encapsulate(up.at(a)));
  for (const ArrId& f : diamond->arrows()) {
    SquareArrow sq = ac.square(n.arr(f));
    CHECK(sq.h == support::diamond_meet_a().arr(f));
    CHECK(sq.k == f);
  }
}

TEST_CASE("cube equations") {
  auto two = fixtures::walking_arrow();
  auto ac2 = make_arrow_category(two);

  // identity transformation, identity square: six trivial equations
  NatTrans idnat = identity_nat(identity_functor(two));
  SquareArrow idsq = ac2.square(ac2.cat()->identity("J(e)"));
  CubeEquations cube = cube_equations(idnat, ac2, idsq);
  for (const auto& [p, q] : cube.equations) CHECK(is_commutative(*two, p, q));

  // between constant functors the faces collapse to identity-ish equations
  auto three = fixtures::chain(3);
  NatTrans collapse = support::poset_nat(constant_functor(two, three, "0"),
                                         constant_functor(two, three, "2"));
  CubeEquations collapsed = cube_equations(collapse, ac2, ac2.square(ac2.square_id(
      "e", "e", "J(id_0)", "J(id_1)")));
  for (const auto& [p, q] : collapsed.equations) CHECK(is_commutative(*three, p, q));

  // poset fixture: every square of the lifted source
  auto diamond = fixtures::diamond();
  auto acd = make_arrow_category(diamond);
  NatTrans up = support::poset_nat(support::diamond_meet_a(), identity_functor(diamond));
  for (const ArrId& s : acd.cat()->arrows()) {
    CubeEquations c = cube_equations(up, acd, acd.square(s));
    for (const auto& [p, q] : c.equations) CHECK(is_commutative(*diamond, p, q));
  }
}

TEST_CASE("level towers") {
  LevelTower two_tower(fixtures::walking_arrow());
  CHECK(two_tower.level(1)->name() == "Two");
  CHECK(two_tower.level(2)->object_count() == 3);
  CHECK(two_tower.level(2)->arrow_count() == 6);
  // idempotent materialization
  CHECK(two_tower.level(2).get() == two_tower.level(2).get());

  LevelTower one_tower(fixtures::terminal_category());
  for (std::size_t n = 1; n <= 8; ++n) {
    CHECK(one_tower.level(n)->object_count() == 1);
    CHECK(one_tower.level(n)->arrow_count() == 1);
  }
}

TEST_CASE("tower materialization is safe under concurrent access") {
  LevelTower tower(fixtures::walking_arrow());
  CategoryRef a, b;
  std::thread t1([&] { a = tower.level(3); });
  std::thread t2([&] { b = tower.level(3); });
  t1.join();
  t2.join();
  CHECK(a.get() == b.get());
}

TEST_CASE("peano naturals") {
  CHECK(peano(0)->object_count() == 0);
  CHECK(peano(0)->arrow_count() == 0);
  CHECK(peano(1)->name() == "One");
  for (std::size_t n = 1; n <= 8; ++n) {
    auto p = peano(n);
    CHECK(p->object_count() == 1);
    CHECK(p->arrow_count() == 1);
  }
}

TEST_CASE("arrow labels count their leaves") {
  LevelTower one_tower(fixtures::terminal_category());
  for (std::size_t n = 1; n <= 8; ++n) {
    const ArrId& arrow = one_tower.level(n)->arrows().front();
    ArrowLabel label = one_tower.label(n, arrow);
    CHECK(label.leaf_count() == std::size_t{1} << (n - 1));
    CHECK(label.depth() == n - 1);
    // independent structural count over the raw id string
    CHECK(support::oracle_leaf_count(arrow) == label.leaf_count());
    // the parser agrees with the tower decoding
    CHECK(ArrowLabel::parse(arrow).leaf_count() == label.leaf_count());
  }

  LevelTower two_tower(fixtures::walking_arrow());
  for (const ArrId& s : two_tower.level(3)->arrows()) {
    CHECK(two_tower.label(3, s).leaf_count() == 4);
    CHECK(ArrowLabel::parse(s).leaf_count() == 4);
  }

  CHECK(ArrowLabel::leaf("e").leaf_count() == 1);
  CHECK_THROWS_AS(ArrowLabel::parse(""), MalformedLabel);
  CHECK_THROWS_AS(ArrowLabel::parse("(a;b"), MalformedLabel);
  CHECK_THROWS_AS(ArrowLabel::parse("(a;b)@x"), MalformedLabel);
}
