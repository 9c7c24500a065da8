// Acceptance suite: runs every criterion end to end and prints one
// PASS/FAIL line per criterion. Exits nonzero if any criterion fails.
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "test_support.hpp"

using namespace commaforge;

namespace {

class Harness {
 public:
  void criterion(int number, const std::string& title, const std::function<void()>& body) {
    failures_.clear();
    try {
      body();
    } catch (const std::exception& e) {
      failures_.push_back(std::string("exception: ") + e.what());
    }
    if (failures_.empty()) {
      std::cout << "PASS criterion " << number << ": " << title << "\n";
    } else {
      ++failed_;
      std::cout << "FAIL criterion " << number << ": " << title << "\n";
      for (const auto& f : failures_) std::cout << "      " << f << "\n";
    }
  }

  void require(bool condition, const std::string& message) {
    if (!condition) failures_.push_back(message);
  }

  int finish() const {
    std::cout << (failed_ == 0 ? "acceptance: all criteria passed"
                               : "acceptance: " + std::to_string(failed_) + " criteria FAILED")
              << "\n";
    return failed_ == 0 ? 0 : 1;
  }

 private:
  std::vector<std::string> failures_;
  int failed_ = 0;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) throw Error("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int run_cli(const std::string& args) {
  std::string command = std::string(COMMAFORGE_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  return WEXITSTATUS(std::system(command.c_str()));
}

}  // namespace

int main() {
  Harness h;

  h.criterion(1, "arrow-category cardinality matches the square-enumeration oracle", [&] {
    auto two = fixtures::walking_arrow();
    LevelTower tower(two);
    CategoryRef level2 = tower.level(2);
    h.require(level2->object_count() == 3, "level 2 of Two must have 3 objects");
    h.require(level2->arrow_count() == 6, "level 2 of Two must have 6 arrows");
    auto oracle = support::oracle_square_counts(*two);
    h.require(level2->object_count() == oracle.objects, "object count disagrees with oracle");
    h.require(level2->arrow_count() == oracle.arrows, "arrow count disagrees with oracle");

    auto corpus = support::random_category_corpus(24, 6, 20);
    h.require(corpus.size() >= 20, "corpus must hold at least 20 categories");
    for (const auto& cat : corpus) {
      auto ac = make_arrow_category(cat);
      h.require(ac.cat()->object_count() == cat->arrow_count(),
                "corpus " + cat->name() + ": |Ob(C^C)| != |Arr(C)|");
      auto counts = support::oracle_square_counts(*cat);
      h.require(ac.cat()->arrow_count() == counts.arrows,
                "corpus " + cat->name() + ": square count disagrees with oracle");
    }
  });

  h.criterion(2, "peano tower stays one-object with 2^(n-1)-leaf arrow labels", [&] {
    h.require(peano(0)->object_count() == 0 && peano(0)->arrow_count() == 0,
              "peano(0) must be the empty category");
    LevelTower tower(fixtures::terminal_category());
    for (std::size_t n = 1; n <= 8; ++n) {
      CategoryRef p = peano(n);
      h.require(p->object_count() == 1, "peano(" + std::to_string(n) + ") must have 1 object");
      h.require(p->arrow_count() == 1, "peano(" + std::to_string(n) + ") must have 1 arrow");
      const ArrId& arrow = tower.level(n)->arrows().front();
      std::size_t leaves = tower.label(n, arrow).leaf_count();
      h.require(leaves == (std::size_t{1} << (n - 1)),
                "level-" + std::to_string(n) + " label must have 2^(n-1) leaves");
      h.require(support::oracle_leaf_count(arrow) == leaves,
                "structural leaf count disagrees at level " + std::to_string(n));
    }
  });

  h.criterion(3, "every lifted square yields six commutative cube equations", [&] {
    for (const auto& [name, tau] : support::nat_corpus()) {
      ArrowCategory src_ac = make_arrow_category(tau.source_functor().src());
      const auto& dst = *tau.source_functor().dst();
      for (const ArrId& s : src_ac.cat()->arrows()) {
        CubeEquations cube = cube_equations(tau, src_ac, src_ac.square(s));
        std::size_t face = 0;
        for (const auto& [p, q] : cube.equations) {
          ++face;
          h.require(is_commutative(dst, p, q),
                    name + ": face " + std::to_string(face) + " of square " + s);
        }
      }
    }
  });

  h.criterion(4, "comma lifting preserves functor and naturality laws", [&] {
    for (const auto& [name, F] : support::functor_corpus()) {
      Functor lifted = comma_lift_functor(F);
      h.require(validate_functor(lifted).ok(), "lift of functor " + name + " must validate");
    }
    for (const auto& [name, tau] : support::nat_corpus()) {
      NatTrans lifted = comma_lift_nat(tau);
      h.require(validate_nat_trans(lifted).ok(),
                "lift of transformation " + name + " must validate");
    }
    for (const auto& cat : {fixtures::terminal_category(), fixtures::walking_arrow(),
                            fixtures::chain(3), fixtures::diamond()}) {
      ArrowCategory ac = make_arrow_category(cat);
      NatTrans idnat = identity_nat(identity_functor(cat));
      h.require(nat_functor(idnat, ac).equal_maps(arrow_diagonal(ac)),
                cat->name() + ": nat-functor of identity must equal the arrow diagonal");
    }
  });

  h.criterion(5, "modulators L and K compose to identities both ways", [&] {
    for (const auto& base : {fixtures::terminal_category(), fixtures::walking_arrow()}) {
      for (const auto& idx : {fixtures::index_one(), fixtures::index_two(),
                              fixtures::index_two_discrete()}) {
        Functor L = modulator_L(base, idx);
        Functor K = modulator_K(base, idx);
        h.require(check_iso(IsoWitness{L, K}).ok(),
                  base->name() + "/" + idx->name() + ": L and K must be mutually inverse");
      }
    }
  });

  h.criterion(6, "level two is equivalent to the walking-arrow functor category", [&] {
    for (const auto& cat : {fixtures::terminal_category(), fixtures::walking_arrow(),
                            fixtures::chain(3)}) {
      h.require(check_iso(equivalence_level_two(cat)).ok(),
                cat->name() + ": equivalence witnesses must pass check_iso");
    }
  });

  h.criterion(7, "distributive laws hold through level 3", [&] {
    auto two = fixtures::walking_arrow();
    Functor a = constant_functor(two, two, "0");
    Functor b = identity_functor(two);
    NatTrans tau2 = support::poset_nat(a, b);
    NatTrans eta2 = identity_nat(b);

    auto diamond = fixtures::diamond();
    Functor idd = identity_functor(diamond);
    NatTrans taud = support::poset_nat(support::diamond_meet_a(), idd);
    NatTrans etad = support::poset_nat(idd, support::diamond_join_a());

    for (std::size_t n = 2; n <= 3; ++n) {
      h.require(check_distributive_laws(a, b, tau2, eta2, n).ok(),
                "walking-arrow fixture fails at level " + std::to_string(n));
    }
    h.require(check_distributive_laws(support::diamond_meet_a(), support::diamond_join_a(),
                                      taud, etad, 2)
                  .ok(),
              "diamond fixture fails at level 2");
    h.require(check_distributive_laws(support::diamond_meet_a(), support::diamond_join_a(),
                                      taud, etad, 3)
                  .ok(),
              "diamond fixture fails at level 3");
  });

  h.criterion(8, "the Galois adjunction survives lifting twice", [&] {
    auto adj = make_poset_adjunction(support::galois_left(), support::galois_right());
    h.require(adj.has_value(), "the 2/3 chain pair must form an adjunction");
    if (!adj) return;
    h.require(check_adjunction(*adj).ok(), "base adjunction must certify");
    Adjunction lifted = lift_adjunction(*adj);
    h.require(check_adjunction(lifted).ok(), "lifted adjunction must certify");
    Adjunction twice = lift_adjunction(lifted);
    h.require(check_adjunction(twice).ok(), "doubly lifted adjunction must certify");
  });

  h.criterion(9, "the diamond meet propagates as a limit to levels 2 and 3", [&] {
    auto diamond = fixtures::diamond();
    Functor diagram = support::discrete_pair_diagram(diamond, "a", "b");
    auto base = limit(diagram);
    h.require(base.has_value(), "base limit must exist");
    if (!base) return;
    h.require(base->cone.apex == "bot", "the base apex must be the meet");
    h.require(verify_limit_certificate(*base).ok(), "base certificate must re-verify");
    for (std::size_t n = 2; n <= 3; ++n) {
      LimitCertificate cert = propagate_limit(diagram, n);
      h.require(verify_limit_certificate(cert).ok(),
                "level-" + std::to_string(n) + " certificate must re-verify");
    }
  });

  h.criterion(10, "propagated general diagonals stay diagonal at levels 2 and 3", [&] {
    auto two = fixtures::walking_arrow();
    auto idx = fixtures::index_two();
    Functor diag = general_diagonal(two, idx, 1);
    LevelTower tower(two);
    for (std::size_t n = 2; n <= 3; ++n) {
      Functor prop = propagate_functor(diag, ascending_case(idx, two), n);
      CategoryRef level = tower.level(n);
      FunctorCategory fc = make_functor_category(idx, level);
      for (const ObjId& x : level->objects()) {
        const Functor& image = fc.decode_object(prop.obj(x));
        for (const ObjId& aj : idx->objects())
          h.require(image.obj(aj) == x,
                    "level " + std::to_string(n) + ": object image at " + x +
                        " must be constant");
        for (const ArrId& l : idx->arrows())
          h.require(image.arr(l) == level->identity(x),
                    "level " + std::to_string(n) + ": index arrows must map to identities");
      }
      for (const ArrId& s : level->arrows()) {
        const NatTrans& image = fc.decode_arrow(prop.arr(s));
        for (const ObjId& aj : idx->objects())
          h.require(image.at(aj) == s,
                    "level " + std::to_string(n) + ": arrow image at " + s +
                        " must be constant");
      }
    }
  });

  h.criterion(11, "the CS monoid acts compatibly and fails below the base", [&] {
    auto two = fixtures::walking_arrow();
    std::vector<LeveledConcept> concepts;
    concepts.push_back(LeveledConcept::make_category(two));
    concepts.push_back(LeveledConcept::make_functor(
        support::poset_functor(two, two, {{"0", "0"}, {"1", "0"}}), basic_case()));
    concepts.push_back(LeveledConcept::make_nat(
        support::poset_nat(constant_functor(two, two, "0"), identity_functor(two)),
        basic_case()));

    for (const LeveledConcept& x : concepts) {
      h.require(cs_act(CSElement{0}, x).extensionally_equal(x), "g_0 must act as identity");
      for (long long n = 0; n <= 3; ++n) {
        for (long long m = 0; n + m <= 3; ++m) {
          LeveledConcept lhs = cs_act(CSElement{n}, cs_act(CSElement{m}, x));
          LeveledConcept rhs = cs_act(cs_compose(CSElement{n}, CSElement{m}), x);
          h.require(lhs.extensionally_equal(rhs),
                    "g_" + std::to_string(n) + " . g_" + std::to_string(m) +
                        " compatibility fails");
        }
      }
      bool undefined = false;
      try {
        (void)cs_act(CSElement{-1}, x);
      } catch (const UndefinedAction&) {
        undefined = true;
      }
      h.require(undefined, "negative action on a base concept must be undefined");
    }
  });

  h.criterion(12, "the .cat corpus round-trips and the CLI honors its exit codes", [&] {
    const std::string dir = COMMAFORGE_FIXTURE_DIR;
    for (const char* name : {"one.cat", "two.cat", "three.cat", "diamond.cat", "pair.cat",
                             "monoid.cat", "galois.cat", "workspace.cat", "limits.cat",
                             "empty.cat"}) {
      Workspace ws = parse(slurp(dir + "/" + std::string(name)));
      h.require(ws.extensionally_equal(parse(serialize(ws))),
                std::string(name) + " must round-trip");
    }
    h.require(run_cli("validate " + dir + "/galois.cat") == 0, "valid file must exit 0");
    h.require(run_cli("validate " + dir + "/bad_closure.cat") == 1,
              "validation failure must exit 1");
    h.require(run_cli("level " + dir + "/two.cat --category Two") == 2,
              "usage error must exit 2");
    h.require(run_cli("--budget 3 level " + dir + "/two.cat --category Two --n 2") == 3,
              "budget exhaustion must exit 3");
  });

  return h.finish();
}
