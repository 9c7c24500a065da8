#pragma once

#include <optional>

#include "commaforge/propagation.hpp"

namespace commaforge {

/// A (co)universal arrow (d, g) from c to the functor G (or from G to c
/// when couniversal), with the full mediator table: for every pair (d', f)
/// the unique factorizing arrow.
struct UniversalArrow {
  Functor G;  // D -> C
  ObjId c;    // object of C
  ObjId d;    // object of D
  ArrId g;    // c -> G(d), or G(d) -> c when couniversal
  bool couniversal = false;
  std::map<std::pair<ObjId, ArrId>, ArrId> mediators;  // (d', f) -> unique mediator
};

/// Exhaustively verifies existence and uniqueness of a factorization for
/// every (d', f), and that the stored table is exactly that assignment.
ValidationReport check_universal_arrow(const UniversalArrow& ua);

/// First (canonical order) universal arrow from c to G, or absent.
std::optional<UniversalArrow> find_universal_arrow(const Functor& G, const ObjId& c,
                                                   bool couniversal = false);

/// Apex with one leg per index object, commuting with every diagram arrow.
/// For cocones the legs run from the diagram into the apex.
struct Cone {
  Functor diagram;  // J -> C
  ObjId apex;
  std::map<ObjId, ArrId> legs;
  bool cocone = false;
};

/// Canonical text key of a cone (apex plus legs); indexes mediator tables.
std::string cone_key(const Cone& cone);

/// A terminal (or initial, for colimits) cone with its full mediator table,
/// keyed by cone_key of every competing cone.
struct LimitCertificate {
  Cone cone;
  std::map<std::string, ArrId> mediators;
};

/// All cones (cocones) over the diagram, canonical order.
std::vector<Cone> enumerate_cones(const Functor& diagram, bool cocones = false);

/// Terminal cone by exhaustive enumeration, or absent. Ties between
/// isomorphic terminal candidates break by canonical cone order.
std::optional<LimitCertificate> limit(const Functor& diagram);
/// Initial cocone, computed through the opposite category.
std::optional<LimitCertificate> colimit(const Functor& diagram);

/// Re-verifies a certificate from scratch: every cone equation, plus
/// existence, uniqueness and correctness of every mediator entry.
ValidationReport verify_limit_certificate(const LimitCertificate& cert);

struct Adjunction {
  Functor F;       // C -> D (left adjoint)
  Functor G;       // D -> C (right adjoint)
  NatTrans unit;   // Id_C => G∘F
  NatTrans counit; // F∘G => Id_D
};

/// ok iff unit/counit have the right boundaries, are natural, and both
/// triangle identities hold on every component.
ValidationReport check_adjunction(const Adjunction& adj);

/// Comma lifting of all four pieces; the result passes check_adjunction
/// whenever the input does.
Adjunction lift_adjunction(const Adjunction& adj, const Budget& budget = {});

/// Synthesizes the unit and counit of a Galois connection between thin
/// categories from the order itself; absent when F -| G fails.
std::optional<Adjunction> make_poset_adjunction(const Functor& F, const Functor& G);

/// Builds the level-2 data of the theorem against the propagated functor
/// G2 and certifies it: basic (J(id_d), (g;g)), descending/balanced wrap
/// the object in L0, ascending/balanced wrap the arrow in L1. The dual
/// orientation follows ua.couniversal.
UniversalArrow propagate_universal_arrow(const UniversalArrow& ua, const PropagationCase& pc,
                                         const Budget& budget = {});

/// Lifts the diagram through the tower by the arrow-diagonal embedding and
/// certifies a limit at level n. Throws NoBaseLimit when level 1 has none.
LimitCertificate propagate_limit(const Functor& diagram, std::size_t n,
                                 const Budget& budget = {});

}  // namespace commaforge
