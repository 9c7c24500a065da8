#pragma once

#include <variant>

#include "commaforge/arrow_hierarchy.hpp"

namespace commaforge {

/// The functor category C^J realized as a finite category: objects encode
/// functors J -> C, arrows encode natural transformations, composition is
/// vertical composition.
///
/// Canonical ids: an object serializes its maps as
/// "F{a1>x,...|l1>f,...}" (index identities omitted, they are forced); an
/// arrow is "N{a1>c,...}@<src>-><dst>".
class FunctorCategory {
 public:
  const CategoryRef& index() const { return index_; }
  const CategoryRef& target() const { return target_; }
  const CategoryRef& realized() const { return realized_; }

  const Functor& decode_object(const ObjId& x) const;
  const NatTrans& decode_arrow(const ArrId& s) const;
  /// Canonical object id of a functor J -> C; throws UnknownObject if it is
  /// not one of the enumerated functors.
  ObjId encode_object(const Functor& F) const;
  ArrId encode_arrow(const NatTrans& tau) const;

 private:
  friend FunctorCategory make_functor_category(const CategoryRef&, const CategoryRef&,
                                               const Budget&);
  CategoryRef index_, target_, realized_;
  std::map<ObjId, Functor> obj_decode_;
  std::map<ArrId, NatTrans> arr_decode_;
};

/// Enumerates all functors J -> C and all natural transformations between
/// them, in canonical order. Throws SizeBudgetExceeded when the candidate
/// estimate passes budget.max_candidates or the realized category passes
/// budget.max_arrows.
FunctorCategory make_functor_category(const CategoryRef& index, const CategoryRef& target,
                                      const Budget& budget = {});

/// The mutually inverse functors witnessing C↓C = C^2: forward sends J(f)
/// to the functor picking f, backward sends a functor to J of its image of
/// l12. check_iso passes on the result.
IsoWitness equivalence_level_two(const CategoryRef& C, const Budget& budget = {});

/// The general diagonal D -> (D^m)^J: objects map to constant functors,
/// arrows to constant transformations.
Functor general_diagonal(const CategoryRef& D, const CategoryRef& J, std::size_t m,
                         const Budget& budget = {});

/// The modulators between (C^J)↓(C^J) and (C↓C)^J.
Functor modulator_L(const CategoryRef& Cn, const CategoryRef& J, const Budget& budget = {});
Functor modulator_K(const CategoryRef& Cn, const CategoryRef& J, const Budget& budget = {});

enum class PropagationKind { basic, descending, ascending, balanced };

/// Boundary shape of a propagated functor or transformation:
///   basic       F: D -> C
///   descending  F: D^J -> C            (src_base = D)
///   ascending   F: D -> C^J            (dst_base = C)
///   balanced    F: D^J -> C^J2         (src_base = D, dst_base = C)
/// The index categories modulate the step through K (before lifting, on the
/// source side) and L (after lifting, on the target side).
struct PropagationCase {
  PropagationKind kind = PropagationKind::basic;
  CategoryRef index;     // J
  CategoryRef index2;    // J2 (balanced only; defaults to index)
  CategoryRef src_base;  // D underlying F's source functor category
  CategoryRef dst_base;  // C underlying F's target functor category
};

PropagationCase basic_case();
PropagationCase descending_case(CategoryRef index, CategoryRef src_base);
PropagationCase ascending_case(CategoryRef index, CategoryRef dst_base);
PropagationCase balanced_case(CategoryRef index, CategoryRef index2, CategoryRef src_base,
                              CategoryRef dst_base);

/// Iterates the case's one-step rule n-1 times from F_1 = F. Throws
/// CaseShapeMismatch when F's boundaries do not fit the declared case.
Functor propagate_functor(const Functor& F, const PropagationCase& pc, std::size_t n,
                          const Budget& budget = {});

/// Same for natural transformations; the result runs between the
/// correspondingly propagated functors.
NatTrans propagate_nat(const NatTrans& tau, const PropagationCase& pc, std::size_t n,
                       const Budget& budget = {});

/// Basic-case distributivity at level n: (F∘G)_n = F_n∘G_n,
/// (tau∘eta)_n = tau_n∘eta_n, (tau•eta)_n = tau_n•eta_n.
/// Throws BoundaryMismatch when any of the three composites is undefined.
ValidationReport check_distributive_laws(const Functor& F, const Functor& G, const NatTrans& tau,
                                         const NatTrans& eta, std::size_t n,
                                         const Budget& budget = {});

/// Element g_n of the category-symmetry monoid/group; composition adds
/// exponents.
struct CSElement {
  long long n = 0;
};
inline CSElement cs_compose(CSElement a, CSElement b) { return CSElement{a.n + b.n}; }

enum class ConceptKind { category, functor, nat_trans };

/// A category, functor or natural transformation tagged with its level and
/// the stack of lower-level payloads that produced it. The carrier of the
/// CS(N)/CS(Z) action: comma-up steps push onto the stack, comma-down steps
/// pop it.
class LeveledConcept {
 public:
  static LeveledConcept make_category(CategoryRef base);
  static LeveledConcept make_functor(Functor F, PropagationCase pc);
  static LeveledConcept make_nat(NatTrans tau, PropagationCase pc);

  ConceptKind kind() const { return kind_; }
  std::size_t level() const { return 1 + provenance_.size(); }

  const CategoryRef& as_category() const;
  const Functor& as_functor() const;
  const NatTrans& as_nat() const;

  bool extensionally_equal(const LeveledConcept& other) const;

 private:
  friend LeveledConcept cs_act(CSElement, const LeveledConcept&, const Budget&);

  struct State {
    std::variant<CategoryRef, Functor, NatTrans> payload;
    CategoryRef src_base, dst_base;  // current-level bases for modulated cases
  };

  LeveledConcept() = default;
  void step_up(const Budget& budget);

  ConceptKind kind_ = ConceptKind::category;
  PropagationCase case_;
  State current_;
  std::vector<State> provenance_;
};

/// Monoid/group action: g_n shifts the concept n levels. Nonnegative shifts
/// always apply; negative shifts pop recorded lifts and throw
/// UndefinedAction when they would pass below level 1.
LeveledConcept cs_act(CSElement g, const LeveledConcept& x, const Budget& budget = {});

}  // namespace commaforge
