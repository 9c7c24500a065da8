#pragma once

#include <array>
#include <memory>
#include <mutex>
#include <utility>

#include "commaforge/functor.hpp"

namespace commaforge {

/// The triple <a, b, f> behind an arrow-category object J(f).
struct ArrowObject {
  ObjId id;  // encoded object of the arrow category
  ObjId a, b;
  ArrId f;
};

/// A commutative square (h;k): J(f) -> J(g), i.e. k∘f = g∘h in the base.
struct SquareArrow {
  ArrId id;  // encoded arrow of the arrow category
  ArrId h, k;
  ObjId src, dst;  // arrow-category objects
};

/// The arrow category C↓C over a base category, together with the
/// encapsulation bijection between base arrows and its objects.
///
/// Canonical ids: an object is "J(<arrow>)"; an arrow is
/// "(<h>;<k>)@<src>-><dst>". Identities follow the same square scheme.
class ArrowCategory {
 public:
  const CategoryRef& base() const { return base_; }
  const CategoryRef& cat() const { return cat_; }

  /// J: base arrow -> object id. Throws UnknownArrow.
  const ObjId& encapsulate(const ArrId& f) const;
  /// J⁻¹: object id -> base arrow. Throws UnknownObject.
  const ArrId& decapsulate(const ObjId& x) const;

  ArrowObject arrow_object(const ObjId& x) const;
  SquareArrow square(const ArrId& s) const;
  /// Canonical id of the square (h;k): src -> dst; throws UnknownArrow if no
  /// such square exists (e.g. it would not commute).
  ArrId square_id(const ArrId& h, const ArrId& k, const ObjId& src, const ObjId& dst) const;

 private:
  friend ArrowCategory make_arrow_category(const CategoryRef&, const Budget&);
  CategoryRef base_;
  CategoryRef cat_;
  std::map<ObjId, ArrId> obj_to_arrow_;
  std::map<ArrId, ObjId> arrow_to_obj_;
  std::map<ArrId, std::pair<ArrId, ArrId>> square_parts_;
};

/// Materializes C↓C: one object per base arrow, one arrow per commutative
/// square, componentwise composition. Throws SizeBudgetExceeded when the
/// square count would pass budget.max_arrows.
ArrowCategory make_arrow_category(const CategoryRef& base, const Budget& budget = {});

/// First and second comma projections C↓C -> C.
Functor proj_fst(const ArrowCategory& ac);
Functor proj_snd(const ArrowCategory& ac);

/// The fundamental transformation psi: proj_fst => proj_snd whose component
/// at J(f) is f itself. Computed from decapsulate on demand.
NatTrans psi(const ArrowCategory& ac);

/// The arrow-diagonal functor C -> C↓C: a |-> J(id_a), f |-> (f;f).
Functor arrow_diagonal(const ArrowCategory& ac);

/// Comma lifting of F: B -> D to F^: B↓B -> D↓D by the pointwise rule
/// J(f) |-> J(F(f)), (h;k) |-> (F(h);F(k)).
Functor comma_lift_functor(const Functor& F, const ArrowCategory& src_ac,
                           const ArrowCategory& dst_ac);
Functor comma_lift_functor(const Functor& F, const Budget& budget = {});

/// Comma lifting of tau: F => G; the component at J(f: a -> b) is the
/// square (tau(a);tau(b)).
NatTrans comma_lift_nat(const NatTrans& tau, const ArrowCategory& src_ac,
                        const ArrowCategory& dst_ac);
NatTrans comma_lift_nat(const NatTrans& tau, const Budget& budget = {});

/// The nat-functor N_tau: B -> D↓D with a |-> J(tau(a)), f |-> (F(f);G(f)).
Functor nat_functor(const NatTrans& tau, const ArrowCategory& dst_ac);
Functor nat_functor(const NatTrans& tau, const Budget& budget = {});

/// The six commuting faces of the cube obtained by pushing a square of the
/// source arrow category through a natural transformation: the two functor
/// images of the base square plus the four naturality faces.
struct CubeEquations {
  std::array<std::pair<ArrowPath, ArrowPath>, 6> equations;
};

/// Throws NotCommutative if any face fails is_commutative; with a valid
/// transformation and a genuine square that cannot happen.
CubeEquations cube_equations(const NatTrans& tau, const ArrowCategory& src_ac,
                             const SquareArrow& sq);

/// Binary-tree label of a tower arrow: leaves are base arrows, inner nodes
/// pair the (h;k) components of a square. A level-n arrow has depth n-1 and
/// 2^(n-1) leaves.
class ArrowLabel {
 public:
  static ArrowLabel leaf(ArrId id);
  static ArrowLabel pair(ArrowLabel left, ArrowLabel right);
  /// Parses a canonical arrow id ("(h;k)@src->dst" nesting, base ids at the
  /// leaves). Throws MalformedLabel on anything else.
  static ArrowLabel parse(const std::string& arrow_id);

  bool is_leaf() const { return !left_; }
  const ArrId& leaf_id() const;
  const ArrowLabel& left() const;
  const ArrowLabel& right() const;

  std::size_t leaf_count() const;
  std::size_t depth() const;  // leaf has depth 0

 private:
  ArrowLabel() = default;
  ArrId id_;
  std::shared_ptr<const ArrowLabel> left_, right_;
};

std::size_t leaf_count(const ArrowLabel& label);

/// The n-dimensional levels C_1 = C, C_(n+1) = C_n↓C_n, materialized lazily
/// and memoized. Materialization is serialized internally; returned values
/// are immutable and safe to share between threads.
class LevelTower {
 public:
  explicit LevelTower(CategoryRef base, Budget budget = {});

  const CategoryRef& base() const { return base_; }
  /// C_n for n >= 1. Throws SizeBudgetExceeded per the construction budget.
  CategoryRef level(std::size_t n) const;
  /// Encoding data of level n+1 over level n (materializes both).
  const ArrowCategory& arrow_data(std::size_t n) const;
  /// Label of an arrow living at level n.
  ArrowLabel label(std::size_t n, const ArrId& arrow) const;

 private:
  void materialize(std::size_t n) const;

  CategoryRef base_;
  Budget budget_;
  mutable std::mutex mutex_;
  mutable std::vector<ArrowCategory> data_;  // data_[i] is level i+2 over level i+1
};

/// Categorial naturals: peano(0) = 0 (empty), peano(1) = 1, and
/// peano(n+1) = peano(n)↓peano(n).
CategoryRef peano(std::size_t n, const Budget& budget = {});

}  // namespace commaforge
