#pragma once

#include <map>

#include "commaforge/category.hpp"

namespace commaforge {

/// Object/arrow maps between finite categories. Construction checks only
/// totality and membership of the maps; the functor laws are left to
/// validate_functor so that broken functors remain representable.
class Functor {
 public:
  Functor(CategoryRef src, CategoryRef dst, std::map<ObjId, ObjId> obj_map,
          std::map<ArrId, ArrId> arr_map);

  const CategoryRef& src() const { return src_; }
  const CategoryRef& dst() const { return dst_; }
  const ObjId& obj(const ObjId& a) const;
  const ArrId& arr(const ArrId& f) const;
  const std::map<ObjId, ObjId>& obj_map() const { return obj_map_; }
  const std::map<ArrId, ArrId>& arr_map() const { return arr_map_; }

  /// Same src/dst identity tokens.
  bool same_boundaries(const Functor& other) const;
  /// Extensional equality: same boundary tokens and identical maps.
  bool equal_maps(const Functor& other) const;

 private:
  CategoryRef src_, dst_;
  std::map<ObjId, ObjId> obj_map_;
  std::map<ArrId, ArrId> arr_map_;
};

ValidationReport validate_functor(const Functor& F);

Functor identity_functor(const CategoryRef& cat);

/// Constant functor collapsing src onto one object of dst.
Functor constant_functor(const CategoryRef& src, const CategoryRef& dst, const ObjId& at);

/// F∘G (G first). Throws BoundaryMismatch unless dst(G) = src(F).
Functor compose_functors(const Functor& F, const Functor& G);

/// Component family of a natural transformation between two parallel
/// functors, viewed as a function from src objects to dst arrows.
class NatTrans {
 public:
  /// Throws BoundaryMismatch unless F and G share src/dst tokens.
  NatTrans(Functor F, Functor G, std::map<ObjId, ArrId> components);

  const Functor& source_functor() const { return F_; }
  const Functor& target_functor() const { return G_; }
  const ArrId& at(const ObjId& a) const;
  const std::map<ObjId, ArrId>& components() const { return components_; }

  bool equal_maps(const NatTrans& other) const;

 private:
  Functor F_, G_;
  std::map<ObjId, ArrId> components_;
};

ValidationReport validate_nat_trans(const NatTrans& tau);

NatTrans identity_nat(const Functor& F);

/// tau: F => G, eta: G => H, giving F => H. Components compose pointwise.
/// Throws BoundaryMismatch unless eta's source functor equals tau's target
/// extensionally.
NatTrans vertical_compose(const NatTrans& tau, const NatTrans& eta);

/// Godement product: tau between functors D -> E, eta between functors
/// C -> D, giving tau∘eta between the composites C -> E.
NatTrans horizontal_compose(const NatTrans& tau, const NatTrans& eta);

struct IsoWitness {
  Functor forward;
  Functor backward;
};

/// ok iff backward∘forward and forward∘backward are the identity functors
/// as maps.
ValidationReport check_iso(const IsoWitness& w);

}  // namespace commaforge
