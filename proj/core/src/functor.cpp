#include "commaforge/functor.hpp"

namespace commaforge {

Functor::Functor(CategoryRef src, CategoryRef dst, std::map<ObjId, ObjId> obj_map,
                 std::map<ArrId, ArrId> arr_map)
    : src_(std::move(src)), dst_(std::move(dst)), obj_map_(std::move(obj_map)),
      arr_map_(std::move(arr_map)) {
  if (!src_ || !dst_) throw Error("functor with null boundary");
  for (const ObjId& a : src_->objects()) {
    auto it = obj_map_.find(a);
    if (it == obj_map_.end())
      throw UnknownObject("functor object map is not total: missing '" + a + "'");
    if (!dst_->has_object(it->second))
      throw UnknownObject("functor maps '" + a + "' to unknown object '" + it->second + "'");
  }
  for (const ArrId& f : src_->arrows()) {
    auto it = arr_map_.find(f);
    if (it == arr_map_.end())
      throw UnknownArrow("functor arrow map is not total: missing '" + f + "'");
    if (!dst_->has_arrow(it->second))
      throw UnknownArrow("functor maps '" + f + "' to unknown arrow '" + it->second + "'");
  }
  if (obj_map_.size() != src_->object_count() || arr_map_.size() != src_->arrow_count())
    throw Error("functor maps mention ids outside the source category");
}

const ObjId& Functor::obj(const ObjId& a) const {
  auto it = obj_map_.find(a);
  if (it == obj_map_.end()) throw UnknownObject("functor has no image for object '" + a + "'");
  return it->second;
}

const ArrId& Functor::arr(const ArrId& f) const {
  auto it = arr_map_.find(f);
  if (it == arr_map_.end()) throw UnknownArrow("functor has no image for arrow '" + f + "'");
  return it->second;
}

bool Functor::same_boundaries(const Functor& other) const {
  return src_->name() == other.src_->name() && dst_->name() == other.dst_->name();
}

bool Functor::equal_maps(const Functor& other) const {
  return same_boundaries(other) && obj_map_ == other.obj_map_ && arr_map_ == other.arr_map_;
}

ValidationReport validate_functor(const Functor& F) {
  ValidationReport report;
  const auto& src = *F.src();
  const auto& dst = *F.dst();

  for (const ArrId& f : src.arrows()) {
    const ArrId& img = F.arr(f);
    if (dst.dom(img) != F.obj(src.dom(f)) || dst.cod(img) != F.obj(src.cod(f)))
      report.add("dom/cod coherence", {f, img});
  }
  for (const ObjId& a : src.objects()) {
    if (F.arr(src.identity(a)) != dst.identity(F.obj(a)))
      report.add("identity preservation", {a});
  }
  for (const ArrId& f : src.arrows()) {
    for (const ArrId& g : src.arrows_from(src.cod(f))) {
      auto fg = src.try_compose(f, g);
      if (!fg) continue;  // left for validate_category
      auto img = dst.try_compose(F.arr(f), F.arr(g));
      if (!img || *img != F.arr(*fg)) report.add("composition preservation", {f, g});
    }
  }
  return report;
}

Functor identity_functor(const CategoryRef& cat) {
  std::map<ObjId, ObjId> om;
  std::map<ArrId, ArrId> am;
  for (const ObjId& a : cat->objects()) om[a] = a;
  for (const ArrId& f : cat->arrows()) am[f] = f;
  return Functor(cat, cat, std::move(om), std::move(am));
}

Functor constant_functor(const CategoryRef& src, const CategoryRef& dst, const ObjId& at) {
  std::map<ObjId, ObjId> om;
  std::map<ArrId, ArrId> am;
  const ArrId& id = dst->identity(at);
  for (const ObjId& a : src->objects()) om[a] = at;
  for (const ArrId& f : src->arrows()) am[f] = id;
  return Functor(src, dst, std::move(om), std::move(am));
}

Functor compose_functors(const Functor& F, const Functor& G) {
  if (G.dst()->name() != F.src()->name())
    throw BoundaryMismatch("cannot compose functors: " + G.dst()->name() + " != " +
                           F.src()->name());
  std::map<ObjId, ObjId> om;
  std::map<ArrId, ArrId> am;
  for (const auto& [a, ga] : G.obj_map()) om[a] = F.obj(ga);
  for (const auto& [f, gf] : G.arr_map()) am[f] = F.arr(gf);
  return Functor(G.src(), F.dst(), std::move(om), std::move(am));
}

NatTrans::NatTrans(Functor F, Functor G, std::map<ObjId, ArrId> components)
    : F_(std::move(F)), G_(std::move(G)), components_(std::move(components)) {
  if (!F_.same_boundaries(G_))
    throw BoundaryMismatch("natural transformation between functors with different boundaries");
  for (const ObjId& a : F_.src()->objects()) {
    auto it = components_.find(a);
    if (it == components_.end())
      throw UnknownObject("transformation component family is not total: missing '" + a + "'");
    if (!F_.dst()->has_arrow(it->second))
      throw UnknownArrow("component at '" + a + "' is an unknown arrow '" + it->second + "'");
  }
  if (components_.size() != F_.src()->object_count())
    throw Error("transformation components mention objects outside the source category");
}

const ArrId& NatTrans::at(const ObjId& a) const {
  auto it = components_.find(a);
  if (it == components_.end()) throw UnknownObject("no component at object '" + a + "'");
  return it->second;
}

bool NatTrans::equal_maps(const NatTrans& other) const {
  return F_.equal_maps(other.F_) && G_.equal_maps(other.G_) && components_ == other.components_;
}

ValidationReport validate_nat_trans(const NatTrans& tau) {
  ValidationReport report;
  const auto& F = tau.source_functor();
  const auto& G = tau.target_functor();
  const auto& src = *F.src();
  const auto& dst = *F.dst();

  for (const ObjId& a : src.objects()) {
    const ArrId& c = tau.at(a);
    if (dst.dom(c) != F.obj(a) || dst.cod(c) != G.obj(a)) report.add("typing", {a, c});
  }
  if (!report.ok()) return report;  // naturality needs well-typed components

  for (const ArrId& f : src.arrows()) {
    const ObjId& a = src.dom(f);
    const ObjId& b = src.cod(f);
    // G(f)∘tau(a) = tau(b)∘F(f)
    auto left = dst.try_compose(tau.at(a), G.arr(f));
    auto right = dst.try_compose(F.arr(f), tau.at(b));
    if (!left || !right || *left != *right) report.add("naturality", {f});
  }
  return report;
}

NatTrans identity_nat(const Functor& F) {
  std::map<ObjId, ArrId> comps;
  for (const ObjId& a : F.src()->objects()) comps[a] = F.dst()->identity(F.obj(a));
  return NatTrans(F, F, std::move(comps));
}

NatTrans vertical_compose(const NatTrans& tau, const NatTrans& eta) {
  if (!tau.target_functor().equal_maps(eta.source_functor()))
    throw BoundaryMismatch("vertical composition needs tau: F => G and eta: G => H");
  const auto& dst = *tau.source_functor().dst();
  std::map<ObjId, ArrId> comps;
  for (const auto& [a, c] : tau.components()) comps[a] = dst.compose(c, eta.at(a));
  return NatTrans(tau.source_functor(), eta.target_functor(), std::move(comps));
}

NatTrans horizontal_compose(const NatTrans& tau, const NatTrans& eta) {
  // tau: F1 => G1 between D -> E; eta: F2 => G2 between C -> D.
  const Functor& F1 = tau.source_functor();
  const Functor& G1 = tau.target_functor();
  const Functor& F2 = eta.source_functor();
  const Functor& G2 = eta.target_functor();
  if (F2.dst()->name() != F1.src()->name())
    throw BoundaryMismatch("horizontal composition boundary mismatch: " + F2.dst()->name() +
                           " != " + F1.src()->name());
  const auto& E = *F1.dst();
  std::map<ObjId, ArrId> comps;
  for (const ObjId& c : F2.src()->objects()) {
    // (tau∘eta)(c) = tau(G2(c)) ∘ F1(eta(c))
    comps[c] = E.compose(F1.arr(eta.at(c)), tau.at(G2.obj(c)));
  }
  return NatTrans(compose_functors(F1, F2), compose_functors(G1, G2), std::move(comps));
}

ValidationReport check_iso(const IsoWitness& w) {
  ValidationReport report;
  const Functor& L = w.forward;
  const Functor& K = w.backward;
  if (L.dst()->name() != K.src()->name() || K.dst()->name() != L.src()->name()) {
    report.add("boundaries", {L.src()->name(), L.dst()->name(), K.src()->name(),
                              K.dst()->name()});
    return report;
  }
  if (!compose_functors(K, L).equal_maps(identity_functor(L.src())))
    report.add("backward∘forward != id", {L.src()->name()});
  if (!compose_functors(L, K).equal_maps(identity_functor(K.src())))
    report.add("forward∘backward != id", {K.src()->name()});
  return report;
}

}  // namespace commaforge
