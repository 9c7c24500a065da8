#include "commaforge/universal.hpp"

#include <functional>

namespace commaforge {

namespace {

// Mediator table for (d, g) by exhaustive search; absent when some (d', f)
// lacks a unique factorization.
std::optional<std::map<std::pair<ObjId, ArrId>, ArrId>> mediator_table(const Functor& G,
                                                                       const ObjId& c,
                                                                       const ObjId& d,
                                                                       const ArrId& g,
                                                                       bool couniversal) {
  const auto& D = *G.src();
  const auto& C = *G.dst();
  std::map<std::pair<ObjId, ArrId>, ArrId> table;
  for (const ObjId& d2 : D.objects()) {
    const std::vector<ArrId> fs = couniversal ? C.hom(G.obj(d2), c) : C.hom(c, G.obj(d2));
    for (const ArrId& f : fs) {
      const std::vector<ArrId> candidates = couniversal ? D.hom(d2, d) : D.hom(d, d2);
      std::optional<ArrId> found;
      for (const ArrId& u : candidates) {
        const ArrId factored =
            couniversal ? C.compose(G.arr(u), g) : C.compose(g, G.arr(u));
        if (factored != f) continue;
        if (found) return std::nullopt;  // not unique
        found = u;
      }
      if (!found) return std::nullopt;  // no factorization
      table.emplace(std::make_pair(d2, f), *found);
    }
  }
  return table;
}

}  // namespace

ValidationReport check_universal_arrow(const UniversalArrow& ua) {
  ValidationReport report;
  const auto& D = *ua.G.src();
  const auto& C = *ua.G.dst();

  if (!D.has_object(ua.d) || !C.has_object(ua.c) || !C.has_arrow(ua.g)) {
    report.add("typing", {ua.c, ua.d, ua.g});
    return report;
  }
  const ObjId& gd = ua.G.obj(ua.d);
  const ObjId& want_dom = ua.couniversal ? gd : ua.c;
  const ObjId& want_cod = ua.couniversal ? ua.c : gd;
  if (C.dom(ua.g) != want_dom || C.cod(ua.g) != want_cod) {
    report.add("typing", {ua.g});
    return report;
  }

  for (const ObjId& d2 : D.objects()) {
    const std::vector<ArrId> fs =
        ua.couniversal ? C.hom(ua.G.obj(d2), ua.c) : C.hom(ua.c, ua.G.obj(d2));
    for (const ArrId& f : fs) {
      const std::vector<ArrId> candidates = ua.couniversal ? D.hom(d2, ua.d) : D.hom(ua.d, d2);
      std::vector<ArrId> valid;
      for (const ArrId& u : candidates) {
        const ArrId factored =
            ua.couniversal ? C.compose(ua.G.arr(u), ua.g) : C.compose(ua.g, ua.G.arr(u));
        if (factored == f) valid.push_back(u);
      }
      if (valid.empty()) {
        report.add("existence", {d2, f});
        continue;
      }
      if (valid.size() > 1) {
        report.add("uniqueness", {d2, f, valid[0], valid[1]});
        continue;
      }
      auto it = ua.mediators.find({d2, f});
      if (it == ua.mediators.end() || it->second != valid[0])
        report.add("mediator table", {d2, f, valid[0]});
    }
  }

  // No spurious entries.
  for (const auto& [key, u] : ua.mediators) {
    const auto& [d2, f] = key;
    if (!D.has_object(d2) || !C.has_arrow(f) || !D.has_arrow(u))
      report.add("mediator table", {d2, f, u});
  }
  return report;
}

std::optional<UniversalArrow> find_universal_arrow(const Functor& G, const ObjId& c,
                                                   bool couniversal) {
  const auto& D = *G.src();
  const auto& C = *G.dst();
  if (!C.has_object(c)) throw UnknownObject("no object '" + c + "' in " + C.name());
  for (const ObjId& d : D.objects()) {
    const std::vector<ArrId> gs = couniversal ? C.hom(G.obj(d), c) : C.hom(c, G.obj(d));
    for (const ArrId& g : gs) {
      auto table = mediator_table(G, c, d, g, couniversal);
      if (!table) continue;
      return UniversalArrow{G, c, d, g, couniversal, std::move(*table)};
    }
  }
  return std::nullopt;
}

std::string cone_key(const Cone& cone) {
  std::string key = cone.apex + "|";
  bool first = true;
  for (const ObjId& aj : cone.diagram.src()->objects()) {
    if (!first) key += ",";
    first = false;
    key += aj + ">" + cone.legs.at(aj);
  }
  return key;
}

std::vector<Cone> enumerate_cones(const Functor& diagram, bool cocones) {
  const auto& J = *diagram.src();
  const auto& C = *diagram.dst();
  std::vector<Cone> cones;
  const auto& idx_objs = J.objects();

  for (const ObjId& apex : C.objects()) {
    std::map<ObjId, ArrId> legs;
    std::function<void(std::size_t)> assign = [&](std::size_t oi) {
      if (oi == idx_objs.size()) {
        cones.push_back(Cone{diagram, apex, legs, cocones});
        return;
      }
      const ObjId& aj = idx_objs[oi];
      const std::vector<ArrId> candidates =
          cocones ? C.hom(diagram.obj(aj), apex) : C.hom(apex, diagram.obj(aj));
      for (const ArrId& leg : candidates) {
        legs[aj] = leg;
        // Check every index arrow with both endpoints assigned.
        bool ok = true;
        for (const ArrId& l : J.arrows()) {
          const ObjId& src = J.dom(l);
          const ObjId& dst = J.cod(l);
          if (!legs.count(src) || !legs.count(dst)) continue;
          if (cocones) {
            if (C.compose(diagram.arr(l), legs.at(dst)) != legs.at(src)) ok = false;
          } else {
            if (C.compose(legs.at(src), diagram.arr(l)) != legs.at(dst)) ok = false;
          }
          if (!ok) break;
        }
        if (ok) assign(oi + 1);
        legs.erase(aj);
      }
    };
    assign(0);
  }
  return cones;
}

namespace {

// Unique mediator from `from` into terminal candidate `to` (or out of an
// initial candidate when cocones). Absent when existence or uniqueness
// fails.
std::optional<ArrId> unique_mediator(const Cone& from, const Cone& to) {
  const auto& C = *to.diagram.dst();
  const bool cocone = to.cocone;
  const std::vector<ArrId> candidates =
      cocone ? C.hom(to.apex, from.apex) : C.hom(from.apex, to.apex);
  std::optional<ArrId> found;
  for (const ArrId& m : candidates) {
    bool commutes = true;
    for (const ObjId& aj : to.diagram.src()->objects()) {
      const ArrId folded = cocone ? C.compose(to.legs.at(aj), m)
                                  : C.compose(m, to.legs.at(aj));
      if (folded != from.legs.at(aj)) {
        commutes = false;
        break;
      }
    }
    if (!commutes) continue;
    if (found) return std::nullopt;
    found = m;
  }
  return found;
}

std::optional<LimitCertificate> universal_cone(const Functor& diagram, bool cocones) {
  std::vector<Cone> cones = enumerate_cones(diagram, cocones);
  for (const Cone& candidate : cones) {
    LimitCertificate cert{candidate, {}};
    bool universal = true;
    for (const Cone& other : cones) {
      auto m = unique_mediator(other, candidate);
      if (!m) {
        universal = false;
        break;
      }
      cert.mediators.emplace(cone_key(other), *m);
    }
    if (universal) return cert;
  }
  return std::nullopt;
}

}  // namespace

std::optional<LimitCertificate> limit(const Functor& diagram) {
  return universal_cone(diagram, false);
}

std::optional<LimitCertificate> colimit(const Functor& diagram) {
  return universal_cone(diagram, true);
}

ValidationReport verify_limit_certificate(const LimitCertificate& cert) {
  ValidationReport report;
  const Cone& cone = cert.cone;
  const auto& J = *cone.diagram.src();
  const auto& C = *cone.diagram.dst();

  for (const ObjId& aj : J.objects()) {
    auto it = cone.legs.find(aj);
    if (it == cone.legs.end() || !C.has_arrow(it->second)) {
      report.add("legs", {aj});
      return report;
    }
    const ObjId& want_dom = cone.cocone ? cone.diagram.obj(aj) : cone.apex;
    const ObjId& want_cod = cone.cocone ? cone.apex : cone.diagram.obj(aj);
    if (C.dom(it->second) != want_dom || C.cod(it->second) != want_cod)
      report.add("leg typing", {aj, it->second});
  }
  for (const ArrId& l : J.arrows()) {
    const ArrId& a = cone.legs.at(J.dom(l));
    const ArrId& b = cone.legs.at(J.cod(l));
    if (cone.cocone) {
      if (C.compose(cone.diagram.arr(l), b) != a) report.add("cone equation", {l});
    } else {
      if (C.compose(a, cone.diagram.arr(l)) != b) report.add("cone equation", {l});
    }
  }

  std::vector<Cone> cones = enumerate_cones(cone.diagram, cone.cocone);
  if (cones.size() != cert.mediators.size())
    report.add("mediator table size",
               {std::to_string(cones.size()), std::to_string(cert.mediators.size())});
  for (const Cone& other : cones) {
    auto m = unique_mediator(other, cone);
    if (!m) {
      report.add("terminality", {other.apex});
      continue;
    }
    auto it = cert.mediators.find(cone_key(other));
    if (it == cert.mediators.end() || it->second != *m)
      report.add("mediator table", {cone_key(other)});
  }
  return report;
}

ValidationReport check_adjunction(const Adjunction& adj) {
  ValidationReport report;
  const Functor& F = adj.F;
  const Functor& G = adj.G;
  if (G.src()->name() != F.dst()->name() || G.dst()->name() != F.src()->name()) {
    report.add("boundaries", {F.src()->name(), F.dst()->name(), G.src()->name(),
                              G.dst()->name()});
    return report;
  }
  const CategoryRef& C = F.src();
  const CategoryRef& D = F.dst();

  if (!adj.unit.source_functor().equal_maps(identity_functor(C)) ||
      !adj.unit.target_functor().equal_maps(compose_functors(G, F))) {
    report.add("unit boundaries", {});
    return report;
  }
  if (!adj.counit.source_functor().equal_maps(compose_functors(F, G)) ||
      !adj.counit.target_functor().equal_maps(identity_functor(D))) {
    report.add("counit boundaries", {});
    return report;
  }

  for (const Violation& v : validate_nat_trans(adj.unit).violations)
    report.add("unit " + v.law, v.ids);
  for (const Violation& v : validate_nat_trans(adj.counit).violations)
    report.add("counit " + v.law, v.ids);
  if (!report.ok()) return report;

  // (G counit)•(unit G) = id_G
  for (const ObjId& d : D->objects()) {
    if (C->compose(adj.unit.at(G.obj(d)), G.arr(adj.counit.at(d))) != C->identity(G.obj(d)))
      report.add("triangle identity on G", {d});
  }
  // (counit F)•(F unit) = id_F
  for (const ObjId& c : C->objects()) {
    if (D->compose(F.arr(adj.unit.at(c)), adj.counit.at(F.obj(c))) != D->identity(F.obj(c)))
      report.add("triangle identity on F", {c});
  }
  return report;
}

Adjunction lift_adjunction(const Adjunction& adj, const Budget& budget) {
  const CategoryRef& C = adj.F.src();
  const CategoryRef& D = adj.F.dst();
  ArrowCategory ac_c = make_arrow_category(C, budget);
  ArrowCategory ac_d = make_arrow_category(D, budget);

  Functor lifted_f = comma_lift_functor(adj.F, ac_c, ac_d);
  Functor lifted_g = comma_lift_functor(adj.G, ac_d, ac_c);
  Functor gf = compose_functors(lifted_g, lifted_f);
  Functor fg = compose_functors(lifted_f, lifted_g);

  std::map<ObjId, ArrId> unit_comps;
  for (const ObjId& x : ac_c.cat()->objects()) {
    ArrowObject ao = ac_c.arrow_object(x);
    unit_comps[x] = ac_c.square_id(adj.unit.at(ao.a), adj.unit.at(ao.b), x, gf.obj(x));
  }
  NatTrans unit(identity_functor(ac_c.cat()), std::move(gf), std::move(unit_comps));

  std::map<ObjId, ArrId> counit_comps;
  for (const ObjId& y : ac_d.cat()->objects()) {
    ArrowObject ao = ac_d.arrow_object(y);
    counit_comps[y] = ac_d.square_id(adj.counit.at(ao.a), adj.counit.at(ao.b), fg.obj(y), y);
  }
  NatTrans counit(std::move(fg), identity_functor(ac_d.cat()), std::move(counit_comps));

  return Adjunction{std::move(lifted_f), std::move(lifted_g), std::move(unit),
                    std::move(counit)};
}

std::optional<Adjunction> make_poset_adjunction(const Functor& F, const Functor& G) {
  const CategoryRef& C = F.src();
  const CategoryRef& D = F.dst();
  if (G.src()->name() != D->name() || G.dst()->name() != C->name())
    throw BoundaryMismatch("adjunction needs F: C -> D and G: D -> C");
  for (const auto& cat : {C, D})
    for (const ObjId& a : cat->objects())
      for (const ObjId& b : cat->objects())
        if (cat->hom(a, b).size() > 1)
          throw Error("poset adjunction synthesis needs thin categories, " + cat->name() +
                      " is not thin");

  // Galois condition: F(x) <= y iff x <= G(y).
  for (const ObjId& x : C->objects())
    for (const ObjId& y : D->objects())
      if (D->hom(F.obj(x), y).empty() != C->hom(x, G.obj(y)).empty()) return std::nullopt;

  std::map<ObjId, ArrId> unit_comps, counit_comps;
  for (const ObjId& x : C->objects()) {
    auto arrows = C->hom(x, G.obj(F.obj(x)));
    if (arrows.empty()) return std::nullopt;
    unit_comps[x] = arrows.front();
  }
  for (const ObjId& y : D->objects()) {
    auto arrows = D->hom(F.obj(G.obj(y)), y);
    if (arrows.empty()) return std::nullopt;
    counit_comps[y] = arrows.front();
  }
  NatTrans unit(identity_functor(C), compose_functors(G, F), std::move(unit_comps));
  NatTrans counit(compose_functors(F, G), identity_functor(D), std::move(counit_comps));
  return Adjunction{F, G, std::move(unit), std::move(counit)};
}

UniversalArrow propagate_universal_arrow(const UniversalArrow& ua, const PropagationCase& pc,
                                         const Budget& budget) {
  {
    ValidationReport base = check_universal_arrow(ua);
    if (!base.ok())
      throw Error("cannot propagate a non-universal arrow: " + base.summary());
  }
  Functor G2 = propagate_functor(ua.G, pc, 2, budget);

  const CategoryRef& D = ua.G.src();
  const CategoryRef& C = ua.G.dst();
  const bool wrap_src = pc.kind == PropagationKind::descending ||
                        pc.kind == PropagationKind::balanced;
  const bool wrap_dst = pc.kind == PropagationKind::ascending ||
                        pc.kind == PropagationKind::balanced;

  // d2 = J(id_d), wrapped in L0 for the modulated source side.
  ArrowCategory ac_d = make_arrow_category(D, budget);
  ObjId d2 = ac_d.encapsulate(D->identity(ua.d));
  if (wrap_src) d2 = modulator_L(pc.src_base, pc.index, budget).obj(d2);

  // g2 = (g;g), wrapped in L1 for the modulated target side; c2 follows.
  ArrowCategory ac_c = make_arrow_category(C, budget);
  const ObjId jc = ac_c.encapsulate(C->identity(ua.c));
  const ObjId jgd = ac_c.encapsulate(C->identity(ua.G.obj(ua.d)));
  ArrId g2 = ua.couniversal ? ac_c.square_id(ua.g, ua.g, jgd, jc)
                            : ac_c.square_id(ua.g, ua.g, jc, jgd);
  ObjId c2 = jc;
  if (wrap_dst) {
    Functor L = modulator_L(pc.dst_base, pc.kind == PropagationKind::balanced && pc.index2
                                              ? pc.index2
                                              : pc.index,
                            budget);
    g2 = L.arr(g2);
    c2 = L.obj(jc);
  }

  auto table = mediator_table(G2, c2, d2, g2, ua.couniversal);
  if (!table)
    throw Error("propagated data (" + d2 + ", " + g2 + ") is not a universal arrow");
  UniversalArrow result{std::move(G2), std::move(c2), std::move(d2), std::move(g2),
                        ua.couniversal, std::move(*table)};
  ValidationReport certified = check_universal_arrow(result);
  if (!certified.ok()) throw Error("propagated universal arrow fails: " + certified.summary());
  return result;
}

LimitCertificate propagate_limit(const Functor& diagram, std::size_t n, const Budget& budget) {
  if (n < 1) throw Error("levels are indexed from 1");
  auto base = limit(diagram);
  if (!base)
    throw NoBaseLimit("diagram into " + diagram.dst()->name() + " has no limit at level 1");
  if (n == 1) return *base;

  Functor current = diagram;
  for (std::size_t k = 2; k <= n; ++k) {
    ArrowCategory ac = make_arrow_category(current.dst(), budget);
    current = compose_functors(arrow_diagonal(ac), current);
  }
  auto lifted = limit(current);
  if (!lifted)
    throw Error("limit did not propagate to level " + std::to_string(n) +
                " over " + current.dst()->name());
  return *lifted;
}

}  // namespace commaforge
