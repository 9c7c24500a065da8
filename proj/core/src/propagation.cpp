#include "commaforge/propagation.hpp"

#include <algorithm>
#include <functional>

#include "commaforge/fixtures.hpp"

namespace commaforge {

namespace {

std::string functor_cat_name(const FiniteCategory& index, const FiniteCategory& target) {
  return "fun(" + index.name() + "," + target.name() + ")";
}

std::string encode_functor_id(const FiniteCategory& index, const Functor& F) {
  std::string s = "F{";
  bool first = true;
  for (const ObjId& a : index.objects()) {
    if (!first) s += ",";
    first = false;
    s += a + ">" + F.obj(a);
  }
  s += "|";
  first = true;
  for (const ArrId& l : index.arrows()) {
    if (index.is_identity(l)) continue;  // forced
    if (!first) s += ",";
    first = false;
    s += l + ">" + F.arr(l);
  }
  s += "}";
  return s;
}

std::string encode_nat_id(const FiniteCategory& index, const NatTrans& tau, const ObjId& src,
                          const ObjId& dst) {
  std::string s = "N{";
  bool first = true;
  for (const ObjId& a : index.objects()) {
    if (!first) s += ",";
    first = false;
    s += a + ">" + tau.at(a);
  }
  s += "}@" + src + "->" + dst;
  return s;
}

}  // namespace

const Functor& FunctorCategory::decode_object(const ObjId& x) const {
  auto it = obj_decode_.find(x);
  if (it == obj_decode_.end())
    throw UnknownObject("no object '" + x + "' in " + realized_->name());
  return it->second;
}

const NatTrans& FunctorCategory::decode_arrow(const ArrId& s) const {
  auto it = arr_decode_.find(s);
  if (it == arr_decode_.end()) throw UnknownArrow("no arrow '" + s + "' in " + realized_->name());
  return it->second;
}

ObjId FunctorCategory::encode_object(const Functor& F) const {
  ObjId x = encode_functor_id(*index_, F);
  if (!realized_->has_object(x))
    throw UnknownObject("functor " + x + " is not an object of " + realized_->name());
  return x;
}

ArrId FunctorCategory::encode_arrow(const NatTrans& tau) const {
  ArrId s = encode_nat_id(*index_, tau, encode_object(tau.source_functor()),
                          encode_object(tau.target_functor()));
  if (!realized_->has_arrow(s))
    throw UnknownArrow("transformation " + s + " is not an arrow of " + realized_->name());
  return s;
}

FunctorCategory make_functor_category(const CategoryRef& index, const CategoryRef& target,
                                      const Budget& budget) {
  FunctorCategory fc;
  fc.index_ = index;
  fc.target_ = target;

  // Gate on the raw candidate-map estimate before enumerating.
  long double estimate = 1.0L;
  for (std::size_t i = 0; i < index->object_count(); ++i)
    estimate *= static_cast<long double>(std::max<std::size_t>(target->object_count(), 1));
  for (const ArrId& l : index->arrows())
    if (!index->is_identity(l))
      estimate *= static_cast<long double>(std::max<std::size_t>(target->arrow_count(), 1));
  if (estimate > static_cast<long double>(budget.max_candidates))
    throw SizeBudgetExceeded("functor enumeration " + functor_cat_name(*index, *target) +
                             " estimates " + std::to_string((double)estimate) +
                             " candidate maps, budget is " +
                             std::to_string(budget.max_candidates));

  // Enumerate functors J -> C depth-first in canonical order, pruning on
  // incremental law violations.
  std::vector<Functor> functors;
  const auto& idx_objs = index->objects();
  std::vector<ArrId> idx_arrs;
  for (const ArrId& l : index->arrows())
    if (!index->is_identity(l)) idx_arrs.push_back(l);

  std::map<ObjId, ObjId> om;
  std::map<ArrId, ArrId> am;

  auto laws_hold = [&](const Functor& F) {
    return validate_functor(F).ok();
  };

  std::function<void(std::size_t)> assign_arrows = [&](std::size_t ai) {
    if (ai == idx_arrs.size()) {
      Functor F(index, target, om, am);
      // complete the identity images, then check the laws
      if (laws_hold(F)) functors.push_back(std::move(F));
      return;
    }
    const ArrId& l = idx_arrs[ai];
    for (const ArrId& cand : target->hom(om.at(index->dom(l)), om.at(index->cod(l)))) {
      am[l] = cand;
      assign_arrows(ai + 1);
    }
    am.erase(l);
  };

  std::function<void(std::size_t)> assign_objects = [&](std::size_t oi) {
    if (oi == idx_objs.size()) {
      for (const ObjId& a : idx_objs)
        am[index->identity(a)] = target->identity(om.at(a));
      assign_arrows(0);
      for (const ObjId& a : idx_objs) am.erase(index->identity(a));
      return;
    }
    for (const ObjId& cand : target->objects()) {
      om[idx_objs[oi]] = cand;
      assign_objects(oi + 1);
    }
    om.erase(idx_objs[oi]);
  };
  assign_objects(0);

  CategoryBuilder builder(functor_cat_name(*index, *target));
  std::vector<ObjId> functor_ids;
  for (const Functor& F : functors) {
    ObjId x = encode_functor_id(*index, F);
    builder.object(x);
    functor_ids.push_back(x);
    fc.obj_decode_.emplace(std::move(x), F);
  }

  // Arrows: all natural transformations between each ordered pair.
  struct Arrow {
    ArrId id;
    ObjId src, dst;
  };
  std::vector<Arrow> arrows;
  std::size_t arrow_count = 0;
  for (std::size_t i = 0; i < functors.size(); ++i) {
    for (std::size_t j = 0; j < functors.size(); ++j) {
      const Functor& F = functors[i];
      const Functor& G = functors[j];
      std::map<ObjId, ArrId> comps;
      std::function<void(std::size_t)> assign_comp = [&](std::size_t oi) {
        if (oi == idx_objs.size()) {
          NatTrans tau(F, G, comps);
          if (!validate_nat_trans(tau).ok()) return;
          if (++arrow_count > budget.max_arrows)
            throw SizeBudgetExceeded(functor_cat_name(*index, *target) +
                                     " exceeds the budget of " +
                                     std::to_string(budget.max_arrows) + " arrows");
          ArrId s = encode_nat_id(*index, tau, functor_ids[i], functor_ids[j]);
          bool is_id = (i == j);
          if (is_id)
            for (const ObjId& a : idx_objs)
              is_id = is_id && target->is_identity(tau.at(a));
          if (is_id)
            builder.identity_arrow(s, functor_ids[i]);
          else
            builder.arrow(s, functor_ids[i], functor_ids[j]);
          arrows.push_back(Arrow{s, functor_ids[i], functor_ids[j]});
          fc.arr_decode_.emplace(std::move(s), std::move(tau));
          return;
        }
        const ObjId& a = idx_objs[oi];
        for (const ArrId& cand : target->hom(F.obj(a), G.obj(a))) {
          comps[a] = cand;
          assign_comp(oi + 1);
        }
        comps.erase(a);
      };
      assign_comp(0);
    }
  }

  // Composition is vertical composition, encoded back to canonical ids.
  for (const Arrow& s1 : arrows) {
    for (const Arrow& s2 : arrows) {
      if (s1.dst != s2.src) continue;
      const NatTrans& t1 = fc.arr_decode_.at(s1.id);
      const NatTrans& t2 = fc.arr_decode_.at(s2.id);
      std::map<ObjId, ArrId> comps;
      for (const ObjId& a : idx_objs) comps[a] = target->compose(t1.at(a), t2.at(a));
      NatTrans composite(t1.source_functor(), t2.target_functor(), std::move(comps));
      builder.composite(s1.id, s2.id, encode_nat_id(*index, composite, s1.src, s2.dst));
    }
  }

  fc.realized_ = builder.build();
  return fc;
}

IsoWitness equivalence_level_two(const CategoryRef& C, const Budget& budget) {
  ArrowCategory ac = make_arrow_category(C, budget);
  CategoryRef idx = fixtures::index_two();
  FunctorCategory fc = make_functor_category(idx, C, budget);

  auto pick_functor = [&](const ArrId& f) {
    std::map<ObjId, ObjId> om{{"a1", C->dom(f)}, {"a2", C->cod(f)}};
    std::map<ArrId, ArrId> am{{"id_a1", C->identity(C->dom(f))},
                              {"id_a2", C->identity(C->cod(f))},
                              {"l12", f}};
    return Functor(idx, C, std::move(om), std::move(am));
  };

  std::map<ObjId, ObjId> fwd_om;
  std::map<ArrId, ArrId> fwd_am;
  for (const ObjId& x : ac.cat()->objects())
    fwd_om[x] = fc.encode_object(pick_functor(ac.decapsulate(x)));
  for (const ArrId& s : ac.cat()->arrows()) {
    SquareArrow sq = ac.square(s);
    NatTrans eta(pick_functor(ac.decapsulate(sq.src)), pick_functor(ac.decapsulate(sq.dst)),
                 {{"a1", sq.h}, {"a2", sq.k}});
    fwd_am[s] = fc.encode_arrow(eta);
  }
  Functor forward(ac.cat(), fc.realized(), std::move(fwd_om), std::move(fwd_am));

  std::map<ObjId, ObjId> bwd_om;
  std::map<ArrId, ArrId> bwd_am;
  for (const ObjId& x : fc.realized()->objects())
    bwd_om[x] = ac.encapsulate(fc.decode_object(x).arr("l12"));
  for (const ArrId& s : fc.realized()->arrows()) {
    const NatTrans& eta = fc.decode_arrow(s);
    bwd_am[s] = ac.square_id(eta.at("a1"), eta.at("a2"),
                             ac.encapsulate(eta.source_functor().arr("l12")),
                             ac.encapsulate(eta.target_functor().arr("l12")));
  }
  Functor backward(fc.realized(), ac.cat(), std::move(bwd_om), std::move(bwd_am));
  return IsoWitness{std::move(forward), std::move(backward)};
}

namespace {

std::string repeat_tuple(const std::string& part, std::size_t m) {
  if (m == 1) return part;
  std::string s = "(";
  for (std::size_t i = 0; i < m; ++i) {
    if (i) s += ",";
    s += part;
  }
  s += ")";
  return s;
}

}  // namespace

Functor general_diagonal(const CategoryRef& D, const CategoryRef& J, std::size_t m,
                         const Budget& budget) {
  if (m < 1) throw Error("general diagonal needs m >= 1");
  std::vector<CategoryRef> copies(m, D);
  CategoryRef C = product_category(copies);
  FunctorCategory fc = make_functor_category(J, C, budget);

  auto constant_at = [&](const ObjId& c) {
    return constant_functor(J, C, repeat_tuple(c, m));
  };

  std::map<ObjId, ObjId> om;
  std::map<ArrId, ArrId> am;
  for (const ObjId& c : D->objects()) om[c] = fc.encode_object(constant_at(c));
  for (const ArrId& g : D->arrows()) {
    const ArrId tuple_arrow = repeat_tuple(g, m);
    if (!C->has_arrow(tuple_arrow))
      throw UnknownArrow("product category lacks tuple arrow " + tuple_arrow);
    std::map<ObjId, ArrId> comps;
    for (const ObjId& aj : J->objects()) comps[aj] = tuple_arrow;
    am[g] = fc.encode_arrow(
        NatTrans(constant_at(D->dom(g)), constant_at(D->cod(g)), std::move(comps)));
  }
  return Functor(D, fc.realized(), std::move(om), std::move(am));
}

Functor modulator_L(const CategoryRef& Cn, const CategoryRef& J, const Budget& budget) {
  FunctorCategory cnJ = make_functor_category(J, Cn, budget);
  ArrowCategory src_ac = make_arrow_category(cnJ.realized(), budget);  // (Cn^J)↓(Cn^J)
  ArrowCategory cn_ac = make_arrow_category(Cn, budget);               // Cn↓Cn
  FunctorCategory target = make_functor_category(J, cn_ac.cat(), budget);

  // L0: J(h) with h: G => H becomes the functor a_j |-> J(h(a_j)), with the
  // index arrows carried by the naturality squares (G(l);H(l)).
  auto object_image = [&](const NatTrans& h) {
    const Functor& G = h.source_functor();
    const Functor& H = h.target_functor();
    std::map<ObjId, ObjId> om;
    std::map<ArrId, ArrId> am;
    for (const ObjId& aj : J->objects()) om[aj] = cn_ac.encapsulate(h.at(aj));
    for (const ArrId& l : J->arrows())
      am[l] = cn_ac.square_id(G.arr(l), H.arr(l), om.at(J->dom(l)), om.at(J->cod(l)));
    return Functor(J, cn_ac.cat(), std::move(om), std::move(am));
  };

  std::map<ObjId, ObjId> om;
  std::map<ArrId, ArrId> am;
  for (const ObjId& x : src_ac.cat()->objects())
    om[x] = target.encode_object(object_image(cnJ.decode_arrow(src_ac.decapsulate(x))));

  // L1: (g1;g2): J(h) -> J(k) becomes the transformation with component
  // (g1(a_j);g2(a_j)) at a_j.
  for (const ArrId& s : src_ac.cat()->arrows()) {
    SquareArrow sq = src_ac.square(s);
    const NatTrans& g1 = cnJ.decode_arrow(sq.h);
    const NatTrans& g2 = cnJ.decode_arrow(sq.k);
    const Functor& Fsrc = target.decode_object(om.at(sq.src));
    const Functor& Fdst = target.decode_object(om.at(sq.dst));
    std::map<ObjId, ArrId> comps;
    for (const ObjId& aj : J->objects())
      comps[aj] = cn_ac.square_id(g1.at(aj), g2.at(aj), Fsrc.obj(aj), Fdst.obj(aj));
    am[s] = target.encode_arrow(NatTrans(Fsrc, Fdst, std::move(comps)));
  }
  return Functor(src_ac.cat(), target.realized(), std::move(om), std::move(am));
}

Functor modulator_K(const CategoryRef& Cn, const CategoryRef& J, const Budget& budget) {
  ArrowCategory cn_ac = make_arrow_category(Cn, budget);
  FunctorCategory source = make_functor_category(J, cn_ac.cat(), budget);  // (Cn↓Cn)^J
  FunctorCategory cnJ = make_functor_category(J, Cn, budget);
  ArrowCategory dst_ac = make_arrow_category(cnJ.realized(), budget);  // (Cn^J)↓(Cn^J)

  // K0: a functor F: J -> Cn↓Cn becomes J(h) where h(a_j) = psi(F(a_j)).
  auto transformation_of = [&](const Functor& F) {
    std::map<ObjId, ObjId> gom, hom;
    std::map<ArrId, ArrId> gam, ham;
    std::map<ObjId, ArrId> comps;
    for (const ObjId& aj : J->objects()) {
      const ArrId& f = cn_ac.decapsulate(F.obj(aj));
      comps[aj] = f;
      gom[aj] = Cn->dom(f);
      hom[aj] = Cn->cod(f);
    }
    for (const ArrId& l : J->arrows()) {
      SquareArrow sq = cn_ac.square(F.arr(l));
      gam[l] = sq.h;
      ham[l] = sq.k;
    }
    Functor G(J, Cn, std::move(gom), std::move(gam));
    Functor H(J, Cn, std::move(hom), std::move(ham));
    return NatTrans(std::move(G), std::move(H), std::move(comps));
  };

  std::map<ObjId, ObjId> om;
  std::map<ArrId, ArrId> am;
  for (const ObjId& x : source.realized()->objects())
    om[x] = dst_ac.encapsulate(cnJ.encode_arrow(transformation_of(source.decode_object(x))));

  // K1: a transformation alpha with square components splits into the pair
  // (g1;g2) of its first and second square parts.
  for (const ArrId& s : source.realized()->arrows()) {
    const NatTrans& alpha = source.decode_arrow(s);
    const NatTrans h = transformation_of(alpha.source_functor());
    const NatTrans k = transformation_of(alpha.target_functor());
    std::map<ObjId, ArrId> g1_comps, g2_comps;
    for (const ObjId& aj : J->objects()) {
      SquareArrow sq = cn_ac.square(alpha.at(aj));
      g1_comps[aj] = sq.h;
      g2_comps[aj] = sq.k;
    }
    NatTrans g1(h.source_functor(), k.source_functor(), std::move(g1_comps));
    NatTrans g2(h.target_functor(), k.target_functor(), std::move(g2_comps));
    am[s] = dst_ac.square_id(cnJ.encode_arrow(g1), cnJ.encode_arrow(g2),
                             om.at(source.realized()->dom(s)), om.at(source.realized()->cod(s)));
  }
  return Functor(source.realized(), dst_ac.cat(), std::move(om), std::move(am));
}

PropagationCase basic_case() { return PropagationCase{}; }

PropagationCase descending_case(CategoryRef index, CategoryRef src_base) {
  return PropagationCase{PropagationKind::descending, std::move(index), nullptr,
                         std::move(src_base), nullptr};
}

PropagationCase ascending_case(CategoryRef index, CategoryRef dst_base) {
  return PropagationCase{PropagationKind::ascending, std::move(index), nullptr, nullptr,
                         std::move(dst_base)};
}

PropagationCase balanced_case(CategoryRef index, CategoryRef index2, CategoryRef src_base,
                              CategoryRef dst_base) {
  return PropagationCase{PropagationKind::balanced, std::move(index), std::move(index2),
                         std::move(src_base), std::move(dst_base)};
}

namespace {

// Shared state for the one-step rules: the underlying bases advance one
// tower level per step.
struct StepState {
  CategoryRef src_base, dst_base;
};

void check_case_shape(const PropagationCase& pc, const CategoryRef& src, const CategoryRef& dst) {
  auto expect_fun_cat = [&](const CategoryRef& boundary, const CategoryRef& index,
                            const CategoryRef& base, const char* side) {
    if (!index || !base)
      throw CaseShapeMismatch(std::string("propagation case lacks the index or base category "
                                          "for its ") + side + " side");
    std::string expected = "fun(" + index->name() + "," + base->name() + ")";
    if (boundary->name() != expected)
      throw CaseShapeMismatch("expected " + std::string(side) + " boundary " + expected +
                              ", got " + boundary->name());
  };
  switch (pc.kind) {
    case PropagationKind::basic:
      break;
    case PropagationKind::descending:
      expect_fun_cat(src, pc.index, pc.src_base, "source");
      break;
    case PropagationKind::ascending:
      expect_fun_cat(dst, pc.index, pc.dst_base, "target");
      break;
    case PropagationKind::balanced:
      expect_fun_cat(src, pc.index, pc.src_base, "source");
      expect_fun_cat(dst, pc.index2 ? pc.index2 : pc.index, pc.dst_base, "target");
      break;
  }
}

Functor step_functor(const Functor& F, const PropagationCase& pc, StepState& st,
                     const Budget& budget) {
  switch (pc.kind) {
    case PropagationKind::basic:
      return comma_lift_functor(F, budget);
    case PropagationKind::descending: {
      Functor K = modulator_K(st.src_base, pc.index, budget);
      Functor lifted = comma_lift_functor(F, budget);
      st.src_base = make_arrow_category(st.src_base, budget).cat();
      return compose_functors(lifted, K);
    }
    case PropagationKind::ascending: {
      Functor lifted = comma_lift_functor(F, budget);
      Functor L = modulator_L(st.dst_base, pc.index, budget);
      st.dst_base = make_arrow_category(st.dst_base, budget).cat();
      return compose_functors(L, lifted);
    }
    case PropagationKind::balanced: {
      Functor K = modulator_K(st.src_base, pc.index, budget);
      Functor lifted = comma_lift_functor(F, budget);
      Functor L = modulator_L(st.dst_base, pc.index2 ? pc.index2 : pc.index, budget);
      st.src_base = make_arrow_category(st.src_base, budget).cat();
      st.dst_base = make_arrow_category(st.dst_base, budget).cat();
      return compose_functors(L, compose_functors(lifted, K));
    }
  }
  throw Error("unreachable propagation kind");
}

NatTrans step_nat(const NatTrans& tau, const PropagationCase& pc, StepState& st,
                  const Budget& budget) {
  switch (pc.kind) {
    case PropagationKind::basic:
      return comma_lift_nat(tau, budget);
    case PropagationKind::descending: {
      Functor K = modulator_K(st.src_base, pc.index, budget);
      NatTrans lifted = comma_lift_nat(tau, budget);
      st.src_base = make_arrow_category(st.src_base, budget).cat();
      return horizontal_compose(lifted, identity_nat(K));
    }
    case PropagationKind::ascending: {
      NatTrans lifted = comma_lift_nat(tau, budget);
      Functor L = modulator_L(st.dst_base, pc.index, budget);
      st.dst_base = make_arrow_category(st.dst_base, budget).cat();
      return horizontal_compose(identity_nat(L), lifted);
    }
    case PropagationKind::balanced: {
      Functor K = modulator_K(st.src_base, pc.index, budget);
      NatTrans lifted = comma_lift_nat(tau, budget);
      Functor L = modulator_L(st.dst_base, pc.index2 ? pc.index2 : pc.index, budget);
      st.src_base = make_arrow_category(st.src_base, budget).cat();
      st.dst_base = make_arrow_category(st.dst_base, budget).cat();
      return horizontal_compose(identity_nat(L), horizontal_compose(lifted, identity_nat(K)));
    }
  }
  throw Error("unreachable propagation kind");
}

}  // namespace

Functor propagate_functor(const Functor& F, const PropagationCase& pc, std::size_t n,
                          const Budget& budget) {
  if (n < 1) throw Error("propagation levels are indexed from 1");
  check_case_shape(pc, F.src(), F.dst());
  StepState st{pc.src_base, pc.dst_base};
  Functor cur = F;
  for (std::size_t k = 2; k <= n; ++k) cur = step_functor(cur, pc, st, budget);
  return cur;
}

NatTrans propagate_nat(const NatTrans& tau, const PropagationCase& pc, std::size_t n,
                       const Budget& budget) {
  if (n < 1) throw Error("propagation levels are indexed from 1");
  check_case_shape(pc, tau.source_functor().src(), tau.source_functor().dst());
  StepState st{pc.src_base, pc.dst_base};
  NatTrans cur = tau;
  for (std::size_t k = 2; k <= n; ++k) cur = step_nat(cur, pc, st, budget);
  return cur;
}

ValidationReport check_distributive_laws(const Functor& F, const Functor& G, const NatTrans& tau,
                                         const NatTrans& eta, std::size_t n,
                                         const Budget& budget) {
  ValidationReport report;
  PropagationCase pc = basic_case();

  Functor fg = compose_functors(F, G);
  if (!propagate_functor(fg, pc, n, budget)
           .equal_maps(compose_functors(propagate_functor(F, pc, n, budget),
                                        propagate_functor(G, pc, n, budget))))
    report.add("functor composition distributivity", {F.src()->name(), G.src()->name()});

  NatTrans hor = horizontal_compose(tau, eta);
  if (!propagate_nat(hor, pc, n, budget)
           .equal_maps(horizontal_compose(propagate_nat(tau, pc, n, budget),
                                          propagate_nat(eta, pc, n, budget))))
    report.add("horizontal composition distributivity", {});

  NatTrans ver = vertical_compose(tau, eta);
  if (!propagate_nat(ver, pc, n, budget)
           .equal_maps(vertical_compose(propagate_nat(tau, pc, n, budget),
                                        propagate_nat(eta, pc, n, budget))))
    report.add("vertical composition distributivity", {});

  return report;
}

LeveledConcept LeveledConcept::make_category(CategoryRef base) {
  LeveledConcept x;
  x.kind_ = ConceptKind::category;
  x.case_ = basic_case();
  x.current_.payload = std::move(base);
  return x;
}

LeveledConcept LeveledConcept::make_functor(Functor F, PropagationCase pc) {
  check_case_shape(pc, F.src(), F.dst());
  LeveledConcept x;
  x.kind_ = ConceptKind::functor;
  x.case_ = std::move(pc);
  x.current_.src_base = x.case_.src_base;
  x.current_.dst_base = x.case_.dst_base;
  x.current_.payload = std::move(F);
  return x;
}

LeveledConcept LeveledConcept::make_nat(NatTrans tau, PropagationCase pc) {
  check_case_shape(pc, tau.source_functor().src(), tau.source_functor().dst());
  LeveledConcept x;
  x.kind_ = ConceptKind::nat_trans;
  x.case_ = std::move(pc);
  x.current_.src_base = x.case_.src_base;
  x.current_.dst_base = x.case_.dst_base;
  x.current_.payload = std::move(tau);
  return x;
}

const CategoryRef& LeveledConcept::as_category() const {
  if (kind_ != ConceptKind::category) throw Error("leveled concept is not a category");
  return std::get<CategoryRef>(current_.payload);
}

const Functor& LeveledConcept::as_functor() const {
  if (kind_ != ConceptKind::functor) throw Error("leveled concept is not a functor");
  return std::get<Functor>(current_.payload);
}

const NatTrans& LeveledConcept::as_nat() const {
  if (kind_ != ConceptKind::nat_trans) throw Error("leveled concept is not a transformation");
  return std::get<NatTrans>(current_.payload);
}

bool LeveledConcept::extensionally_equal(const LeveledConcept& other) const {
  if (kind_ != other.kind_ || level() != other.level()) return false;
  switch (kind_) {
    case ConceptKind::category:
      return as_category()->extensionally_equal(*other.as_category());
    case ConceptKind::functor:
      return as_functor().equal_maps(other.as_functor());
    case ConceptKind::nat_trans:
      return as_nat().equal_maps(other.as_nat());
  }
  return false;
}

void LeveledConcept::step_up(const Budget& budget) {
  provenance_.push_back(current_);
  StepState st{current_.src_base, current_.dst_base};
  switch (kind_) {
    case ConceptKind::category:
      current_.payload = make_arrow_category(std::get<CategoryRef>(current_.payload), budget).cat();
      break;
    case ConceptKind::functor:
      current_.payload = step_functor(std::get<Functor>(current_.payload), case_, st, budget);
      break;
    case ConceptKind::nat_trans:
      current_.payload = step_nat(std::get<NatTrans>(current_.payload), case_, st, budget);
      break;
  }
  current_.src_base = st.src_base;
  current_.dst_base = st.dst_base;
}

LeveledConcept cs_act(CSElement g, const LeveledConcept& x, const Budget& budget) {
  LeveledConcept result = x;
  if (g.n >= 0) {
    for (long long i = 0; i < g.n; ++i) result.step_up(budget);
    return result;
  }
  std::size_t down = static_cast<std::size_t>(-g.n);
  if (result.provenance_.size() < down)
    throw UndefinedAction("g_" + std::to_string(g.n) + " is undefined at level " +
                          std::to_string(result.level()));
  for (std::size_t i = 0; i < down; ++i) {
    result.current_ = result.provenance_.back();
    result.provenance_.pop_back();
  }
  return result;
}

}  // namespace commaforge
