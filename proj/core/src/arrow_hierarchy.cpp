#include "commaforge/arrow_hierarchy.hpp"

#include <algorithm>

#include "commaforge/fixtures.hpp"

namespace commaforge {

namespace {

ObjId obj_id_of(const ArrId& f) { return "J(" + f + ")"; }

ArrId square_id_of(const ArrId& h, const ArrId& k, const ObjId& src, const ObjId& dst) {
  return "(" + h + ";" + k + ")@" + src + "->" + dst;
}

}  // namespace

const ObjId& ArrowCategory::encapsulate(const ArrId& f) const {
  auto it = arrow_to_obj_.find(f);
  if (it == arrow_to_obj_.end())
    throw UnknownArrow("no arrow '" + f + "' in base category " + base_->name());
  return it->second;
}

const ArrId& ArrowCategory::decapsulate(const ObjId& x) const {
  auto it = obj_to_arrow_.find(x);
  if (it == obj_to_arrow_.end())
    throw UnknownObject("no object '" + x + "' in arrow category " + cat_->name());
  return it->second;
}

ArrowObject ArrowCategory::arrow_object(const ObjId& x) const {
  const ArrId& f = decapsulate(x);
  return ArrowObject{x, base_->dom(f), base_->cod(f), f};
}

SquareArrow ArrowCategory::square(const ArrId& s) const {
  auto it = square_parts_.find(s);
  if (it == square_parts_.end())
    throw UnknownArrow("no arrow '" + s + "' in arrow category " + cat_->name());
  return SquareArrow{s, it->second.first, it->second.second, cat_->dom(s), cat_->cod(s)};
}

ArrId ArrowCategory::square_id(const ArrId& h, const ArrId& k, const ObjId& src,
                               const ObjId& dst) const {
  ArrId id = square_id_of(h, k, src, dst);
  if (!cat_->has_arrow(id))
    throw UnknownArrow("no commutative square (" + h + ";" + k + "): " + src + " -> " + dst +
                       " in " + cat_->name());
  return id;
}

ArrowCategory make_arrow_category(const CategoryRef& base, const Budget& budget) {
  ArrowCategory ac;
  ac.base_ = base;

  CategoryBuilder builder("arrow(" + base->name() + ")");
  for (const ArrId& f : base->arrows()) {
    ObjId x = obj_id_of(f);
    builder.object(x);
    ac.obj_to_arrow_.emplace(x, f);
    ac.arrow_to_obj_.emplace(f, x);
  }

  struct Square {
    ArrId id, h, k;
    ArrId f, g;  // base arrows of src and dst objects
  };
  std::vector<Square> squares;

  // One arrow per commutative square: (h;k): J(f) -> J(g) with k∘f = g∘h.
  for (const ArrId& f : base->arrows()) {
    const ObjId src = obj_id_of(f);
    for (const ArrId& g : base->arrows()) {
      const ObjId dst = obj_id_of(g);
      for (const ArrId& h : base->hom(base->dom(f), base->dom(g))) {
        for (const ArrId& k : base->hom(base->cod(f), base->cod(g))) {
          if (base->compose(f, k) != base->compose(h, g)) continue;
          if (squares.size() >= budget.max_arrows)
            throw SizeBudgetExceeded("arrow(" + base->name() + ") exceeds the budget of " +
                                     std::to_string(budget.max_arrows) + " arrows");
          ArrId s = square_id_of(h, k, src, dst);
          if (f == g && base->is_identity(h) && base->is_identity(k))
            builder.identity_arrow(s, src);
          else
            builder.arrow(s, src, dst);
          ac.square_parts_.emplace(s, std::make_pair(h, k));
          squares.push_back(Square{std::move(s), h, k, f, g});
        }
      }
    }
  }

  // Componentwise composition; closure follows from closure in the base.
  std::map<ArrId, std::vector<const Square*>> by_src_arrow;
  for (const Square& s : squares) by_src_arrow[s.f].push_back(&s);
  for (const Square& s1 : squares) {
    auto it = by_src_arrow.find(s1.g);
    if (it == by_src_arrow.end()) continue;
    for (const Square* s2 : it->second) {
      ArrId h = base->compose(s1.h, s2->h);
      ArrId k = base->compose(s1.k, s2->k);
      builder.composite(s1.id, s2->id, square_id_of(h, k, obj_id_of(s1.f), obj_id_of(s2->g)));
    }
  }

  ac.cat_ = builder.build();
  return ac;
}

Functor proj_fst(const ArrowCategory& ac) {
  std::map<ObjId, ObjId> om;
  std::map<ArrId, ArrId> am;
  for (const ObjId& x : ac.cat()->objects()) om[x] = ac.base()->dom(ac.decapsulate(x));
  for (const ArrId& s : ac.cat()->arrows()) am[s] = ac.square(s).h;
  return Functor(ac.cat(), ac.base(), std::move(om), std::move(am));
}

Functor proj_snd(const ArrowCategory& ac) {
  std::map<ObjId, ObjId> om;
  std::map<ArrId, ArrId> am;
  for (const ObjId& x : ac.cat()->objects()) om[x] = ac.base()->cod(ac.decapsulate(x));
  for (const ArrId& s : ac.cat()->arrows()) am[s] = ac.square(s).k;
  return Functor(ac.cat(), ac.base(), std::move(om), std::move(am));
}

NatTrans psi(const ArrowCategory& ac) {
  std::map<ObjId, ArrId> comps;
  for (const ObjId& x : ac.cat()->objects()) comps[x] = ac.decapsulate(x);
  return NatTrans(proj_fst(ac), proj_snd(ac), std::move(comps));
}

Functor arrow_diagonal(const ArrowCategory& ac) {
  const auto& base = *ac.base();
  std::map<ObjId, ObjId> om;
  std::map<ArrId, ArrId> am;
  for (const ObjId& a : base.objects()) om[a] = ac.encapsulate(base.identity(a));
  for (const ArrId& f : base.arrows())
    am[f] = ac.square_id(f, f, om.at(base.dom(f)), om.at(base.cod(f)));
  return Functor(ac.base(), ac.cat(), std::move(om), std::move(am));
}

Functor comma_lift_functor(const Functor& F, const ArrowCategory& src_ac,
                           const ArrowCategory& dst_ac) {
  if (src_ac.base()->name() != F.src()->name() || dst_ac.base()->name() != F.dst()->name())
    throw BoundaryMismatch("comma lift of " + F.src()->name() + " -> " + F.dst()->name() +
                           " against mismatching arrow categories");
  std::map<ObjId, ObjId> om;
  std::map<ArrId, ArrId> am;
  for (const ObjId& x : src_ac.cat()->objects())
    om[x] = dst_ac.encapsulate(F.arr(src_ac.decapsulate(x)));
  for (const ArrId& s : src_ac.cat()->arrows()) {
    SquareArrow sq = src_ac.square(s);
    am[s] = dst_ac.square_id(F.arr(sq.h), F.arr(sq.k), om.at(sq.src), om.at(sq.dst));
  }
  return Functor(src_ac.cat(), dst_ac.cat(), std::move(om), std::move(am));
}

Functor comma_lift_functor(const Functor& F, const Budget& budget) {
  ArrowCategory src_ac = make_arrow_category(F.src(), budget);
  ArrowCategory dst_ac = make_arrow_category(F.dst(), budget);
  return comma_lift_functor(F, src_ac, dst_ac);
}

NatTrans comma_lift_nat(const NatTrans& tau, const ArrowCategory& src_ac,
                        const ArrowCategory& dst_ac) {
  Functor lifted_src = comma_lift_functor(tau.source_functor(), src_ac, dst_ac);
  Functor lifted_dst = comma_lift_functor(tau.target_functor(), src_ac, dst_ac);
  std::map<ObjId, ArrId> comps;
  for (const ObjId& x : src_ac.cat()->objects()) {
    ArrowObject ao = src_ac.arrow_object(x);
    comps[x] = dst_ac.square_id(tau.at(ao.a), tau.at(ao.b), lifted_src.obj(x), lifted_dst.obj(x));
  }
  return NatTrans(std::move(lifted_src), std::move(lifted_dst), std::move(comps));
}

NatTrans comma_lift_nat(const NatTrans& tau, const Budget& budget) {
  ArrowCategory src_ac = make_arrow_category(tau.source_functor().src(), budget);
  ArrowCategory dst_ac = make_arrow_category(tau.source_functor().dst(), budget);
  return comma_lift_nat(tau, src_ac, dst_ac);
}

Functor nat_functor(const NatTrans& tau, const ArrowCategory& dst_ac) {
  const Functor& F = tau.source_functor();
  const Functor& G = tau.target_functor();
  if (dst_ac.base()->name() != F.dst()->name())
    throw BoundaryMismatch("nat-functor needs the arrow category over " + F.dst()->name());
  std::map<ObjId, ObjId> om;
  std::map<ArrId, ArrId> am;
  for (const ObjId& a : F.src()->objects()) om[a] = dst_ac.encapsulate(tau.at(a));
  for (const ArrId& f : F.src()->arrows())
    am[f] = dst_ac.square_id(F.arr(f), G.arr(f), om.at(F.src()->dom(f)), om.at(F.src()->cod(f)));
  return Functor(F.src(), dst_ac.cat(), std::move(om), std::move(am));
}

Functor nat_functor(const NatTrans& tau, const Budget& budget) {
  return nat_functor(tau, make_arrow_category(tau.source_functor().dst(), budget));
}

CubeEquations cube_equations(const NatTrans& tau, const ArrowCategory& src_ac,
                             const SquareArrow& sq) {
  const Functor& F = tau.source_functor();
  const Functor& G = tau.target_functor();
  if (src_ac.base()->name() != F.src()->name())
    throw BoundaryMismatch("square lives over " + src_ac.base()->name() +
                           " but the transformation starts at " + F.src()->name());
  const auto& base = *src_ac.base();
  const auto& dst = *F.dst();

  const ArrId f = src_ac.decapsulate(sq.src);
  const ArrId g = src_ac.decapsulate(sq.dst);
  const ArrId& h = sq.h;
  const ArrId& k = sq.k;
  const ObjId a = base.dom(f), b = base.cod(f);
  const ObjId c = base.dom(g), d = base.cod(g);

  auto path = [](std::initializer_list<ArrId> arrows) {
    return ArrowPath{std::vector<ArrId>(arrows)};
  };
  CubeEquations cube{{{
      // the two functor images of k∘f = g∘h
      {path({F.arr(f), F.arr(k)}), path({F.arr(h), F.arr(g)})},
      {path({G.arr(f), G.arr(k)}), path({G.arr(h), G.arr(g)})},
      // the four naturality faces
      {path({tau.at(a), G.arr(f)}), path({F.arr(f), tau.at(b)})},
      {path({tau.at(c), G.arr(g)}), path({F.arr(g), tau.at(d)})},
      {path({tau.at(a), G.arr(h)}), path({F.arr(h), tau.at(c)})},
      {path({tau.at(b), G.arr(k)}), path({F.arr(k), tau.at(d)})},
  }}};
  for (const auto& [p, q] : cube.equations)
    if (!is_commutative(dst, p, q))
      throw NotCommutative("cube face " + fold_path(dst, p) + " != " + fold_path(dst, q));
  return cube;
}

ArrowLabel ArrowLabel::leaf(ArrId id) {
  ArrowLabel l;
  l.id_ = std::move(id);
  return l;
}

ArrowLabel ArrowLabel::pair(ArrowLabel left, ArrowLabel right) {
  ArrowLabel l;
  l.left_ = std::make_shared<ArrowLabel>(std::move(left));
  l.right_ = std::make_shared<ArrowLabel>(std::move(right));
  return l;
}

const ArrId& ArrowLabel::leaf_id() const {
  if (!is_leaf()) throw MalformedLabel("inner label node has no leaf id");
  return id_;
}

const ArrowLabel& ArrowLabel::left() const {
  if (is_leaf()) throw MalformedLabel("leaf label has no children");
  return *left_;
}

const ArrowLabel& ArrowLabel::right() const {
  if (is_leaf()) throw MalformedLabel("leaf label has no children");
  return *right_;
}

std::size_t ArrowLabel::leaf_count() const {
  return is_leaf() ? 1 : left_->leaf_count() + right_->leaf_count();
}

std::size_t ArrowLabel::depth() const {
  return is_leaf() ? 0 : 1 + std::max(left_->depth(), right_->depth());
}

std::size_t leaf_count(const ArrowLabel& label) { return label.leaf_count(); }

namespace {

// Recursive parser over the canonical id grammar:
//   arrow := BASE | "(" arrow ";" arrow ")@" object "->" object
//   object := BASE | "J(" arrow ")"
// BASE tokens contain no structural characters.
class LabelParser {
 public:
  explicit LabelParser(const std::string& text) : text_(text) {}

  ArrowLabel parse_arrow_all() {
    ArrowLabel l = parse_arrow();
    if (pos_ != text_.size()) fail("trailing characters");
    return l;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw MalformedLabel("malformed arrow label '" + text_ + "' at offset " +
                         std::to_string(pos_) + ": " + why);
  }

  bool literal(std::string_view s) {
    if (text_.compare(pos_, s.size(), s) != 0) return false;
    pos_ += s.size();
    return true;
  }

  std::string base_token() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && structural_.find(text_[pos_]) == std::string::npos) ++pos_;
    if (pos_ == start) fail("expected an identifier");
    return text_.substr(start, pos_ - start);
  }

  ArrowLabel parse_arrow() {
    if (text_.compare(pos_, 1, "(") == 0) {
      ++pos_;
      ArrowLabel l = parse_arrow();
      if (!literal(";")) fail("expected ';'");
      ArrowLabel r = parse_arrow();
      if (!literal(")@")) fail("expected ')@'");
      parse_object();
      if (!literal("->")) fail("expected '->'");
      parse_object();
      return ArrowLabel::pair(std::move(l), std::move(r));
    }
    return ArrowLabel::leaf(base_token());
  }

  void parse_object() {
    if (literal("J(")) {
      parse_arrow();
      if (!literal(")")) fail("expected ')'");
      return;
    }
    base_token();
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  const std::string structural_ = "();@ ";
};

}  // namespace

ArrowLabel ArrowLabel::parse(const std::string& arrow_id) {
  if (arrow_id.empty()) throw MalformedLabel("empty arrow label");
  return LabelParser(arrow_id).parse_arrow_all();
}

LevelTower::LevelTower(CategoryRef base, Budget budget)
    : base_(std::move(base)), budget_(budget) {
  if (!base_) throw Error("level tower over a null category");
}

void LevelTower::materialize(std::size_t n) const {
  // caller holds mutex_
  while (data_.size() + 1 < n) {
    CategoryRef current = data_.empty() ? base_ : data_.back().cat();
    data_.push_back(make_arrow_category(current, budget_));
  }
}

CategoryRef LevelTower::level(std::size_t n) const {
  if (n < 1) throw Error("levels are indexed from 1");
  std::lock_guard<std::mutex> lock(mutex_);
  materialize(n);
  return n == 1 ? base_ : data_[n - 2].cat();
}

const ArrowCategory& LevelTower::arrow_data(std::size_t n) const {
  if (n < 1) throw Error("levels are indexed from 1");
  std::lock_guard<std::mutex> lock(mutex_);
  materialize(n + 1);
  return data_[n - 1];
}

ArrowLabel LevelTower::label(std::size_t n, const ArrId& arrow) const {
  if (n < 1) throw Error("levels are indexed from 1");
  if (n == 1) {
    if (!base_->has_arrow(arrow))
      throw UnknownArrow("no arrow '" + arrow + "' at level 1 of " + base_->name());
    return ArrowLabel::leaf(arrow);
  }
  const ArrowCategory& ac = arrow_data(n - 1);
  SquareArrow sq = ac.square(arrow);
  return ArrowLabel::pair(label(n - 1, sq.h), label(n - 1, sq.k));
}

CategoryRef peano(std::size_t n, const Budget& budget) {
  if (n == 0) return fixtures::empty_category();
  CategoryRef cat = fixtures::terminal_category();
  for (std::size_t i = 1; i < n; ++i) cat = make_arrow_category(cat, budget).cat();
  return cat;
}

}  // namespace commaforge
