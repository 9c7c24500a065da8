#include "commaforge/category.hpp"

#include <algorithm>
#include <sstream>

namespace commaforge {

std::string ValidationReport::summary() const {
  if (ok()) return "ok";
  std::ostringstream os;
  os << violations.size() << " violation(s):";
  for (const auto& v : violations) {
    os << "\n  " << v.law;
    for (const auto& id : v.ids) os << " [" << id << "]";
  }
  return os.str();
}

std::size_t FiniteCategory::obj_idx(const ObjId& a) const {
  auto it = obj_index_.find(a);
  if (it == obj_index_.end())
    throw UnknownObject("unknown object '" + a + "' in category " + name_);
  return it->second;
}

std::size_t FiniteCategory::arr_idx(const ArrId& f) const {
  auto it = arr_index_.find(f);
  if (it == arr_index_.end())
    throw UnknownArrow("unknown arrow '" + f + "' in category " + name_);
  return it->second;
}

const ObjId& FiniteCategory::dom(const ArrId& f) const { return dom_[arr_idx(f)]; }
const ObjId& FiniteCategory::cod(const ArrId& f) const { return cod_[arr_idx(f)]; }

const ArrId& FiniteCategory::identity(const ObjId& a) const { return id_of_[obj_idx(a)]; }

bool FiniteCategory::is_identity(const ArrId& f) const { return is_id_[arr_idx(f)]; }

std::optional<ArrId> FiniteCategory::try_compose(const ArrId& f, const ArrId& g) const {
  std::size_t fi = arr_idx(f), gi = arr_idx(g);
  if (cod_[fi] != dom_[gi]) return std::nullopt;
  auto it = comp_.find(static_cast<std::uint64_t>(fi) * arrows_.size() + gi);
  if (it == comp_.end()) return std::nullopt;
  return arrows_[it->second];
}

ArrId FiniteCategory::compose(const ArrId& f, const ArrId& g) const {
  std::size_t fi = arr_idx(f), gi = arr_idx(g);
  if (cod_[fi] != dom_[gi])
    throw NotComposable("cannot compose " + f + " : ..->" + cod_[fi] + " with " + g + " : " +
                        dom_[gi] + "->..");
  auto it = comp_.find(static_cast<std::uint64_t>(fi) * arrows_.size() + gi);
  if (it == comp_.end())
    throw NotComposable("composition table of " + name_ + " lacks entry (" + f + ", " + g + ")");
  return arrows_[it->second];
}

std::vector<ArrId> FiniteCategory::hom(const ObjId& a, const ObjId& b) const {
  obj_idx(b);
  std::vector<ArrId> result;
  for (const ArrId& f : arrows_from(a))
    if (cod(f) == b) result.push_back(f);
  return result;
}

const std::vector<ArrId>& FiniteCategory::arrows_from(const ObjId& a) const {
  return out_[obj_idx(a)];
}

const std::vector<ArrId>& FiniteCategory::arrows_into(const ObjId& b) const {
  return in_[obj_idx(b)];
}

bool FiniteCategory::extensionally_equal(const FiniteCategory& other) const {
  if (name_ != other.name_ || objects_ != other.objects_ || arrows_ != other.arrows_) return false;
  for (std::size_t i = 0; i < arrows_.size(); ++i)
    if (dom_[i] != other.dom_[i] || cod_[i] != other.cod_[i]) return false;
  if (id_of_ != other.id_of_) return false;
  for (const auto& [key, val] : comp_) {
    auto it = other.comp_.find(key);
    if (it == other.comp_.end() || it->second != val) return false;
  }
  return comp_.size() == other.comp_.size();
}

CategoryBuilder::CategoryBuilder(std::string name) : name_(std::move(name)) {}

CategoryBuilder& CategoryBuilder::object(ObjId a) {
  if (objs_.count(a)) throw Error("duplicate object '" + a + "' in " + name_);
  obj_order_.push_back(a);
  objs_.emplace(std::move(a), ArrId{});
  return *this;
}

CategoryBuilder& CategoryBuilder::arrow(ArrId f, ObjId a, ObjId b) {
  if (dom_.count(f)) throw Error("duplicate arrow '" + f + "' in " + name_);
  if (!objs_.count(a)) throw UnknownObject("arrow '" + f + "' has unknown dom '" + a + "'");
  if (!objs_.count(b)) throw UnknownObject("arrow '" + f + "' has unknown cod '" + b + "'");
  arr_order_.push_back(f);
  is_id_[f] = false;
  dom_.emplace(f, std::move(a));
  cod_.emplace(std::move(f), std::move(b));
  return *this;
}

CategoryBuilder& CategoryBuilder::identity_arrow(ArrId f, ObjId a) {
  if (dom_.count(f)) throw Error("duplicate arrow '" + f + "' in " + name_);
  auto it = objs_.find(a);
  if (it == objs_.end()) throw UnknownObject("identity '" + f + "' for unknown object '" + a + "'");
  if (!it->second.empty())
    throw Error("object '" + a + "' already has identity '" + it->second + "'");
  it->second = f;
  arr_order_.push_back(f);
  is_id_[f] = true;
  dom_.emplace(f, a);
  cod_.emplace(std::move(f), std::move(a));
  return *this;
}

bool CategoryBuilder::has_composite(const ArrId& f, const ArrId& g) const {
  return comp_.count({f, g}) != 0;
}

CategoryBuilder& CategoryBuilder::composite(const ArrId& f, const ArrId& g, ArrId fg) {
  if (!dom_.count(f)) throw UnknownArrow("composite references unknown arrow '" + f + "'");
  if (!dom_.count(g)) throw UnknownArrow("composite references unknown arrow '" + g + "'");
  if (!dom_.count(fg)) throw UnknownArrow("composite references unknown arrow '" + fg + "'");
  if (cod_.at(f) != dom_.at(g))
    throw NotComposable("pair (" + f + ", " + g + ") is not composable in " + name_);
  comp_[{f, g}] = std::move(fg);
  return *this;
}

CategoryRef CategoryBuilder::build() {
  // Synthesize missing identities.
  for (auto& [obj, id] : objs_) {
    if (!id.empty()) continue;
    ArrId synth = "id_" + obj;
    if (dom_.count(synth))
      throw Error("reserved identity name '" + synth + "' already used for a non-identity arrow");
    id = synth;
    arr_order_.push_back(synth);
    is_id_[synth] = true;
    dom_.emplace(synth, obj);
    cod_.emplace(synth, obj);
  }
  // Fill identity compositions unless explicitly (possibly wrongly) given.
  for (const ArrId& f : arr_order_) {
    const ArrId& l = objs_.at(dom_.at(f));
    const ArrId& r = objs_.at(cod_.at(f));
    comp_.emplace(std::make_pair(l, f), f);
    comp_.emplace(std::make_pair(f, r), f);
  }

  auto cat = std::shared_ptr<FiniteCategory>(new FiniteCategory());
  cat->name_ = std::move(name_);
  cat->objects_.assign(obj_order_.begin(), obj_order_.end());
  std::sort(cat->objects_.begin(), cat->objects_.end());
  cat->arrows_.assign(arr_order_.begin(), arr_order_.end());
  std::sort(cat->arrows_.begin(), cat->arrows_.end());

  for (std::size_t i = 0; i < cat->objects_.size(); ++i) cat->obj_index_[cat->objects_[i]] = i;
  for (std::size_t i = 0; i < cat->arrows_.size(); ++i) cat->arr_index_[cat->arrows_[i]] = i;

  cat->dom_.resize(cat->arrows_.size());
  cat->cod_.resize(cat->arrows_.size());
  cat->is_id_.resize(cat->arrows_.size());
  for (std::size_t i = 0; i < cat->arrows_.size(); ++i) {
    const ArrId& f = cat->arrows_[i];
    cat->dom_[i] = dom_.at(f);
    cat->cod_[i] = cod_.at(f);
    cat->is_id_[i] = is_id_.at(f);
  }
  cat->id_of_.resize(cat->objects_.size());
  for (const auto& [obj, id] : objs_) cat->id_of_[cat->obj_index_.at(obj)] = id;

  const std::uint64_t n = cat->arrows_.size();
  for (const auto& [pair, fg] : comp_) {
    std::uint64_t fi = cat->arr_index_.at(pair.first);
    std::uint64_t gi = cat->arr_index_.at(pair.second);
    cat->comp_[fi * n + gi] = cat->arr_index_.at(fg);
  }

  cat->out_.resize(cat->objects_.size());
  cat->in_.resize(cat->objects_.size());
  for (const ArrId& f : cat->arrows_) {
    cat->out_[cat->obj_index_.at(dom_.at(f))].push_back(f);
    cat->in_[cat->obj_index_.at(cod_.at(f))].push_back(f);
  }
  return cat;
}

ValidationReport validate_category(const FiniteCategory& cat) {
  ValidationReport report;
  const auto& arrows = cat.arrows();

  for (const ObjId& a : cat.objects()) {
    const ArrId& id = cat.identity(a);
    if (!cat.has_arrow(id)) {
      report.add("identity typing", {a, id});
      continue;
    }
    if (cat.dom(id) != a || cat.cod(id) != a) report.add("identity typing", {a, id});
  }
  for (const ArrId& f : arrows) {
    if (!cat.has_object(cat.dom(f)) || !cat.has_object(cat.cod(f)))
      report.add("arrow typing", {f});
  }

  // Closure: every composable pair has an entry, and each entry typechecks.
  for (const ArrId& f : arrows) {
    for (const ArrId& g : cat.arrows_from(cat.cod(f))) {
      auto fg = cat.try_compose(f, g);
      if (!fg) {
        report.add("closure", {f, g});
        continue;
      }
      if (cat.dom(*fg) != cat.dom(f) || cat.cod(*fg) != cat.cod(g))
        report.add("closure", {f, g, *fg});
    }
  }

  for (const ArrId& f : arrows) {
    const ArrId& l = cat.identity(cat.dom(f));
    const ArrId& r = cat.identity(cat.cod(f));
    auto lf = cat.try_compose(l, f);
    auto fr = cat.try_compose(f, r);
    if (!lf || *lf != f) report.add("identity law", {l, f});
    if (!fr || *fr != f) report.add("identity law", {f, r});
  }

  // Associativity over all composable triples.
  for (const ArrId& f : arrows) {
    for (const ArrId& g : cat.arrows_from(cat.cod(f))) {
      auto fg = cat.try_compose(f, g);
      if (!fg) continue;
      for (const ArrId& h : cat.arrows_from(cat.cod(g))) {
        auto gh = cat.try_compose(g, h);
        if (!gh) continue;
        auto left = cat.try_compose(*fg, h);
        auto right = cat.try_compose(f, *gh);
        if (!left || !right || *left != *right) report.add("associativity", {f, g, h});
      }
    }
  }
  return report;
}

ArrId identity(const FiniteCategory& cat, const ObjId& a) { return cat.identity(a); }

std::vector<ArrId> hom_set(const FiniteCategory& cat, const ObjId& a, const ObjId& b) {
  return cat.hom(a, b);
}

ArrId fold_path(const FiniteCategory& cat, const ArrowPath& p) {
  if (p.arrows.empty()) throw Error("empty arrow path");
  ArrId acc = p.arrows.front();
  if (!cat.has_arrow(acc)) throw UnknownArrow("path references unknown arrow '" + acc + "'");
  for (std::size_t i = 1; i < p.arrows.size(); ++i) acc = cat.compose(acc, p.arrows[i]);
  return acc;
}

bool is_commutative(const FiniteCategory& cat, const ArrowPath& p, const ArrowPath& q) {
  ArrId pf = fold_path(cat, p);
  ArrId qf = fold_path(cat, q);
  if (cat.dom(pf) != cat.dom(qf) || cat.cod(pf) != cat.cod(qf))
    throw EndpointMismatch("paths " + pf + " and " + qf + " do not share endpoints");
  return pf == qf;
}

CategoryRef make_poset_category(std::string name, const std::vector<ObjId>& elems,
                                const std::function<bool(const ObjId&, const ObjId&)>& leq) {
  for (const ObjId& a : elems) {
    if (!leq(a, a)) throw NotAPartialOrder("relation is not reflexive at '" + a + "'");
    for (const ObjId& b : elems) {
      if (a != b && leq(a, b) && leq(b, a))
        throw NotAPartialOrder("relation is not antisymmetric at '" + a + "', '" + b + "'");
      for (const ObjId& c : elems)
        if (leq(a, b) && leq(b, c) && !leq(a, c))
          throw NotAPartialOrder("relation is not transitive at '" + a + "' <= '" + b + "' <= '" +
                                 c + "'");
    }
  }

  CategoryBuilder builder(std::move(name));
  for (const ObjId& a : elems) builder.object(a);
  auto arrow_name = [](const ObjId& a, const ObjId& b) { return "le_" + a + "_" + b; };
  for (const ObjId& a : elems)
    for (const ObjId& b : elems)
      if (a != b && leq(a, b)) builder.arrow(arrow_name(a, b), a, b);
  // Composition is forced: at most one arrow between any two objects.
  for (const ObjId& a : elems)
    for (const ObjId& b : elems)
      for (const ObjId& c : elems)
        if (a != b && b != c && a != c && leq(a, b) && leq(b, c))
          builder.composite(arrow_name(a, b), arrow_name(b, c), arrow_name(a, c));
  return builder.build();
}

namespace {

std::string tuple_id(const std::vector<std::string>& parts) {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ",";
    out += parts[i];
  }
  out += ")";
  return out;
}

}  // namespace

CategoryRef product_category(const std::vector<CategoryRef>& factors) {
  if (factors.empty()) throw InvalidFactor("product of an empty list of categories");
  for (const auto& f : factors) {
    if (!f) throw InvalidFactor("null category factor");
    auto report = validate_category(*f);
    if (!report.ok())
      throw InvalidFactor("invalid product factor " + f->name() + ": " + report.summary());
  }
  if (factors.size() == 1) return factors[0];  // D^1 = D

  std::string name = "prod(";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) name += ",";
    name += factors[i]->name();
  }
  name += ")";

  // Objects and arrows are flat tuples over all factors.
  std::vector<std::vector<ObjId>> obj_tuples{{}};
  for (const auto& f : factors) {
    std::vector<std::vector<ObjId>> next;
    for (const auto& prefix : obj_tuples)
      for (const ObjId& o : f->objects()) {
        auto t = prefix;
        t.push_back(o);
        next.push_back(std::move(t));
      }
    obj_tuples = std::move(next);
  }
  std::vector<std::vector<ArrId>> arr_tuples{{}};
  for (const auto& f : factors) {
    std::vector<std::vector<ArrId>> next;
    for (const auto& prefix : arr_tuples)
      for (const ArrId& m : f->arrows()) {
        auto t = prefix;
        t.push_back(m);
        next.push_back(std::move(t));
      }
    arr_tuples = std::move(next);
  }

  CategoryBuilder builder(name);
  for (const auto& t : obj_tuples) builder.object(tuple_id(t));
  auto project_dom = [&](const std::vector<ArrId>& t) {
    std::vector<ObjId> d;
    for (std::size_t i = 0; i < t.size(); ++i) d.push_back(factors[i]->dom(t[i]));
    return d;
  };
  auto project_cod = [&](const std::vector<ArrId>& t) {
    std::vector<ObjId> c;
    for (std::size_t i = 0; i < t.size(); ++i) c.push_back(factors[i]->cod(t[i]));
    return c;
  };
  for (const auto& t : arr_tuples) {
    bool all_id = true;
    for (std::size_t i = 0; i < t.size(); ++i) all_id = all_id && factors[i]->is_identity(t[i]);
    if (all_id)
      builder.identity_arrow(tuple_id(t), tuple_id(project_dom(t)));
    else
      builder.arrow(tuple_id(t), tuple_id(project_dom(t)), tuple_id(project_cod(t)));
  }
  for (const auto& s : arr_tuples) {
    for (const auto& t : arr_tuples) {
      bool composable = true;
      std::vector<ArrId> st(s.size());
      for (std::size_t i = 0; i < s.size() && composable; ++i) {
        auto c = factors[i]->try_compose(s[i], t[i]);
        if (!c)
          composable = false;
        else
          st[i] = *c;
      }
      if (composable) builder.composite(tuple_id(s), tuple_id(t), tuple_id(st));
    }
  }
  return builder.build();
}

CategoryRef opposite_category(const CategoryRef& cat) {
  CategoryBuilder builder("op(" + cat->name() + ")");
  for (const ObjId& a : cat->objects()) builder.object(a);
  for (const ArrId& f : cat->arrows()) {
    if (cat->is_identity(f))
      builder.identity_arrow(f, cat->dom(f));
    else
      builder.arrow(f, cat->cod(f), cat->dom(f));
  }
  for (const ArrId& f : cat->arrows())
    for (const ArrId& g : cat->arrows_from(cat->cod(f))) {
      auto fg = cat->try_compose(f, g);
      if (fg) builder.composite(g, f, *fg);
    }
  return builder.build();
}

}  // namespace commaforge
