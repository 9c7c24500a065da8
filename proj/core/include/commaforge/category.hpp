#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "commaforge/common.hpp"
#include "commaforge/errors.hpp"

namespace commaforge {

class FiniteCategory;
using CategoryRef = std::shared_ptr<const FiniteCategory>;

/// A finite category as validated combinatorial data: object and arrow sets,
/// dom/cod, identities, and an explicit composition table. Values are
/// immutable after construction; build them with CategoryBuilder or one of
/// the factory functions below.
///
/// Convention: compose(f, g) is "f then g", i.e. the classical g∘f. The
/// composition table is keyed the same way.
class FiniteCategory {
 public:
  const std::string& name() const { return name_; }

  const std::vector<ObjId>& objects() const { return objects_; }
  const std::vector<ArrId>& arrows() const { return arrows_; }
  std::size_t object_count() const { return objects_.size(); }
  std::size_t arrow_count() const { return arrows_.size(); }

  bool has_object(const ObjId& a) const { return obj_index_.count(a) != 0; }
  bool has_arrow(const ArrId& f) const { return arr_index_.count(f) != 0; }

  const ObjId& dom(const ArrId& f) const;
  const ObjId& cod(const ArrId& f) const;
  const ArrId& identity(const ObjId& a) const;
  bool is_identity(const ArrId& f) const;

  /// g∘f, or nullopt when cod(f) != dom(g) or the table lacks the entry.
  std::optional<ArrId> try_compose(const ArrId& f, const ArrId& g) const;
  /// g∘f; throws NotComposable when cod(f) != dom(g).
  ArrId compose(const ArrId& f, const ArrId& g) const;

  /// All arrows a -> b in canonical order.
  std::vector<ArrId> hom(const ObjId& a, const ObjId& b) const;
  /// Arrows with dom = a, in canonical order.
  const std::vector<ArrId>& arrows_from(const ObjId& a) const;
  const std::vector<ArrId>& arrows_into(const ObjId& b) const;

  /// True iff the two categories have identical name, objects, arrows,
  /// dom/cod, identities and composition tables.
  bool extensionally_equal(const FiniteCategory& other) const;

 private:
  friend class CategoryBuilder;
  FiniteCategory() = default;

  std::size_t obj_idx(const ObjId& a) const;
  std::size_t arr_idx(const ArrId& f) const;

  std::string name_;
  std::vector<ObjId> objects_;  // sorted
  std::vector<ArrId> arrows_;   // sorted
  std::unordered_map<ObjId, std::size_t> obj_index_;
  std::unordered_map<ArrId, std::size_t> arr_index_;
  std::vector<ObjId> dom_, cod_;      // by arrow index
  std::vector<ArrId> id_of_;          // by object index
  std::vector<bool> is_id_;           // by arrow index
  std::unordered_map<std::uint64_t, std::size_t> comp_;  // f*|Arr|+g -> composite
  std::vector<std::vector<ArrId>> out_, in_;  // by object index, canonical order

  friend ValidationReport validate_category(const FiniteCategory&);
};

/// Incremental constructor for FiniteCategory. Identities not supplied
/// explicitly are synthesized with the reserved name "id_<obj>"; identity
/// compositions are filled in automatically. Law violations (closure,
/// associativity, identity laws) are representable and left for
/// validate_category to report.
class CategoryBuilder {
 public:
  explicit CategoryBuilder(std::string name);

  CategoryBuilder& object(ObjId a);
  /// Non-identity arrow f: a -> b. Endpoints must already exist.
  CategoryBuilder& arrow(ArrId f, ObjId a, ObjId b);
  /// Identity arrow with an explicit (structural) name, e.g. a tuple or a
  /// square id. Without this call the builder synthesizes "id_<obj>".
  CategoryBuilder& identity_arrow(ArrId f, ObjId a);
  /// Table entry g∘f = fg. Throws NotComposable if cod(f) != dom(g).
  CategoryBuilder& composite(const ArrId& f, const ArrId& g, ArrId fg);

  bool has_object(const ObjId& a) const { return objs_.count(a) != 0; }
  bool has_arrow(const ArrId& f) const { return dom_.count(f) != 0; }
  bool has_composite(const ArrId& f, const ArrId& g) const;

  CategoryRef build();

 private:
  std::string name_;
  std::unordered_map<ObjId, ArrId> objs_;  // object -> identity ("" until known)
  std::unordered_map<ArrId, ObjId> dom_, cod_;
  std::vector<ObjId> obj_order_;
  std::vector<ArrId> arr_order_;
  std::unordered_map<ArrId, bool> is_id_;
  std::map<std::pair<ArrId, ArrId>, ArrId> comp_;
};

/// Checks every FiniteCategory law exhaustively: identity typing, arrow
/// typing, closure of the composition table, identity laws, associativity.
ValidationReport validate_category(const FiniteCategory& cat);

/// Identity of a; throws UnknownObject.
ArrId identity(const FiniteCategory& cat, const ObjId& a);
/// All arrows a -> b in canonical order; throws UnknownObject.
std::vector<ArrId> hom_set(const FiniteCategory& cat, const ObjId& a, const ObjId& b);

/// Nonempty consecutive-composable sequence of arrows, head to tail.
struct ArrowPath {
  std::vector<ArrId> arrows;
};

/// Folds the path through the composition table; throws NotComposable on a
/// broken path, Error on an empty one.
ArrId fold_path(const FiniteCategory& cat, const ArrowPath& p);

/// True iff both paths fold to the same arrow. Throws EndpointMismatch when
/// the paths do not share endpoints.
bool is_commutative(const FiniteCategory& cat, const ArrowPath& p, const ArrowPath& q);

/// Thin category of a partial order: one arrow a -> b iff leq(a, b).
/// Non-identity arrows are named "le_<a>_<b>". Throws NotAPartialOrder if
/// leq is not reflexive, transitive and antisymmetric on elems.
CategoryRef make_poset_category(std::string name, const std::vector<ObjId>& elems,
                                const std::function<bool(const ObjId&, const ObjId&)>& leq);

/// n-ary product category; objects and arrows are tuples "(x,y,...)" with
/// componentwise structure. A singleton list returns its factor unchanged
/// (D^1 = D). Throws InvalidFactor on an empty list or an invalid factor.
CategoryRef product_category(const std::vector<CategoryRef>& factors);

/// Same objects and arrows with dom/cod swapped and the table transposed.
CategoryRef opposite_category(const CategoryRef& cat);

}  // namespace commaforge
