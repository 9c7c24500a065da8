#pragma once

#include <string_view>

#include "commaforge/universal.hpp"

namespace commaforge {

/// 1-based position of a token in the source text.
struct SourceSpan {
  std::size_t line = 1;
  std::size_t column = 1;
  std::size_t length = 0;
};

struct SyntaxError : Error {
  SourceSpan span;
  SyntaxError(const std::string& what, SourceSpan s) : Error(what), span(s) {}
};

struct UnknownReference : Error {
  SourceSpan span;
  UnknownReference(const std::string& what, SourceSpan s) : Error(what), span(s) {}
};

struct ValidationFailure : Error {
  std::string law;
  std::vector<std::string> witnesses;
  ValidationFailure(std::string law_, std::vector<std::string> witnesses_);
};

/// Named categories, functors, transformations and adjunctions, in
/// insertion order per kind. Names are unique per kind; every entity is
/// validated when it enters through the loader.
class Workspace {
 public:
  void add_category(const CategoryRef& cat);
  void add_functor(std::string name, Functor f);
  void add_nat(std::string name, NatTrans tau);
  void add_adjunction(std::string name, Adjunction adj);

  bool has_category(const std::string& name) const { return categories_.count(name) != 0; }
  bool has_functor(const std::string& name) const { return functors_.count(name) != 0; }
  bool has_nat(const std::string& name) const { return nats_.count(name) != 0; }
  bool has_adjunction(const std::string& name) const { return adjunctions_.count(name) != 0; }

  const CategoryRef& category(const std::string& name) const;
  const Functor& functor_named(const std::string& name) const;
  const NatTrans& nat_named(const std::string& name) const;
  const Adjunction& adjunction_named(const std::string& name) const;

  const std::vector<std::string>& category_order() const { return category_order_; }
  const std::vector<std::string>& functor_order() const { return functor_order_; }
  const std::vector<std::string>& nat_order() const { return nat_order_; }
  const std::vector<std::string>& adjunction_order() const { return adjunction_order_; }

  bool extensionally_equal(const Workspace& other) const;

 private:
  std::map<std::string, CategoryRef> categories_;
  std::map<std::string, Functor> functors_;
  std::map<std::string, NatTrans> nats_;
  std::map<std::string, Adjunction> adjunctions_;
  std::vector<std::string> category_order_, functor_order_, nat_order_, adjunction_order_;
};

/// Parses and validates a .cat document. Composition entries forced by the
/// structure (identity composites, singleton hom-sets) may be omitted; the
/// loader completes the table before validating closure.
///
/// Throws SyntaxError, UnknownReference or ValidationFailure.
Workspace parse(std::string_view text);

/// Canonical form: kind-grouped, sorted ids, omitted forced entries and
/// identities, two-space indent. parse(serialize(ws)) is extensionally
/// equal to ws.
std::string serialize(const Workspace& ws);

}  // namespace commaforge
