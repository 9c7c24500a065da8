#pragma once

#include "commaforge/category.hpp"

namespace commaforge {

struct DotOptions {
  bool include_identities = false;
};

/// DOT digraph of a category: one node per object, one labeled edge per
/// arrow. Identity loops are suppressed unless opts.include_identities.
/// Output is deterministic (canonical object/arrow order).
std::string emit_dot(const FiniteCategory& cat, const DotOptions& opts = {});

}  // namespace commaforge
