#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace commaforge {

// Identifiers are canonical textual tokens, totally ordered by the usual
// string order. Every enumeration in the library iterates in that order,
// so outputs are reproducible run to run.
using ObjId = std::string;
using ArrId = std::string;

// Caps for materialized constructions. A construction that would exceed a
// cap throws SizeBudgetExceeded; nothing is ever truncated silently.
struct Budget {
  std::size_t max_arrows = 20'000;        // arrows per materialized category
  std::uint64_t max_candidates = 1'000'000;  // candidate maps per functor-category enumeration
};

struct Violation {
  std::string law;
  std::vector<std::string> ids;
};

// Carrier for law checks: ok() iff no violation was recorded.
struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string law, std::vector<std::string> ids = {}) {
    violations.push_back(Violation{std::move(law), std::move(ids)});
  }
  bool has(std::string_view law) const {
    for (const auto& v : violations)
      if (v.law == law) return true;
    return false;
  }
  std::string summary() const;
};

}  // namespace commaforge
