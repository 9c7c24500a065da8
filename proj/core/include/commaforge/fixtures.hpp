#pragma once

#include "commaforge/category.hpp"

namespace commaforge::fixtures {

/// The empty category 0.
CategoryRef empty_category();
/// The terminal category 1: one object "pt".
CategoryRef terminal_category();
/// The walking arrow 2: objects 0, 1 and e: 0 -> 1.
CategoryRef walking_arrow();
/// The chain poset 0 <= 1 <= ... <= n-1 named "Chain<n>". chain(3) is the
/// category called Three throughout the tests.
CategoryRef chain(std::size_t n);
/// Two parallel non-identity arrows pf, pg: a -> b.
CategoryRef parallel_pair();
/// The four-element lattice bot <= a, b <= top.
CategoryRef diamond();

/// Index categories for functor categories and (co)limits.
CategoryRef index_one();            // one object a1
CategoryRef index_two();            // a1, a2 with l12: a1 -> a2
CategoryRef index_two_discrete();   // a1, a2, no non-identity arrows
CategoryRef index_parallel_pair();  // a1, a2 with u, v: a1 -> a2

}  // namespace commaforge::fixtures
