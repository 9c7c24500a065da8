#include "commaforge/fixtures.hpp"

namespace commaforge::fixtures {

CategoryRef empty_category() {
  return CategoryBuilder("Zero").build();
}

CategoryRef terminal_category() {
  return CategoryBuilder("One").object("pt").build();
}

CategoryRef walking_arrow() {
  CategoryBuilder b("Two");
  b.object("0").object("1");
  b.arrow("e", "0", "1");
  return b.build();
}

CategoryRef chain(std::size_t n) {
  std::vector<ObjId> elems;
  for (std::size_t i = 0; i < n; ++i) elems.push_back(std::to_string(i));
  return make_poset_category("Chain" + std::to_string(n), elems,
                             [](const ObjId& a, const ObjId& b) {
                               return std::stoul(a) <= std::stoul(b);
                             });
}

CategoryRef parallel_pair() {
  CategoryBuilder b("Pair");
  b.object("a").object("b");
  b.arrow("pf", "a", "b");
  b.arrow("pg", "a", "b");
  return b.build();
}

CategoryRef diamond() {
  std::vector<ObjId> elems = {"bot", "a", "b", "top"};
  auto rank = [](const ObjId& x) { return x == "bot" ? 0 : x == "top" ? 2 : 1; };
  return make_poset_category("Diamond", elems, [rank](const ObjId& x, const ObjId& y) {
    if (x == y) return true;
    if (rank(x) == 1 && rank(y) == 1) return false;
    return rank(x) < rank(y);
  });
}

CategoryRef index_one() {
  return CategoryBuilder("Idx1").object("a1").build();
}

CategoryRef index_two() {
  CategoryBuilder b("Idx2");
  b.object("a1").object("a2");
  b.arrow("l12", "a1", "a2");
  return b.build();
}

CategoryRef index_two_discrete() {
  return CategoryBuilder("Idx2D").object("a1").object("a2").build();
}

CategoryRef index_parallel_pair() {
  CategoryBuilder b("IdxPar");
  b.object("a1").object("a2");
  b.arrow("u", "a1", "a2");
  b.arrow("v", "a1", "a2");
  return b.build();
}

}  // namespace commaforge::fixtures
