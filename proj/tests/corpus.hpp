#ifndef ZTOP_TESTS_CORPUS_HPP
#define ZTOP_TESTS_CORPUS_HPP

#include <map>
#include <string>
#include <vector>

#include "ztop/catalog.hpp"
#include "ztop/polytope.hpp"

namespace ztop::testing {

// A polytope with a nontrivial 3-belt (found by an edge-cut search; frozen).
inline SimplePolytope nonflag7() {
  return from_face_cycles({{4, 5, 6},
                           {2, 4, 3},
                           {1, 3, 5, 4},
                           {1, 4, 6, 5, 2},
                           {0, 6, 3, 1, 2, 5},
                           {0, 4, 2, 3, 6},
                           {0, 5, 3, 4}});
}

// Every simple 3-polytope with m <= 9 the suite exercises: all flag ones plus
// representative non-flag members of each small class.
inline std::vector<std::pair<std::string, SimplePolytope>> corpus9() {
  std::vector<std::pair<std::string, SimplePolytope>> v;
  v.emplace_back("simplex", simplex3());
  v.emplace_back("prism3", prism(3));
  v.emplace_back("nonflag7", nonflag7());
  int idx = 0;
  for (auto& P : enumerate_flag(9)) v.emplace_back("flag" + std::to_string(idx++), P);
  return v;
}

}  // namespace ztop::testing

#endif
