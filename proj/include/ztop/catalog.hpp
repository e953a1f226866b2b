#ifndef ZTOP_CATALOG_HPP
#define ZTOP_CATALOG_HPP

#include <string>
#include <vector>

#include "ztop/planar_map.hpp"
#include "ztop/polytope.hpp"

namespace ztop {

// Basic builders.
SimplePolytope simplex3();
SimplePolytope prism(int k);   // k-gonal prism; prism(4) = cube
SimplePolytope barrel(int k);  // k-barrel, k >= 5; barrel(5) = dodecahedron
SimplePolytope as3();          // cube with three disjoint orthogonal edges cut
SimplePolytope p8();           // cube with two disjoint nonadjacent orthogonal edges cut
SimplePolytope pe3();          // permutohedron = cut 3-antiprism
SimplePolytope ideal_from_antiprism(int k);
SimplePolytope c60();          // truncated icosahedron

// Name catalog: simplex, cube, prism:k, barrel:k, antiprism:k, as3, pe3, p8,
// c60, plus aliases m3xi/m5xi/m6xi and dodecahedron.  Error: UnknownName.
SimplePolytope named(const std::string& name);
std::vector<std::string> catalog_names();

struct CutSpec {
  enum class Kind { Edge, TwoAdjacentEdges };
  Kind kind = Kind::Edge;
  int i = -1, j = -1;  // the edge {i,j}, or the ordered edge pair (g&i, g&j)
  int g = -1;          // host face for two-adjacent-edge cuts
  bool enforce_constraints = true;
};

// Cutting off an edge (new quadrangle) or a pair of adjacent edges of a face
// (new pentagon).  Errors: InvalidTarget, ConstraintViolated.
SimplePolytope cut(const SimplePolytope& P, const CutSpec& spec);

// Enumerators (canonical, deduplicated, sorted by (m, canonical code)).
std::vector<SimplePolytope> enumerate_flag(int m_max, int guard = 12);
std::vector<SimplePolytope> enumerate_almost_pogorelov(int m_max, int guard = 12);
std::vector<SimplePolytope> enumerate_ideal_almost_pogorelov(int m_max, int guard = 22);

}  // namespace ztop

#endif
