#ifndef ZTOP_PLANAR_MAP_HPP
#define ZTOP_PLANAR_MAP_HPP

#include <utility>
#include <vector>

#include "ztop/common.hpp"
#include "ztop/polytope.hpp"

namespace ztop {

// Embedded planar graph as a rotation system: rot[v] lists the neighbours of
// v in cyclic order.  Simple graphs only (no loops or parallel edges), which
// covers everything this project builds.
struct PlanarMap {
  int n = 0;
  std::vector<std::vector<int>> rot;

  int degree(int v) const { return (int)rot[v].size(); }
  std::vector<std::pair<int, int>> edge_list() const;
  // Faces as closed vertex walks (each face once); orbit of the dart
  // successor (u->v) |-> (v, rot[v].next(u)).
  std::vector<std::vector<int>> faces() const;
  long long euler() const;
};

// Throws ValidationError if rot is not a simple spherical map.
void validate_map(const PlanarMap& M);

// 4-valent spherical map (graph of an ideal right-angled polytope candidate).
struct QuadGraph {
  PlanarMap map;
};

QuadGraph as_quad_graph(PlanarMap M);  // validates degree-4 + sphere

// The primal graph of a simple polytope: vertices = corner triples of P.
PlanarMap primal_map(const SimplePolytope& P);

// The dual 1-skeleton with rotations = face cycles of P (a triangulation's
// skeleton when P is simple; usable for truncation).
PlanarMap face_map(const SimplePolytope& P);

// Medial graph: vertices = edges of M, adjacency = consecutive around a face.
QuadGraph medial(const PlanarMap& M);
QuadGraph medial(const SimplePolytope& P);

// Truncate every vertex of an arbitrary spherical map: the result is a simple
// 3-polytope with faces(M) + n(M) faces.  For 4-valent maps this is the
// quadrangle-cutting bijection onto ideal almost Pogorelov polytopes.
SimplePolytope truncate_all_vertices(const PlanarMap& M);
SimplePolytope cut_4_valent_vertices(const QuadGraph& G);  // DegenerateResult on failure

struct EdgeTwistSpec {
  std::pair<int, int> e1;
  std::pair<int, int> e2;
  bool restricted = true;
};

// Replaces two disjoint edges of a common face by two paths through one new
// vertex where they cross.  Errors: NotSameFace, NotDisjoint, NotRestricted.
QuadGraph edge_twist(const QuadGraph& G, const EdgeTwistSpec& spec);

// All restricted twist specs available on G (for enumeration).
std::vector<EdgeTwistSpec> restricted_twists(const QuadGraph& G);

// Catalog of maps.
PlanarMap antiprism_map(int k);  // 4-valent, k >= 3
PlanarMap pyramid_map(int k);    // k-gonal pyramid graph, k >= 3

}  // namespace ztop

#endif
