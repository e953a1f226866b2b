#ifndef ZTOP_POLYTOPE_HPP
#define ZTOP_POLYTOPE_HPP

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ztop/common.hpp"

namespace ztop {

// Combinatorial simple 3-polytope, stored as the rotation system on faces:
// cycles[i] lists the neighbours of face i in cyclic order around i.  All
// derived data (edges, vertices, adjacency masks) is computed and checked by
// from_face_cycles; instances are immutable afterwards.
struct SimplePolytope {
  int m = 0;
  std::vector<std::vector<int>> cycles;
  std::vector<std::pair<int, int>> edges;      // sorted pairs, sorted list
  std::vector<std::array<int, 3>> verts;       // sorted triples, sorted list
  std::vector<Mask> adj;                       // adjacency bitmask per face

  int face_size(int i) const { return (int)cycles[i].size(); }
  bool adjacent(int i, int j) const { return has_bit(adj[i], j); }
  int edge_index(int i, int j) const;          // -1 if not adjacent
  int vertex_index(int a, int b, int c) const; // -1 if not a vertex
  Mask quad_mask() const;                      // faces of size 4
  int p4() const { return popcount(quad_mask()); }
  std::vector<int> p_vector() const;           // p_vector()[k] = #k-gons

  // f-vector (f0, f1, f2) = (#vertices, #edges, #faces).
  std::array<long long, 3> f_vector() const;

  // All 2-element subsets {i,j} with F_i and F_j disjoint.
  std::vector<Mask> n2_pairs() const;
};

// Validates and canonicalizes the input rotation system.  Throws
// ValidationError with name one of: BadIndex, MultiEdge, Asymmetric,
// NonCubic, NonSpherical.
SimplePolytope from_face_cycles(const std::vector<std::vector<int>>& cycles);

// Canonical form: identical byte strings exactly for combinatorially
// equivalent polytopes (face relabelings and reflection).  Lexicographic
// minimum over BFS labelings seeded by every directed edge and both global
// orientations.
std::vector<unsigned char> canonical_code(const SimplePolytope& P);
std::string canonical_code_hex(const SimplePolytope& P);
bool is_isomorphic(const SimplePolytope& P, const SimplePolytope& Q);

// Relabel faces by perm (face i becomes perm[i]); optionally mirror all
// rotations.  Used by invariance tests.
SimplePolytope relabel(const SimplePolytope& P, const std::vector<int>& perm,
                       bool mirror = false);

// Simplicial 2-sphere dual to P: vertices = faces of P, triangles = vertices
// of P.  Triangle orientation signs give a coherent orientation of the
// sphere: or_sign[t] applies to the vertex-sorted triangle verts(t).
struct DualComplex {
  int n = 0;                                   // #vertices (= m)
  std::vector<std::pair<int, int>> edges;      // = P.edges
  std::vector<std::array<int, 3>> tris;        // = P.verts
  std::vector<int> or_sign;                    // +-1 per triangle
  std::vector<Mask> adj;                       // edge adjacency between vertices

  int edge_index(int a, int b) const;
  int tri_index(int a, int b, int c) const;
};

DualComplex dual_complex(const SimplePolytope& P);

}  // namespace ztop

#endif
