#ifndef ZTOP_BELTS_HPP
#define ZTOP_BELTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "ztop/common.hpp"
#include "ztop/polytope.hpp"

namespace ztop {

// k-belt: cyclic sequence of faces, consecutive ones adjacent, non-consecutive
// ones disjoint, no three sharing a vertex.  Stored in the lexicographically
// minimal rotation/reflection.
struct Belt {
  std::vector<int> faces;
  std::vector<int> trivial_sides;  // single-face complement components (0..2 entries)

  int k() const { return (int)faces.size(); }
  bool trivial() const { return !trivial_sides.empty(); }
  Mask mask() const { return vec_to_mask(faces); }
  bool operator<(const Belt& o) const {
    if (faces.size() != o.faces.size()) return faces.size() < o.faces.size();
    return faces < o.faces;
  }
  bool operator==(const Belt& o) const { return faces == o.faces; }
};

// Complete duplicate-free list of k-belts, canonically sorted.
std::vector<Belt> enumerate_belts(const SimplePolytope& P, int k);
std::vector<Belt> enumerate_belts_serial(const SimplePolytope& P, int k);  // reference

// All belts of every length 3..m (cached by callers where it matters).
std::vector<Belt> all_belts(const SimplePolytope& P);

// The two arcs of belt faces strictly between positions of faces i and j
// (i, j must be non-adjacent members of the belt).
std::pair<std::vector<int>, std::vector<int>> belt_arcs(const Belt& B, int i, int j);

bool is_flag(const SimplePolytope& P);

enum class FamilyClass {
  Simplex,
  NonFlag,
  AlmostFlagOnly,
  Flag,
  AlmostPogorelov,
  IdealAlmostPogorelov,
  Pogorelov,
  StronglyPogorelov,
};

std::string to_string(FamilyClass c);

struct FamilyReport {
  FamilyClass cls;
  bool is_simplex = false;
  bool has_3belt = false;
  bool all_3belts_trivial = true;
  bool has_4belt = false;
  bool all_4belts_trivial = true;
  bool has_nontrivial_5belt = false;
  bool vertex_on_unique_quad = false;
  // membership helpers along the nested chain
  bool in_flag() const;
  bool in_apog() const;        // all 4-belts trivial (flag)
  bool in_pog() const;         // no 4-belts (flag)
  bool is_ideal() const { return in_apog() && vertex_on_unique_quad; }
};

FamilyReport classify_family(const SimplePolytope& P);

// Searches belts through F_i and F_j avoiding F_k such that F_k misses at
// least one of the two arcs; shortest/lex-first witness.  Error: NotDisjoint.
std::optional<Belt> separating_belt(const SimplePolytope& P, int i, int j, int k);
std::optional<Belt> separating_belt(const SimplePolytope& P, const std::vector<Belt>& belts,
                                    int i, int j, int k);

// Lemma-style predicate: for flag P, every admissible triple has a separating
// belt exactly when F_k avoids the quadrangles among {F_i, F_j}.
bool satisfies_apb_condition(const SimplePolytope& P);

// omega_prime = {s,t}, omega = {p,q}, both in N2(P).  True iff a belt through
// F_s, F_t leaves F_p or F_q off-belt and missing one arc.
bool is_good_pair(const SimplePolytope& P, Mask omega_prime, Mask omega);
bool is_good_pair(const SimplePolytope& P, const std::vector<Belt>& belts, Mask omega_prime,
                  Mask omega);

// (2k)-belts whose faces alternate quadrangle / non-quadrangle.
std::vector<Belt> quad_alternating_belts(const SimplePolytope& P);

}  // namespace ztop

#endif
