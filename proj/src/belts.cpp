#include "ztop/belts.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ztop {

namespace {

std::vector<int> canonical_cycle(std::vector<int> c) {
  // minimal rotation over both directions
  auto best = c;
  int k = (int)c.size();
  for (int dir = 0; dir < 2; ++dir) {
    for (int s = 0; s < k; ++s) {
      std::vector<int> r(k);
      for (int t = 0; t < k; ++t) r[t] = c[(s + t) % k];
      if (r < best) best = r;
    }
    std::reverse(c.begin(), c.end());
  }
  return best;
}

void fill_sides(const SimplePolytope& P, Belt& B) {
  Mask bm = B.mask();
  // connected components of the complement in the face adjacency graph
  std::vector<int> comp(P.m, -1);
  int nc = 0;
  for (int s = 0; s < P.m; ++s) {
    if (has_bit(bm, s) || comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = nc;
    std::vector<int> members;
    while (!stack.empty()) {
      int f = stack.back();
      stack.pop_back();
      members.push_back(f);
      for_bits(P.adj[f] & ~bm, [&](int g) {
        if (comp[g] < 0) {
          comp[g] = nc;
          stack.push_back(g);
        }
      });
    }
    if (members.size() == 1) B.trivial_sides.push_back(members[0]);
    ++nc;
  }
  std::sort(B.trivial_sides.begin(), B.trivial_sides.end());
}

// DFS over induced cycles with the belt vertex condition.  Canonical dedup:
// start = smallest face of the cycle, and second < last.
template <class Sink>
void belt_dfs_from(const SimplePolytope& P, int k, int start, int second, Sink&& sink) {
  if (k == 3) {
    // pairwise adjacent triples without a common vertex
    if (!P.adjacent(start, second)) return;
    for_bits(P.adj[start] & P.adj[second], [&](int t) {
      if (t <= second || second <= start) return;
      if (P.vertex_index(start, second, t) < 0) {
        Belt B;
        B.faces = {start, second, t};
        sink(B);
      }
    });
    return;
  }
  if (!P.adjacent(start, second) || second <= start) return;
  std::vector<int> path{start, second};
  // banned = faces adjacent to some interior path member path[1..d-1]
  // (induced-cycle condition); adjacency with start is handled separately so
  // the cycle can close.
  std::vector<Mask> banned{0};
  auto dfs = [&](auto&& self) -> void {
    int depth = (int)path.size();
    int tail = path.back();
    if (depth == k) {
      if (!P.adjacent(tail, start)) return;
      // reflection dedup: second element smaller than last
      if (path[1] > path.back()) return;
      Belt B;
      B.faces = path;
      sink(B);
      return;
    }
    Mask seen = vec_to_mask(path);
    Mask bad = banned.back() | seen;
    for_bits(P.adj[tail] & ~bad, [&](int nxt) {
      if (nxt < start) return;
      bool closing = (depth + 1 == k);
      if (!closing && P.adjacent(nxt, start)) return;
      path.push_back(nxt);
      banned.push_back(banned.back() | P.adj[tail]);
      self(self);
      banned.pop_back();
      path.pop_back();
    });
  };
  dfs(dfs);
}

std::vector<Belt> finish(const SimplePolytope& P, std::vector<Belt> out) {
  for (auto& B : out) {
    B.faces = canonical_cycle(B.faces);
    fill_sides(P, B);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<Belt> enumerate_belts_serial(const SimplePolytope& P, int k) {
  if (k < 3 || k > P.m) return {};
  std::vector<Belt> out;
  for (int s = 0; s < P.m; ++s)
    for_bits(P.adj[s], [&](int t) {
      belt_dfs_from(P, k, s, t, [&](const Belt& B) { out.push_back(B); });
    });
  return finish(P, std::move(out));
}

std::vector<Belt> enumerate_belts(const SimplePolytope& P, int k) {
  if (k < 3 || k > P.m) return {};
  // parallel over (start, second) seed pairs
  std::vector<std::pair<int, int>> seeds;
  for (int s = 0; s < P.m; ++s)
    for_bits(P.adj[s], [&](int t) { seeds.emplace_back(s, t); });
  std::vector<std::vector<Belt>> parts(seeds.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
  for (int i = 0; i < (int)seeds.size(); ++i) {
    belt_dfs_from(P, k, seeds[i].first, seeds[i].second,
                  [&](const Belt& B) { parts[i].push_back(B); });
  }
  std::vector<Belt> out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return finish(P, std::move(out));
}

std::vector<Belt> all_belts(const SimplePolytope& P) {
  std::vector<Belt> out;
  for (int k = 3; k <= P.m; ++k) {
    auto b = enumerate_belts(P, k);
    out.insert(out.end(), b.begin(), b.end());
  }
  return out;
}

std::pair<std::vector<int>, std::vector<int>> belt_arcs(const Belt& B, int i, int j) {
  int k = B.k();
  int pi = -1, pj = -1;
  for (int t = 0; t < k; ++t) {
    if (B.faces[t] == i) pi = t;
    if (B.faces[t] == j) pj = t;
  }
  std::pair<std::vector<int>, std::vector<int>> arcs;
  for (int t = (pi + 1) % k; t != pj; t = (t + 1) % k) arcs.first.push_back(B.faces[t]);
  for (int t = (pj + 1) % k; t != pi; t = (t + 1) % k) arcs.second.push_back(B.faces[t]);
  return arcs;
}

bool is_flag(const SimplePolytope& P) {
  if (P.m == 4) return false;  // simplex
  return enumerate_belts(P, 3).empty();
}

std::string to_string(FamilyClass c) {
  switch (c) {
    case FamilyClass::Simplex: return "Simplex";
    case FamilyClass::NonFlag: return "NonFlag";
    case FamilyClass::AlmostFlagOnly: return "AlmostFlagOnly";
    case FamilyClass::Flag: return "Flag";
    case FamilyClass::AlmostPogorelov: return "AlmostPogorelov";
    case FamilyClass::IdealAlmostPogorelov: return "IdealAlmostPogorelov";
    case FamilyClass::Pogorelov: return "Pogorelov";
    case FamilyClass::StronglyPogorelov: return "StronglyPogorelov";
  }
  return "?";
}

bool FamilyReport::in_flag() const { return !is_simplex && !has_3belt; }
bool FamilyReport::in_apog() const { return in_flag() && all_4belts_trivial; }
bool FamilyReport::in_pog() const { return in_flag() && !has_4belt; }

FamilyReport classify_family(const SimplePolytope& P) {
  FamilyReport R;
  // ideal test: every vertex lies on exactly one quadrangle
  Mask qm = P.quad_mask();
  R.vertex_on_unique_quad = true;
  for (auto& v : P.verts) {
    int cnt = (int)has_bit(qm, v[0]) + has_bit(qm, v[1]) + has_bit(qm, v[2]);
    if (cnt != 1) R.vertex_on_unique_quad = false;
  }
  if (P.m == 4) {
    R.is_simplex = true;
    R.cls = FamilyClass::Simplex;
    return R;
  }
  // lazily: 3-belts, then 4-belts, then 5-belts
  auto b3 = enumerate_belts(P, 3);
  R.has_3belt = !b3.empty();
  for (auto& B : b3)
    if (!B.trivial()) R.all_3belts_trivial = false;
  if (R.has_3belt) {
    R.cls = R.all_3belts_trivial ? FamilyClass::AlmostFlagOnly : FamilyClass::NonFlag;
    return R;
  }
  auto b4 = enumerate_belts(P, 4);
  R.has_4belt = !b4.empty();
  for (auto& B : b4)
    if (!B.trivial()) R.all_4belts_trivial = false;
  if (!R.all_4belts_trivial) {
    R.cls = FamilyClass::Flag;
    return R;
  }
  if (R.has_4belt) {
    R.cls = R.is_ideal() ? FamilyClass::IdealAlmostPogorelov : FamilyClass::AlmostPogorelov;
    return R;
  }
  auto b5 = enumerate_belts(P, 5);
  for (auto& B : b5)
    if (!B.trivial()) R.has_nontrivial_5belt = true;
  R.cls = R.has_nontrivial_5belt ? FamilyClass::Pogorelov : FamilyClass::StronglyPogorelov;
  return R;
}

namespace {

bool misses_an_arc(const SimplePolytope& P, const Belt& B, int i, int j, int f) {
  auto [a1, a2] = belt_arcs(B, i, j);
  auto hits = [&](const std::vector<int>& arc) {
    for (int g : arc)
      if (g == f || P.adjacent(f, g)) return true;
    return false;
  };
  return !hits(a1) || !hits(a2);
}

bool is_witness(const SimplePolytope& P, const Belt& B, int i, int j, int k) {
  Mask bm = B.mask();
  if (!has_bit(bm, i) || !has_bit(bm, j) || has_bit(bm, k)) return false;
  return misses_an_arc(P, B, i, j, k);
}

}  // namespace

std::optional<Belt> separating_belt(const SimplePolytope& P, const std::vector<Belt>& belts,
                                    int i, int j, int k) {
  if (i == j || j == k || i == k)
    throw UsageError("InvalidTarget", "faces must be pairwise distinct");
  if (P.adjacent(i, j)) throw ValidationError("NotDisjoint", "F_i and F_j are adjacent");
  for (const auto& B : belts)
    if (is_witness(P, B, i, j, k)) return B;
  return std::nullopt;
}

std::optional<Belt> separating_belt(const SimplePolytope& P, int i, int j, int k) {
  return separating_belt(P, all_belts(P), i, j, k);
}

bool satisfies_apb_condition(const SimplePolytope& P) {
  if (!is_flag(P)) throw ValidationError("NotFlag", "predicate requires a flag polytope");
  auto belts = all_belts(P);
  Mask qm = P.quad_mask();
  for (int i = 0; i < P.m; ++i)
    for (int j = i + 1; j < P.m; ++j) {
      if (P.adjacent(i, j)) continue;
      for (int k = 0; k < P.m; ++k) {
        if (k == i || k == j) continue;
        bool rhs = !(has_bit(qm, i) && P.adjacent(k, i)) && !(has_bit(qm, j) && P.adjacent(k, j));
        bool lhs = separating_belt(P, belts, i, j, k).has_value();
        if (lhs != rhs) return false;
      }
    }
  return true;
}

bool is_good_pair(const SimplePolytope& P, const std::vector<Belt>& belts, Mask omega_prime,
                  Mask omega) {
  if (popcount(omega_prime) != 2 || popcount(omega) != 2 || omega_prime == omega)
    throw UsageError("InvalidPair", "need two distinct N2 pairs");
  auto wp = mask_to_vec(omega_prime);
  auto w = mask_to_vec(omega);
  if (P.adjacent(wp[0], wp[1]) || P.adjacent(w[0], w[1]))
    throw UsageError("InvalidPair", "arguments must be pairs of disjoint faces");
  int s = wp[0], t = wp[1];
  for (const auto& B : belts) {
    Mask bm = B.mask();
    if (!has_bit(bm, s) || !has_bit(bm, t)) continue;
    for (int f : w)
      if (!has_bit(bm, f) && misses_an_arc(P, B, s, t, f)) return true;
  }
  return false;
}

bool is_good_pair(const SimplePolytope& P, Mask omega_prime, Mask omega) {
  return is_good_pair(P, all_belts(P), omega_prime, omega);
}

std::vector<Belt> quad_alternating_belts(const SimplePolytope& P) {
  Mask qm = P.quad_mask();
  std::vector<Belt> out;
  for (int k = 3; 2 * k <= P.m; ++k) {
    for (auto& B : enumerate_belts(P, 2 * k)) {
      int par = -1;
      bool ok = true;
      for (int t = 0; t < 2 * k && ok; ++t) {
        int q = has_bit(qm, B.faces[t]) ? 1 : 0;
        if (t == 0)
          par = q;
        else if (q != (par ^ (t & 1)))
          ok = false;
      }
      if (ok) out.push_back(B);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ztop
