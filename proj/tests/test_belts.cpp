#include <doctest.h>

#include <functional>
#include <map>

#include <set>

#include "corpus.hpp"
#include "ztop/belts.hpp"
#include "ztop/catalog.hpp"

using namespace ztop;
using ztop::testing::corpus9;

namespace {

// Independent oracle: filter all k-subsets of faces.
std::vector<Belt> belts_naive(const SimplePolytope& P, int k) {
  std::vector<Belt> out;
  std::vector<int> pick;
  auto is_belt = [&](const std::vector<int>& fs) -> std::optional<std::vector<int>> {
    // the induced adjacency graph must be a single k-cycle
    int n = (int)fs.size();
    std::vector<std::vector<int>> nb(n);
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (P.adjacent(fs[a], fs[b])) {
          nb[a].push_back(b);
          nb[b].push_back(a);
        }
    for (auto& x : nb)
      if (x.size() != 2) return std::nullopt;
    std::vector<int> cyc{0};
    int prev = -1, cur = 0;
    for (int t = 1; t < n; ++t) {
      int nxt = (nb[cur][0] == prev) ? nb[cur][1] : nb[cur][0];
      cyc.push_back(nxt);
      prev = cur;
      cur = nxt;
    }
    if (std::set<int>(cyc.begin(), cyc.end()).size() != (size_t)n) return std::nullopt;
    // no three faces share a vertex
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int c = b + 1; c < n; ++c)
          if (P.vertex_index(fs[a], fs[b], fs[c]) >= 0) return std::nullopt;
    std::vector<int> faces;
    for (int t : cyc) faces.push_back(fs[t]);
    return faces;
  };
  std::function<void(int, int)> rec = [&](int from, int left) {
    if (left == 0) {
      if (auto c = is_belt(pick)) {
        Belt B;
        B.faces = *c;
        out.push_back(B);
      }
      return;
    }
    for (int f = from; f <= P.m - left; ++f) {
      pick.push_back(f);
      rec(f + 1, left - 1);
      pick.pop_back();
    }
  };
  rec(0, k);
  return out;
}

}  // namespace

TEST_CASE("belt enumeration agrees with the naive subset oracle") {
  for (auto& [name, P] : corpus9()) {
    CAPTURE(name);
    for (int k = 3; k <= P.m; ++k) {
      auto fast = enumerate_belts(P, k);
      auto slow = belts_naive(P, k);
      CHECK(fast.size() == slow.size());
      std::set<Mask> f, s;
      for (auto& B : fast) f.insert(B.mask());
      for (auto& B : slow) s.insert(B.mask());
      CHECK(f == s);
    }
  }
}

TEST_CASE("parallel and serial belt enumeration agree") {
  for (auto P : {as3(), pe3(), barrel(5)})
    for (int k = 3; k <= 6; ++k) {
      auto a = enumerate_belts(P, k);
      auto b = enumerate_belts_serial(P, k);
      CHECK(a.size() == b.size());
      for (size_t t = 0; t < a.size(); ++t) {
        CHECK(a[t].faces == b[t].faces);
        CHECK(a[t].trivial_sides == b[t].trivial_sides);
      }
    }
}

TEST_CASE("triangular prism has exactly one 3-belt") {
  auto b = enumerate_belts(prism(3), 3);
  REQUIRE(b.size() == 1);
  CHECK(b[0].faces == std::vector<int>{2, 3, 4});
  CHECK(b[0].trivial_sides == std::vector<int>{0, 1});  // surrounds both bases
}

TEST_CASE("P8 and the hexagonal prism 4-belt censuses") {
  auto b = enumerate_belts(p8(), 4);
  int triv = 0;
  for (auto& B : b) triv += B.trivial();
  CHECK(b.size() == 5);
  CHECK(triv == 4);
  b = enumerate_belts(prism(6), 4);
  triv = 0;
  for (auto& B : b) triv += B.trivial();
  CHECK(b.size() == 9);
  CHECK(triv == 6);
}

TEST_CASE("barrels and the fullerene have no short belts") {
  CHECK(enumerate_belts(barrel(5), 3).empty());
  CHECK(enumerate_belts(barrel(5), 4).empty());
  CHECK(enumerate_belts(c60(), 3).empty());
  CHECK(enumerate_belts(c60(), 4).empty());
}

TEST_CASE("is_flag") {
  CHECK_FALSE(is_flag(simplex3()));
  CHECK_FALSE(is_flag(prism(3)));
  CHECK(is_flag(prism(4)));
  // direct definition cross-check on the corpus: flag iff P != simplex and
  // every pairwise-adjacent triple has a common vertex
  for (auto& [name, P] : corpus9()) {
    CAPTURE(name);
    bool direct = P.m > 4;
    for (int a = 0; a < P.m && direct; ++a)
      for (int b = a + 1; b < P.m && direct; ++b)
        for (int c = b + 1; c < P.m && direct; ++c)
          if (P.adjacent(a, b) && P.adjacent(a, c) && P.adjacent(b, c) &&
              P.vertex_index(a, b, c) < 0)
            direct = false;
    CHECK(direct == is_flag(P));
  }
}

TEST_CASE("family classification of the named polytopes") {
  CHECK(classify_family(simplex3()).cls == FamilyClass::Simplex);
  CHECK(classify_family(prism(3)).cls == FamilyClass::AlmostFlagOnly);
  CHECK(classify_family(ztop::testing::nonflag7()).cls == FamilyClass::NonFlag);
  CHECK(classify_family(prism(4)).cls == FamilyClass::AlmostPogorelov);
  CHECK(classify_family(prism(5)).cls == FamilyClass::AlmostPogorelov);
  CHECK(classify_family(prism(6)).cls == FamilyClass::Flag);
  CHECK(classify_family(as3()).cls == FamilyClass::AlmostPogorelov);
  CHECK(classify_family(pe3()).cls == FamilyClass::IdealAlmostPogorelov);
  // barrels and C60 are Pogorelov polytopes; both in fact have only trivial
  // 5-belts, so the most specific class is the strong one
  auto rb = classify_family(barrel(5));
  CHECK(rb.in_pog());
  CHECK(rb.cls == FamilyClass::StronglyPogorelov);
  auto rc = classify_family(c60());
  CHECK(rc.in_pog());
  CHECK(rc.cls == FamilyClass::StronglyPogorelov);
  auto rb6 = classify_family(barrel(6));
  CHECK(rb6.in_pog());
}

TEST_CASE("every face of a flag polytope is surrounded by a belt") {
  for (auto& P : enumerate_flag(10)) {
    for (int f = 0; f < P.m; ++f) {
      Belt B;
      B.faces = P.cycles[f];
      // the link of f, in rotation order, must be a belt: enumerate and find
      bool found = false;
      for (auto& C : enumerate_belts(P, P.face_size(f)))
        if (C.mask() == vec_to_mask(P.cycles[f])) {
          found = true;
          for (int s : C.trivial_sides)
            if (s == f) goto ok;
        }
      CHECK(found);
    ok:;
    }
  }
}

TEST_CASE("loop around an adjacent pair minus corner quadrangles is a belt") {
  // Lemma-style invariant for almost Pogorelov polytopes other than the two
  // prisms, checked on all enumerated members and Pe3
  auto members = enumerate_almost_pogorelov(11);
  members.push_back(pe3());
  for (auto& P : members) {
    if (P.m < 9) continue;
    Mask qm = P.quad_mask();
    for (auto [i, j] : P.edges) {
      // walk around the pair: faces adjacent to i or j, minus i, j
      // u, v = the two faces meeting the edge i&j at its endpoints
      const auto& ci = P.cycles[i];
      int k = (int)ci.size(), u = -1, v = -1;
      for (int t = 0; t < k; ++t)
        if (ci[t] == j) {
          u = ci[(t + k - 1) % k];
          v = ci[(t + 1) % k];
        }
      Mask loop = (P.adj[i] | P.adj[j]) & ~bit(i) & ~bit(j);
      Mask keep = loop & ~((has_bit(qm, u) ? bit(u) : 0) | (has_bit(qm, v) ? bit(v) : 0));
      // keep must be the face set of a belt
      int len = popcount(keep);
      bool found = false;
      for (auto& B : enumerate_belts(P, len))
        if (B.mask() == keep) found = true;
      CHECK(found);
    }
  }
}

TEST_CASE("every nonadjacent pair of an almost Pogorelov polytope lies in at most one 4-belt") {
  auto members = enumerate_almost_pogorelov(11);
  members.push_back(pe3());
  for (auto& P : members) {
    if (P.m < 9) continue;  // excludes the cube and the pentagonal prism
    auto b4 = enumerate_belts(P, 4);
    for (Mask w : P.n2_pairs()) {
      int cnt = 0;
      for (auto& B : b4)
        if ((B.mask() & w) == w) ++cnt;
      CHECK(cnt <= 1);
    }
  }
}

TEST_CASE("long belts of flag polytopes contain a pair outside all 4-belts") {
  // except the side belt of a k-gonal prism
  for (auto& P : enumerate_flag(9)) {
    auto b4 = enumerate_belts(P, 4);
    for (int k = 5; k <= P.m; ++k)
      for (auto& B : enumerate_belts(P, k)) {
        bool haspair = false;
        for (int a = 0; a < k && !haspair; ++a)
          for (int b = a + 1; b < k && !haspair; ++b) {
            if (P.adjacent(B.faces[a], B.faces[b])) continue;
            Mask w = bit(B.faces[a]) | bit(B.faces[b]);
            bool in4 = false;
            for (auto& C : b4)
              if ((C.mask() & w) == w) in4 = true;
            if (!in4) haspair = true;
          }
        bool prism_side = B.trivial_sides.size() == 2;
        CHECK((haspair || prism_side));
      }
  }
}

TEST_CASE("separating belts on the dodecahedron (SCC)") {
  SimplePolytope P = barrel(5);
  auto belts = all_belts(P);
  for (int i = 0; i < P.m; ++i)
    for (int j = i + 1; j < P.m; ++j) {
      if (P.adjacent(i, j)) continue;
      for (int k = 0; k < P.m; ++k) {
        if (k == i || k == j) continue;
        auto B = separating_belt(P, belts, i, j, k);
        CHECK(B.has_value());
        if (B) CHECK(B->k() >= 5);
      }
    }
}

TEST_CASE("separating belt examples on As3") {
  SimplePolytope P = as3();
  auto belts = all_belts(P);
  Mask qm = P.quad_mask();
  // a quadrangle F_i adjacent to F_k blocks separation
  int qi = std::countr_zero(qm);
  int fj = -1, fk = -1;
  for (int f = 0; f < P.m; ++f)
    if (!P.adjacent(qi, f) && f != qi) fj = f;
  for (int f = 0; f < P.m; ++f)
    if (P.adjacent(qi, f) && f != fj) fk = f;
  CHECK_FALSE(separating_belt(P, belts, qi, fj, fk).has_value());
  // F_k disjoint from all quadrangles among {F_i, F_j}: witness exists
  for (int i = 0; i < P.m; ++i)
    for (int j = i + 1; j < P.m; ++j) {
      if (P.adjacent(i, j)) continue;
      for (int k = 0; k < P.m; ++k) {
        if (k == i || k == j) continue;
        bool quad_free = !(has_bit(qm, i) && P.adjacent(k, i)) &&
                         !(has_bit(qm, j) && P.adjacent(k, j));
        if (quad_free) CHECK(separating_belt(P, belts, i, j, k).has_value());
      }
    }
  CHECK_THROWS_AS(separating_belt(P, belts, 0, P.cycles[0][0], 5), ValidationError);
}

TEST_CASE("apb condition characterizes almost Pogorelov or P8 among flag polytopes") {
  CHECK(satisfies_apb_condition(as3()));
  CHECK(satisfies_apb_condition(p8()));
  CHECK_FALSE(satisfies_apb_condition(prism(6)));
  CHECK_THROWS_AS(satisfies_apb_condition(prism(3)), ValidationError);
}

TEST_CASE("good and bad pairs on As3") {
  SimplePolytope P = as3();
  auto belts = all_belts(P);
  Mask qm = P.quad_mask();
  for (Mask w : P.n2_pairs()) {
    auto v = mask_to_vec(w);
    int quads = (int)has_bit(qm, v[0]) + has_bit(qm, v[1]);
    int bad = 0;
    for (Mask wp : P.n2_pairs())
      if (wp != w && !is_good_pair(P, belts, wp, w)) ++bad;
    if (quads == 2) CHECK(bad == 0);
    if (quads == 1) CHECK(bad == 2);
    if (quads == 0) CHECK(bad == 7);
  }
  CHECK_THROWS_AS(is_good_pair(P, belts, P.n2_pairs()[0], P.n2_pairs()[0]), UsageError);
}

TEST_CASE("quad-alternating belts") {
  // every hexagon of Pe3 is surrounded by an alternating trivial 6-belt
  SimplePolytope P = pe3();
  auto qa = quad_alternating_belts(P);
  int hex6 = 0;
  for (auto& B : qa)
    if (B.k() == 6 && B.trivial_sides.size() == 1 && P.face_size(B.trivial_sides[0]) == 6)
      ++hex6;
  CHECK(hex6 == 8);
  // As3: alternating belts need 2k >= 6
  for (auto& B : quad_alternating_belts(as3())) CHECK(B.k() >= 6);
  // cube: no alternating belts at all
  CHECK(quad_alternating_belts(prism(4)).empty());
}

TEST_CASE("separating belt is relabeling invariant") {
  SimplePolytope P = as3();
  std::vector<int> perm(P.m);
  for (int i = 0; i < P.m; ++i) perm[i] = (i + 3) % P.m;
  SimplePolytope Q = relabel(P, perm);
  auto bp = all_belts(P), bq = all_belts(Q);
  for (int i = 0; i < P.m; ++i)
    for (int j = i + 1; j < P.m; ++j) {
      if (P.adjacent(i, j)) continue;
      for (int k = 0; k < P.m; ++k) {
        if (k == i || k == j) continue;
        bool a = separating_belt(P, bp, i, j, k).has_value();
        bool b = separating_belt(Q, bq, perm[i], perm[j], perm[k]).has_value();
        CHECK(a == b);
      }
    }
}
