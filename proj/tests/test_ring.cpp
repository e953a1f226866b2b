#include <doctest.h>

#include <functional>
#include <map>
#include <set>

#include <random>

#include "corpus.hpp"
#include "ztop/belts.hpp"
#include "ztop/catalog.hpp"
#include "ztop/torring.hpp"

using namespace ztop;
using ztop::testing::corpus9;

TEST_CASE("ring of the simplex is an exterior-style pair") {
  auto T = build_ring(simplex3());
  CHECK(T->total_dim() == 2);
  auto u = T->unit(), t = T->top();
  CHECK(T->multiply(u, t) == t);
  CHECK(T->multiply(t, t).is_zero());
  CHECK(T->top_coefficient(T->multiply(u, t)) == 1);
}

TEST_CASE("As3 ring dimensions and distinguished ranks") {
  auto T = build_ring(as3());
  CHECK(T->total_dim() == 156);
  auto R = T->ranks();
  CHECK(R.n2 == 15);
  CHECK(R.a3 == 9);
  CHECK(R.b4 == 3);
  CHECK(R.h3 == 6);
  CHECK(2 * R.b4 == R.h3);
  CHECK(R.b5 == 12);  // derived 5-belt census of As3
  CHECK(R.i7 == R.b5 + (9 - 5) * R.b4);
  CHECK(R.a7 == R.b5);
  CHECK(R.bold_i7 == (9 - 5) * R.b4);
}

TEST_CASE("unit is the multiplicative identity") {
  auto T = build_ring(as3());
  std::mt19937 rng(3);
  for (int t = 0; t < 25; ++t) {
    int id = (int)(rng() % T->total_dim());
    auto x = T->basis_element(id);
    CHECK(T->multiply(x, T->unit()) == x);
    CHECK(T->multiply(T->unit(), x) == x);
  }
}

TEST_CASE("products of omega elements hit belt classes") {
  auto T = build_ring(as3());
  // omega~ * omega~' = +-B~4 when the union is a 4-belt
  for (auto& B : T->belts4()) {
    Mask bm = B.mask();
    // the two nonadjacent pairs inside the belt
    const SimplePolytope& P = T->polytope();
    std::vector<std::pair<Mask, Mask>> splits;
    auto f = B.faces;
    splits.push_back({bit(f[0]) | bit(f[2]), bit(f[1]) | bit(f[3])});
    for (auto& [w1, w2] : splits) {
      auto prod = T->multiply(T->omega_tilde(w1), T->omega_tilde(w2));
      auto be = T->belt_element(B);
      bool plus = prod == be;
      bool minus = prod == be.scaled(-1);
      CHECK((plus || minus));
      (void)P;
      (void)bm;
    }
  }
  // intersecting supports multiply to zero
  auto n2 = T->n2();
  for (Mask a : n2)
    for (Mask b : n2)
      if ((a & b) && a != b) CHECK(T->multiply(T->omega_tilde(a), T->omega_tilde(b)).is_zero());
}

TEST_CASE("cube: product of distinct opposite-face pairs is a belt class") {
  auto T = build_ring(prism(4));
  auto n2 = T->n2();
  REQUIRE(n2.size() == 3);
  for (Mask a : n2)
    for (Mask b : n2) {
      if (a == b) continue;
      auto prod = T->multiply(T->omega_tilde(a), T->omega_tilde(b));
      CHECK_FALSE(prod.is_zero());
      // the union is a 4-belt
      bool found = false;
      for (auto& B : T->belts4())
        if (B.mask() == (a | b)) found = true;
      CHECK(found);
    }
  auto R = T->ranks();
  CHECK(R.a3 == 0);
  CHECK(R.b4 == 3);
  CHECK(R.h3 == 3);
  CHECK_FALSE(T->criterion_bapog());  // 2*3 != 3
}

TEST_CASE("ring axioms on the small corpus") {
  for (auto& [name, P] : corpus9()) {
    if (P.m > 8) continue;  // As3-scale runs live in the acceptance suite
    CAPTURE(name);
    auto T = build_ring(P);
    int N = T->total_dim();
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b) {
        auto ra = T->ref(a), rb = T->ref(b);
        auto xy = T->multiply(T->basis_element(a), T->basis_element(b));
        if (ra.omega & rb.omega) {
          CHECK(xy.is_zero());
          continue;
        }
        auto yx = T->multiply(T->basis_element(b), T->basis_element(a));
        int da = T->degree_of_block(ra.omega, ra.p), db = T->degree_of_block(rb.omega, rb.p);
        CHECK(xy == ((da * db) % 2 ? yx.scaled(-1) : yx));
        for (int c = 0; c < N; ++c) {
          auto rc = T->ref(c);
          if (((ra.omega | rb.omega) & rc.omega)) continue;
          auto l = T->multiply(xy, T->basis_element(c));
          auto r = T->multiply(T->basis_element(a),
                               T->multiply(T->basis_element(b), T->basis_element(c)));
          CHECK(l == r);
        }
      }
  }
}

TEST_CASE("Poincare pairing is unimodular blockwise") {
  for (auto& [name, P] : corpus9()) {
    if (P.m > 9) continue;
    CAPTURE(name);
    auto T = build_ring(P);
    for (auto& [w, p] : T->block_keys()) CHECK(T->pairing_unimodular(w, p));
  }
}

TEST_CASE("annihilator codimensions on As3") {
  SimplePolytope P = as3();
  auto T = build_ring(P);
  Mask qm = P.quad_mask();
  for (Mask w : T->n2()) {
    auto v = mask_to_vec(w);
    int quads = (int)has_bit(qm, v[0]) + has_bit(qm, v[1]);
    long long codim = T->annihilator_codim(T->omega_tilde(w));
    if (quads == 2) CHECK(codim == 5);
    if (quads == 1) CHECK(codim == 9);
    if (quads == 0) CHECK(codim == 21);
    CHECK(T->annihilator_dim(T->omega_tilde(w)) == T->total_dim() - 1 - codim);
  }
}

TEST_CASE("annihilator equality for the mixed combinations") {
  SimplePolytope P = as3();
  auto T = build_ring(P);
  // omega = a quadrangle with its disjoint pentagon; omega_1/2 = the two
  // quad-quad pairs through the quadrangle
  Mask qm = P.quad_mask();
  int p = std::countr_zero(qm);
  int q = -1;
  for (int f = 0; f < P.m; ++f)
    if (P.face_size(f) == 5 && !P.adjacent(p, f)) q = f;
  std::vector<int> uv;
  for_bits(qm & ~bit(p), [&](int f) { uv.push_back(f); });
  auto w0 = T->omega_tilde(bit(p) | bit(q));
  auto w1 = T->omega_tilde(bit(p) | bit(uv[0]));
  auto w2 = T->omega_tilde(bit(p) | bit(uv[1]));
  long long base = T->annihilator_dim(w0);
  for (auto [l1, l2] : {std::pair<Rat, Rat>{1, 1}, {-2, 3}, {Rat(1) / 2, -5}}) {
    auto alpha = w0 + w1.scaled(l1) + w2.scaled(l2);
    CHECK(T->annihilator_codim(alpha) == 9);
    CHECK(T->annihilator_dim(alpha) == base);
  }
}

TEST_CASE("annihilator bound for arbitrary combinations") {
  std::mt19937 rng(11);
  for (auto P : {as3(), p8()}) {
    auto T = build_ring(P);
    auto n2 = T->n2();
    for (int t = 0; t < 30; ++t) {
      // random alpha with 2..4 nonzero coefficients
      int terms = 2 + (int)(rng() % 3);
      std::map<Mask, Rat> coef;
      while ((int)coef.size() < terms) {
        Mask w = n2[rng() % n2.size()];
        coef[w] = Rat(1 + (int)(rng() % 5)) * ((rng() & 1) ? 1 : -1);
      }
      RingElement alpha;
      alpha.table = T.get();
      for (auto& [w, c] : coef) alpha = alpha + T->omega_tilde(w).scaled(c);
      for (auto& [w, c] : coef)
        CHECK(T->annihilator_dim(alpha) <= T->annihilator_dim(T->omega_tilde(w)));
    }
  }
}

TEST_CASE("annihilator strictness when a good pair participates") {
  SimplePolytope P = as3();
  auto T = build_ring(P);
  auto belts = all_belts(P);
  auto n2 = T->n2();
  int checked = 0;
  for (Mask w : n2)
    for (Mask wp : n2) {
      if (w == wp || (w & wp)) continue;
      if (!is_good_pair(P, belts, wp, w)) continue;
      auto alpha = T->omega_tilde(w) + T->omega_tilde(wp);
      CHECK(T->annihilator_dim(alpha) < T->annihilator_dim(T->omega_tilde(w)));
      if (++checked >= 10) return;
    }
}

TEST_CASE("belt class divisibility follows belt membership") {
  SimplePolytope P = as3();
  auto T = build_ring(P);
  for (auto& B : T->belts4()) {
    auto be = T->belt_element(B);
    for (Mask w : T->n2())
      CHECK(T->is_divisible_by(be, w) == ((B.mask() & w) == w));
  }
  for (auto& B : T->belts5()) {
    auto be = T->belt_element(B);
    for (Mask w : T->n2())
      CHECK(T->is_divisible_by(be, w) == ((B.mask() & w) == w));
  }
}

TEST_CASE("elements with a nonzero H~0 part are never divisible by omega~") {
  auto T = build_ring(as3());
  Mask w = T->n2()[0];
  // pick some H~0 basis element with support disjoint from w
  for (auto& [wo, p] : T->block_keys()) {
    if (p != 0 || (wo & w)) continue;
    auto x = T->basis_element(T->id(wo, p, 0));
    CHECK_FALSE(T->is_divisible_by(x, w));
    break;
  }
}

TEST_CASE("whole-coset divisibility for a quadrangle belt") {
  SimplePolytope P = as3();
  auto T = build_ring(P);
  Mask qm = P.quad_mask();
  for (auto& B : T->belts4()) {
    REQUIRE(B.trivial_sides.size() == 1);
    int quad = B.trivial_sides[0];
    CHECK(has_bit(qm, quad));
    // the two opposite pairs of the belt around the quadrangle
    for (int s = 0; s < 2; ++s) {
      Mask pr = bit(B.faces[s]) | bit(B.faces[s + 2]);
      CHECK(T->divisible_by_whole_coset(T->belt_element(B), pr));
    }
  }
}

TEST_CASE("subgroup A3 equals the pairs outside all 4-belts") {
  for (auto P : {as3(), p8(), prism(4), prism(6), barrel(5)}) {
    auto T = build_ring(P);
    auto n20 = T->subgroup_a3();
    auto b4 = enumerate_belts(P, 4);
    for (Mask w : T->n2()) {
      bool inbelt = false;
      for (auto& B : b4)
        if ((B.mask() & w) == w) inbelt = true;
      bool in_n20 = std::find(n20.begin(), n20.end(), w) != n20.end();
      CHECK(in_n20 == !inbelt);
    }
  }
}

TEST_CASE("Pogorelov polytopes satisfy the almost Pogorelov criterion") {
  auto T = build_ring(barrel(5));
  auto R = T->ranks();
  CHECK(R.b4 == 0);
  CHECK(R.h3 == 0);
  CHECK(R.b5 == 12);
  CHECK(T->criterion_bapog());        // Pogorelov implies almost Pogorelov
  CHECK_FALSE(T->criterion_ideal_bapog());
}

TEST_CASE("ideal criterion singles out the ideal members") {
  auto T = build_ring(pe3());
  auto R = T->ranks();
  CHECK(R.b4 == 6);
  CHECK(R.h3 == 12);
  CHECK(R.h3 == 14 - 2);
  CHECK(T->criterion_bapog());
  CHECK(T->criterion_ideal_bapog());
  auto T2 = build_ring(as3());
  CHECK_FALSE(T2->criterion_ideal_bapog());
  auto T3 = build_ring(prism(6));
  CHECK_FALSE(T3->criterion_bapog());
  CHECK_THROWS_AS(build_ring(prism(3))->criterion_bapog(), ValidationError);
}

TEST_CASE("section 8 divisor counts on As3") {
  SimplePolytope P = as3();
  auto T = build_ring(P);
  Mask qm = P.quad_mask();
  std::vector<int> gens;
  for (auto& [w, p] : T->block_keys())
    if (p == 0)
      for (int t = 0; t < T->block_dim(w, p); ++t) gens.push_back(T->id(w, p, t));
  for (Mask w : T->n2()) {
    auto v = mask_to_vec(w);
    int quads = (int)has_bit(qm, v[0]) + has_bit(qm, v[1]);
    auto dual = T->dual_basis(w, 0)[0];
    int cnt = 0;
    for (int g : gens)
      if (T->is_divisible_by(dual, T->basis_element(g))) ++cnt;
    if (quads == 2) CHECK(cnt == 4);
    if (quads == 1) CHECK(cnt == 8);
  }
}

TEST_CASE("dual bases pair to the fundamental class") {
  auto T = build_ring(as3());
  for (auto& [w, p] : T->block_keys()) {
    if (p == -1 || popcount(w) > 4) continue;
    auto duals = T->dual_basis(w, p);
    for (int i = 0; i < T->block_dim(w, p); ++i)
      for (int j = 0; j < (int)duals.size(); ++j) {
        Rat c = T->top_coefficient(T->multiply(T->basis_element(T->id(w, p, i)), duals[j]));
        CHECK(c == (i == j ? 1 : 0));
      }
  }
}

TEST_CASE("geometric vanishing condition for H0 x H0 products") {
  // when a product of two component classes is nonzero, some boundary cycle
  // of the union meets one of the intersection arcs in exactly one vertex
  SimplePolytope P = as3();
  auto T = build_ring(P);
  OmegaScratch scratch;
  for (auto& [w1, p1] : T->block_keys()) {
    if (p1 != 0) continue;
    for (auto& [w2, p2] : T->block_keys()) {
      if (p2 != 0 || (w1 & w2)) continue;
      for (int i = 0; i < T->block_dim(w1, 0); ++i)
        for (int j = 0; j < T->block_dim(w2, 0); ++j) {
          auto prod = T->multiply(T->basis_element(T->id(w1, 0, i)),
                                  T->basis_element(T->id(w2, 0, j)));
          if (prod.is_zero()) continue;
          const Block& B1 = T->block(w1, 0);
          const Block& B2 = T->block(w2, 0);
          Mask c1 = B1.comps[i], c2 = B2.comps[j];
          // vertices shared by the two components
          Mask uni = w1 | w2;
          // boundary cycles of P_{w1 | w2}: reuse edge classes via uf on
          // boundary edges; here we only need, per vertex of P, which
          // boundary cycle passes through (if any)
          // build boundary edge classes
          std::vector<int> uf(P.edges.size());
          for (size_t e = 0; e < uf.size(); ++e) uf[e] = (int)e;
          std::function<int(int)> find = [&](int a) {
            while (uf[a] != a) a = uf[a] = uf[uf[a]];
            return a;
          };
          auto bdry = [&](int e) {
            return has_bit(uni, P.edges[e].first) != has_bit(uni, P.edges[e].second);
          };
          for (auto& v : P.verts) {
            int in = (int)has_bit(uni, v[0]) + has_bit(uni, v[1]) + has_bit(uni, v[2]);
            if (in == 0 || in == 3) continue;
            std::vector<int> es;
            for (auto [x, y] :
                 {std::pair{v[0], v[1]}, std::pair{v[0], v[2]}, std::pair{v[1], v[2]}})
              if (has_bit(uni, x) != has_bit(uni, y)) es.push_back(P.edge_index(x, y));
            uf[find(es[0])] = find(es[1]);
          }
          // arcs of c1 & c2: vertices where a c1 face and a c2 face meet
          // count, per (arc component, boundary cycle), shared vertices;
          // approximate arcs by the set of such vertices (sufficient here:
          // the necessary condition only needs existence of a (cycle, arc)
          // pair meeting once, and arcs on As3 are short)
          std::map<int, int> cyc_hits;  // boundary class -> #vertices on c1&c2
          for (auto& v : P.verts) {
            bool h1 = false, h2 = false, out = false;
            for (int f : v) {
              if (has_bit(c1, f)) h1 = true;
              if (has_bit(c2, f)) h2 = true;
              if (!has_bit(uni, f)) out = true;
            }
            if (h1 && h2 && out) {
              // boundary vertex on the intersection: its boundary edges
              for (auto [x, y] :
                   {std::pair{v[0], v[1]}, std::pair{v[0], v[2]}, std::pair{v[1], v[2]}})
                if (has_bit(uni, x) != has_bit(uni, y)) {
                  cyc_hits[find(P.edge_index(x, y))]++;
                  break;
                }
            }
          }
          bool ok = false;
          for (auto& [c, n] : cyc_hits)
            if (n == 1) ok = true;
          CHECK(ok);
        }
    }
  }
  (void)scratch;
}

TEST_CASE("two rk B4 bounds rk H3/A3 with the membership-count equality") {
  // 2 rk B4 >= rk H3, equality exactly when every nonadjacent pair lies in
  // at most one 4-belt
  for (auto& P : enumerate_flag(9)) {
    auto T = build_ring(P);
    auto R = T->ranks();
    CHECK(2 * R.b4 >= R.h3);
    auto b4 = enumerate_belts(P, 4);
    bool at_most_one = true;
    for (Mask w : P.n2_pairs()) {
      int cnt = 0;
      for (auto& B : b4)
        if ((B.mask() & w) == w) ++cnt;
      if (cnt > 1) at_most_one = false;
    }
    CHECK((2 * R.b4 == R.h3) == at_most_one);
  }
}

TEST_CASE("mixed tables are rejected") {
  auto T1 = build_ring(as3());
  auto T2 = build_ring(prism(4));
  CHECK_THROWS_AS(T1->multiply(T1->unit(), T2->unit()), UsageError);
}

TEST_CASE("bound guard on ring construction") {
  CHECK_THROWS_AS(build_ring(c60()), BoundError);
}
