#include "ztop/catalog.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "ztop/belts.hpp"

namespace ztop {

SimplePolytope simplex3() {
  return from_face_cycles({{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}});
}

SimplePolytope prism(int k) {
  if (k < 3) throw UsageError("UnknownName", "prism needs k >= 3");
  std::vector<std::vector<int>> cyc(k + 2);
  auto S = [&](int i) { return 2 + (i % k + k) % k; };
  for (int i = 0; i < k; ++i) {
    cyc[0].push_back(S(i));
    cyc[1].push_back(S(i));
    cyc[S(i)] = {0, S(i + 1), 1, S(i - 1)};
  }
  return from_face_cycles(cyc);
}

SimplePolytope barrel(int k) {
  if (k < 5) throw UsageError("UnknownName", "barrel needs k >= 5");
  std::vector<std::vector<int>> cyc(2 * k + 2);
  auto P = [&](int i) { return 2 + (i % k + k) % k; };
  auto Q = [&](int i) { return 2 + k + (i % k + k) % k; };
  for (int i = 0; i < k; ++i) {
    cyc[0].push_back(P(i));
    cyc[1].push_back(Q(i));
    cyc[P(i)] = {0, P(i + 1), Q(i + 1), Q(i), P(i - 1)};
    cyc[Q(i)] = {1, Q(i + 1), P(i), P(i - 1), Q(i - 1)};
  }
  return from_face_cycles(cyc);
}

SimplePolytope as3() {
  // faces of the cube: 0 top, 1 bottom, 2..5 sides in cyclic order
  SimplePolytope c = prism(4);
  c = cut(c, {CutSpec::Kind::Edge, 0, 2});
  c = cut(c, {CutSpec::Kind::Edge, 1, 3});
  c = cut(c, {CutSpec::Kind::Edge, 4, 5});
  return c;
}

SimplePolytope p8() {
  SimplePolytope c = prism(4);
  c = cut(c, {CutSpec::Kind::Edge, 0, 2});
  c = cut(c, {CutSpec::Kind::Edge, 3, 4});
  return c;
}

SimplePolytope ideal_from_antiprism(int k) { return truncate_all_vertices(antiprism_map(k)); }

SimplePolytope pe3() { return ideal_from_antiprism(3); }

SimplePolytope c60() { return truncate_all_vertices(face_map(barrel(5))); }

namespace {

int parse_k(const std::string& name, size_t colon) {
  try {
    size_t pos = 0;
    std::string tail = name.substr(colon + 1);
    int k = std::stoi(tail, &pos);
    if (pos != tail.size()) throw std::invalid_argument("trailing");
    return k;
  } catch (const std::exception&) {
    throw UsageError("UnknownName", "bad parameter in catalog name '" + name + "'");
  }
}

}  // namespace

SimplePolytope named(const std::string& name) {
  if (name == "simplex") return simplex3();
  if (name == "cube") return prism(4);
  if (name == "as3") return as3();
  if (name == "pe3") return pe3();
  if (name == "p8") return p8();
  if (name == "c60") return c60();
  if (name == "dodecahedron") return barrel(5);
  if (name == "m3xi") return prism(3);
  if (name == "m5xi") return prism(5);
  if (name == "m6xi") return prism(6);
  auto colon = name.find(':');
  if (colon != std::string::npos) {
    std::string head = name.substr(0, colon);
    int k = parse_k(name, colon);
    if (head == "prism") return prism(k);
    if (head == "barrel") return barrel(k);
    if (head == "antiprism") return ideal_from_antiprism(k);
  }
  throw UsageError("UnknownName", "no catalog polytope named '" + name + "'");
}

std::vector<std::string> catalog_names() {
  return {"simplex", "cube",  "prism:k", "barrel:k", "antiprism:k",
          "as3",     "pe3",   "p8",      "c60",      "dodecahedron",
          "m3xi",    "m5xi",  "m6xi"};
}

namespace {

std::vector<int> insert_between(const std::vector<int>& c, int u, int v, int x) {
  int k = (int)c.size();
  for (int t = 0; t < k; ++t) {
    int a = c[t], b = c[(t + 1) % k];
    if ((a == u && b == v) || (a == v && b == u)) {
      std::vector<int> out;
      for (int s = 0; s <= t; ++s) out.push_back(c[s]);
      out.push_back(x);
      for (int s = t + 1; s < k; ++s) out.push_back(c[s]);
      return out;
    }
  }
  throw ValidationError("InvalidTarget", "faces are not consecutive in the host cycle");
}

std::vector<int> replace_in(const std::vector<int>& c, int from, int to) {
  std::vector<int> out = c;
  for (auto& v : out)
    if (v == from) v = to;
  return out;
}

}  // namespace

SimplePolytope cut(const SimplePolytope& P, const CutSpec& spec) {
  auto cyc = P.cycles;
  int Qf = P.m;
  if (spec.kind == CutSpec::Kind::Edge) {
    int i = spec.i, j = spec.j;
    if (i < 0 || j < 0 || i >= P.m || j >= P.m || !P.adjacent(i, j))
      throw ValidationError("InvalidTarget", "no such edge");
    // corner faces at the two endpoints of the edge
    const auto& ci = P.cycles[i];
    int k = (int)ci.size(), a = -1, b = -1;
    for (int t = 0; t < k; ++t)
      if (ci[t] == j) {
        a = ci[(t + k - 1) % k];
        b = ci[(t + 1) % k];
      }
    cyc[i] = replace_in(cyc[i], j, Qf);
    cyc[j] = replace_in(cyc[j], i, Qf);
    cyc[a] = insert_between(cyc[a], i, j, Qf);
    cyc[b] = insert_between(cyc[b], i, j, Qf);
    cyc.push_back({i, a, j, b});
  } else {
    int g = spec.g, i = spec.i, j = spec.j;
    if (g < 0 || g >= P.m || !P.adjacent(g, i) || !P.adjacent(g, j))
      throw ValidationError("InvalidTarget", "host face is not adjacent to both edges");
    const auto& cg = P.cycles[g];
    int k = (int)cg.size(), t0 = -1;
    bool fwd = true;
    for (int t = 0; t < k; ++t) {
      if (cg[t] == i && cg[(t + 1) % k] == j) { t0 = t; fwd = true; }
      if (cg[t] == j && cg[(t + 1) % k] == i) { t0 = t; fwd = false; }
    }
    if (t0 < 0) throw ValidationError("InvalidTarget", "edges are not adjacent in the host face");
    if (spec.enforce_constraints && k < 6)
      throw ValidationError("ConstraintViolated",
                            "two-edge cut needs an at least hexagonal host face");
    int fi = fwd ? i : j, fj = fwd ? j : i;
    int a = cg[(t0 + k - 1) % k], b = cg[(t0 + 2) % k];
    // host loses the two neighbours fi, fj and gains Qf
    std::vector<int> ng;
    for (int t = 0; t < k; ++t) {
      int v = cg[(t0 + t) % k];
      if (t == 0) {
        ng.push_back(Qf);
        continue;
      }
      if (t == 1) continue;
      ng.push_back(v);
    }
    cyc[g] = ng;
    cyc[fi] = replace_in(cyc[fi], g, Qf);
    cyc[fj] = replace_in(cyc[fj], g, Qf);
    cyc[a] = insert_between(cyc[a], g, fi, Qf);
    cyc[b] = insert_between(cyc[b], fj, g, Qf);
    cyc.push_back({a, fi, fj, b, g});
  }
  return from_face_cycles(cyc);
}

namespace {

using Code = std::vector<unsigned char>;

struct Pool {
  std::map<Code, SimplePolytope> seen;
  std::vector<SimplePolytope> frontier;
  bool add(const SimplePolytope& P) {
    Code c = canonical_code(P);
    if (seen.count(c)) return false;
    seen.emplace(std::move(c), P);
    frontier.push_back(P);
    return true;
  }
  std::vector<SimplePolytope> sorted() const {
    std::vector<std::pair<std::pair<int, Code>, SimplePolytope>> v;
    for (auto& [c, P] : seen) v.push_back({{P.m, c}, P});
    std::sort(v.begin(), v.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    std::vector<SimplePolytope> out;
    for (auto& [k, P] : v) out.push_back(P);
    return out;
  }
};

template <class Keep>
std::vector<SimplePolytope> closure(std::vector<SimplePolytope> roots, int m_max, bool quad_free,
                                    Keep&& keep) {
  Pool pool;
  for (auto& R : roots)
    if (R.m <= m_max) pool.add(R);
  for (size_t qi = 0; qi < pool.frontier.size(); ++qi) {
    SimplePolytope P = pool.frontier[qi];
    if (P.m + 1 > m_max) continue;
    Mask qm = P.quad_mask();
    for (auto [i, j] : P.edges) {
      if (quad_free && (has_bit(qm, i) || has_bit(qm, j))) continue;
      SimplePolytope C = cut(P, {CutSpec::Kind::Edge, i, j});
      if (keep(C)) pool.add(C);
    }
    for (int g = 0; g < P.m; ++g) {
      if (P.face_size(g) < 6) continue;
      const auto& cg = P.cycles[g];
      int k = (int)cg.size();
      for (int t = 0; t < k; ++t) {
        CutSpec spec;
        spec.kind = CutSpec::Kind::TwoAdjacentEdges;
        spec.g = g;
        spec.i = cg[t];
        spec.j = cg[(t + 1) % k];
        SimplePolytope C = cut(P, spec);
        if (keep(C)) pool.add(C);
      }
    }
  }
  return pool.sorted();
}

}  // namespace

std::vector<SimplePolytope> enumerate_flag(int m_max, int guard) {
  if (m_max > guard)
    throw BoundError("BoundTooLarge", "flag enumeration capped at m <= " + std::to_string(guard));
  if (m_max < 6) return {};
  return closure({prism(4)}, m_max, false, [](const SimplePolytope& C) { return is_flag(C); });
}

std::vector<SimplePolytope> enumerate_almost_pogorelov(int m_max, int guard) {
  if (m_max > guard)
    throw BoundError("BoundTooLarge",
                     "almost Pogorelov enumeration capped at m <= " + std::to_string(guard));
  std::vector<SimplePolytope> roots;
  if (m_max >= 9) roots.push_back(as3());
  auto out = closure(std::move(roots), m_max, true,
                     [](const SimplePolytope& C) { return classify_family(C).in_apog(); });
  // the two exceptional members are not reachable from As^3
  std::vector<SimplePolytope> res;
  if (m_max >= 6) res.push_back(prism(4));
  if (m_max >= 7) res.push_back(prism(5));
  res.insert(res.end(), out.begin(), out.end());
  return res;
}

std::vector<SimplePolytope> enumerate_ideal_almost_pogorelov(int m_max, int guard) {
  if (m_max > guard)
    throw BoundError("BoundTooLarge",
                     "ideal enumeration capped at m <= " + std::to_string(guard));
  Pool pool;
  // antiprisms: m = 4k + 2
  for (int k = 3; 4 * k + 2 <= m_max; ++k) pool.add(ideal_from_antiprism(k));
  // twist closure from the 4-antiprism; a twist adds one graph vertex and the
  // cut polytope has m = 2(V + 1)
  if (2 * (8 + 1) <= m_max) {
    std::vector<QuadGraph> frontier{as_quad_graph(antiprism_map(4))};
    std::set<Code> gseen{canonical_code(cut_4_valent_vertices(frontier[0]))};
    for (size_t qi = 0; qi < frontier.size(); ++qi) {
      QuadGraph G = frontier[qi];
      if (2 * (G.map.n + 2) > m_max) continue;
      for (auto& spec : restricted_twists(G)) {
        QuadGraph H = edge_twist(G, spec);
        SimplePolytope C = cut_4_valent_vertices(H);
        Code code = canonical_code(C);
        if (gseen.insert(code).second) {
          frontier.push_back(H);
          pool.add(C);
        }
      }
    }
  }
  auto out = pool.sorted();
  for (auto& P : out) {
    auto rep = classify_family(P);
    if (!rep.is_ideal() || P.m != 2 * (P.p4() + 1))
      throw Error("InternalCheck", "enumerated member fails the ideal test");
  }
  return out;
}

}  // namespace ztop
