#include "ztop/planar_map.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ztop {

std::vector<std::pair<int, int>> PlanarMap::edge_list() const {
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < n; ++v)
    for (int w : rot[v])
      if (v < w) e.emplace_back(v, w);
  std::sort(e.begin(), e.end());
  return e;
}

std::vector<std::vector<int>> PlanarMap::faces() const {
  // dart (u,v) -> next dart (v, successor of u in rot[v])
  std::map<std::pair<int, int>, bool> used;
  for (int v = 0; v < n; ++v)
    for (int w : rot[v]) used[{v, w}] = false;
  auto succ = [&](int v, int u) {
    const auto& r = rot[v];
    for (size_t t = 0; t < r.size(); ++t)
      if (r[t] == u) return r[(t + 1) % r.size()];
    throw ValidationError("Asymmetric", "dart successor missing");
  };
  std::vector<std::vector<int>> fs;
  for (auto& [d, u0] : used) {
    if (u0) continue;
    std::vector<int> walk;
    auto d0 = d;
    auto cur = d;
    do {
      used[cur] = true;
      walk.push_back(cur.first);
      cur = {cur.second, succ(cur.second, cur.first)};
    } while (cur != d0);
    fs.push_back(std::move(walk));
  }
  return fs;
}

long long PlanarMap::euler() const {
  long long E = 0;
  for (int v = 0; v < n; ++v) E += degree(v);
  E /= 2;
  return (long long)n - E + (long long)faces().size();
}

void validate_map(const PlanarMap& M) {
  if (M.n < 2 || (int)M.rot.size() != M.n)
    throw ValidationError("BadIndex", "map vertex count mismatch");
  for (int v = 0; v < M.n; ++v) {
    std::set<int> s;
    for (int w : M.rot[v]) {
      if (w < 0 || w >= M.n) throw ValidationError("BadIndex", "neighbour out of range");
      if (w == v) throw ValidationError("MultiEdge", "loop edge");
      if (!s.insert(w).second) throw ValidationError("MultiEdge", "parallel edge");
    }
  }
  for (int v = 0; v < M.n; ++v)
    for (int w : M.rot[v])
      if (std::find(M.rot[w].begin(), M.rot[w].end(), v) == M.rot[w].end())
        throw ValidationError("Asymmetric", "edge listed on one side only");
  if (M.euler() != 2) throw ValidationError("NonSpherical", "map is not a sphere");
}

QuadGraph as_quad_graph(PlanarMap M) {
  validate_map(M);
  for (int v = 0; v < M.n; ++v)
    if (M.degree(v) != 4)
      throw ValidationError("NonCubic", "vertex " + std::to_string(v) + " has degree " +
                                            std::to_string(M.degree(v)) + ", want 4");
  return QuadGraph{std::move(M)};
}

PlanarMap primal_map(const SimplePolytope& P) {
  // Vertex v = corner {a,b,c}; its three neighbours are the corners across
  // the three edges at v, in the rotation induced by the face cycles.
  PlanarMap M;
  M.n = (int)P.verts.size();
  M.rot.assign(M.n, {});
  // other endpoint of edge {x,y} next to vertex {x,y,z}
  auto other_end = [&](int x, int y, int z) {
    // walk the cycle of face x: find y, its neighbours in the cycle are z and
    // the corner face w on the far side of edge {x,y}
    const auto& c = P.cycles[x];
    int k = (int)c.size();
    for (int t = 0; t < k; ++t)
      if (c[t] == y) {
        int p = c[(t + k - 1) % k], q = c[(t + 1) % k];
        int w = (p == z) ? q : p;
        return P.vertex_index(x, y, w);
      }
    return -1;
  };
  for (int v = 0; v < M.n; ++v) {
    auto [a, b, c] = P.verts[v];
    // order the three faces around v consistently: in face a's cycle the two
    // others appear consecutively; take (a,b,c) with c following b in a.
    int x = a, y = b, z = c;
    {
      const auto& cyc = P.cycles[a];
      int k = (int)cyc.size();
      for (int t = 0; t < k; ++t)
        if (cyc[t] == b && cyc[(t + 1) % k] == c) { y = b; z = c; }
        else if (cyc[t] == c && cyc[(t + 1) % k] == b) { y = c; z = b; }
    }
    // edges at v lie between consecutive face pairs: (x,y),(y,z),(z,x)
    M.rot[v] = {other_end(x, y, z), other_end(y, z, x), other_end(z, x, y)};
  }
  validate_map(M);
  return M;
}

PlanarMap face_map(const SimplePolytope& P) {
  PlanarMap M;
  M.n = P.m;
  M.rot = P.cycles;
  validate_map(M);
  return M;
}

namespace {

int pos_of(const std::vector<int>& r, int x) {
  for (size_t t = 0; t < r.size(); ++t)
    if (r[t] == x) return (int)t;
  return -1;
}

}  // namespace

QuadGraph medial(const PlanarMap& M) {
  validate_map(M);
  auto edges = M.edge_list();
  auto eid = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(a, b));
    return (int)(it - edges.begin());
  };
  auto succ = [&](int v, int u) {
    const auto& r = M.rot[v];
    int t = pos_of(r, u);
    return r[(t + 1) % r.size()];
  };
  auto pred = [&](int v, int u) {
    const auto& r = M.rot[v];
    int t = pos_of(r, u);
    return r[(t + (int)r.size() - 1) % r.size()];
  };
  PlanarMap R;
  R.n = (int)edges.size();
  R.rot.assign(R.n, {});
  for (int e = 0; e < R.n; ++e) {
    auto [u, v] = edges[e];
    R.rot[e] = {eid(v, succ(v, u)), eid(pred(u, v), u), eid(u, succ(u, v)), eid(pred(v, u), v)};
  }
  return as_quad_graph(std::move(R));
}

QuadGraph medial(const SimplePolytope& P) { return medial(primal_map(P)); }

SimplePolytope truncate_all_vertices(const PlanarMap& M) {
  validate_map(M);
  auto fs = M.faces();
  int F = (int)fs.size();
  // face ids: 0..F-1 original faces, F..F+n-1 vertex polygons
  // dart -> face id
  std::map<std::pair<int, int>, int> face_of;
  for (int f = 0; f < F; ++f) {
    const auto& w = fs[f];
    int s = (int)w.size();
    for (int t = 0; t < s; ++t) face_of[{w[t], w[(t + 1) % s]}] = f;
  }
  std::vector<std::vector<int>> cyc(F + M.n);
  for (int f = 0; f < F; ++f) {
    const auto& w = fs[f];
    int s = (int)w.size();
    std::vector<int> c;
    c.reserve(2 * s);
    for (int t = 0; t < s; ++t) {
      int u = w[t], v = w[(t + 1) % s];
      c.push_back(F + u);               // corner polygon at u
      c.push_back(face_of[{v, u}]);     // face across edge {u,v}
    }
    cyc[f] = std::move(c);
  }
  for (int v = 0; v < M.n; ++v) {
    std::vector<int> c;
    for (int w : M.rot[v]) c.push_back(face_of[{v, w}]);
    cyc[F + v] = std::move(c);
  }
  return from_face_cycles(cyc);
}

SimplePolytope cut_4_valent_vertices(const QuadGraph& G) {
  try {
    return truncate_all_vertices(G.map);
  } catch (const ValidationError& e) {
    throw ValidationError("DegenerateResult",
                          std::string("cut graph fails polytope validation (") + e.what() + ")");
  }
}

QuadGraph edge_twist(const QuadGraph& G, const EdgeTwistSpec& spec) {
  const PlanarMap& M = G.map;
  auto fs = M.faces();
  auto on_face = [&](const std::vector<int>& w, std::pair<int, int> e) {
    int s = (int)w.size();
    for (int t = 0; t < s; ++t) {
      int u = w[t], v = w[(t + 1) % s];
      if ((u == e.first && v == e.second) || (u == e.second && v == e.first)) return t;
    }
    return -1;
  };
  int face = -1, t1 = -1, t2 = -1;
  for (int f = 0; f < (int)fs.size(); ++f) {
    int a = on_face(fs[f], spec.e1), b = on_face(fs[f], spec.e2);
    if (a >= 0 && b >= 0) {
      face = f;
      t1 = a;
      t2 = b;
      break;
    }
  }
  if (face < 0) throw ValidationError("NotSameFace", "edges do not lie on a common face");
  const auto& w = fs[face];
  int s = (int)w.size();
  int a = w[t1], b = w[(t1 + 1) % s];
  int c = w[t2], d = w[(t2 + 1) % s];
  if (a == c || a == d || b == c || b == d)
    throw ValidationError("NotDisjoint", "edges share a vertex");
  if (spec.restricted) {
    int gap1 = (t2 - t1 + s) % s, gap2 = (t1 - t2 + s) % s;
    if (gap1 != 2 && gap2 != 2)
      throw ValidationError("NotRestricted",
                            "edges are not both adjacent to a common edge of the face");
  }
  // delete (a,b) and (c,d), reroute a-x-c and b-x-d crossing at new vertex x
  PlanarMap R = M;
  int x = R.n++;
  auto repl = [&](int v, int from, int to) { R.rot[v][pos_of(R.rot[v], from)] = to; };
  repl(a, b, x);
  repl(b, a, x);
  repl(c, d, x);
  repl(d, c, x);
  for (std::vector<int> rx : {std::vector<int>{a, b, c, d}, std::vector<int>{a, d, c, b}}) {
    R.rot.push_back(rx);
    try {
      return as_quad_graph(R);
    } catch (const ValidationError&) {
      R.rot.pop_back();
    }
  }
  throw ValidationError("DegenerateResult", "twist does not embed in the sphere");
}

std::vector<EdgeTwistSpec> restricted_twists(const QuadGraph& G) {
  std::vector<EdgeTwistSpec> out;
  std::set<std::pair<std::pair<int, int>, std::pair<int, int>>> seen;
  for (auto& w : G.map.faces()) {
    int s = (int)w.size();
    if (s < 4) continue;
    for (int t = 0; t < s; ++t) {
      int r = (t + 2) % s;
      std::pair<int, int> e1{w[t], w[(t + 1) % s]}, e2{w[r], w[(r + 1) % s]};
      if (e1.first > e1.second) std::swap(e1.first, e1.second);
      if (e2.first > e2.second) std::swap(e2.first, e2.second);
      if (e1.first == e2.first || e1.first == e2.second || e1.second == e2.first ||
          e1.second == e2.second)
        continue;
      auto key = e1 < e2 ? std::make_pair(e1, e2) : std::make_pair(e2, e1);
      if (seen.insert(key).second) out.push_back({key.first, key.second, true});
    }
  }
  return out;
}

PlanarMap antiprism_map(int k) {
  if (k < 3) throw UsageError("UnknownName", "antiprism needs k >= 3");
  PlanarMap M;
  M.n = 2 * k;
  M.rot.assign(M.n, {});
  auto T = [&](int i) { return (i % k + k) % k; };
  auto B = [&](int i) { return k + (i % k + k) % k; };
  for (int i = 0; i < k; ++i) {
    // top vertex t_i: neighbours t_{i-1}, t_{i+1} and b_i, b_{i+1}
    M.rot[T(i)] = {T(i - 1), B(i), B(i + 1), T(i + 1)};
    // bottom vertex b_i: neighbours b_{i-1}, b_{i+1} and t_{i-1}, t_i
    M.rot[B(i)] = {B(i + 1), T(i), T(i - 1), B(i - 1)};
  }
  validate_map(M);
  return M;
}

PlanarMap pyramid_map(int k) {
  if (k < 3) throw UsageError("UnknownName", "pyramid needs k >= 3");
  PlanarMap M;
  M.n = k + 1;  // apex = k
  M.rot.assign(M.n, {});
  for (int i = 0; i < k; ++i) M.rot[k].push_back(i);
  for (int i = 0; i < k; ++i) M.rot[i] = {(i + 1) % k, k, (i + k - 1) % k};
  validate_map(M);
  return M;
}

}  // namespace ztop
