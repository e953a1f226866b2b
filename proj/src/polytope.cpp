#include "ztop/polytope.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

namespace ztop {

namespace {

std::array<int, 3> sorted3(int a, int b, int c) {
  std::array<int, 3> t{a, b, c};
  std::sort(t.begin(), t.end());
  return t;
}

}  // namespace

int SimplePolytope::edge_index(int i, int j) const {
  if (i > j) std::swap(i, j);
  auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(i, j));
  if (it == edges.end() || *it != std::make_pair(i, j)) return -1;
  return (int)(it - edges.begin());
}

int SimplePolytope::vertex_index(int a, int b, int c) const {
  auto t = sorted3(a, b, c);
  auto it = std::lower_bound(verts.begin(), verts.end(), t);
  if (it == verts.end() || *it != t) return -1;
  return (int)(it - verts.begin());
}

Mask SimplePolytope::quad_mask() const {
  Mask w = 0;
  for (int i = 0; i < m; ++i)
    if (face_size(i) == 4) w |= bit(i);
  return w;
}

std::vector<int> SimplePolytope::p_vector() const {
  int kmax = 0;
  for (int i = 0; i < m; ++i) kmax = std::max(kmax, face_size(i));
  std::vector<int> p(kmax + 1, 0);
  for (int i = 0; i < m; ++i) p[face_size(i)]++;
  return p;
}

std::array<long long, 3> SimplePolytope::f_vector() const {
  return {(long long)verts.size(), (long long)edges.size(), (long long)m};
}

std::vector<Mask> SimplePolytope::n2_pairs() const {
  std::vector<Mask> out;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (!adjacent(i, j)) out.push_back(bit(i) | bit(j));
  return out;
}

SimplePolytope from_face_cycles(const std::vector<std::vector<int>>& cycles_in) {
  SimplePolytope P;
  P.m = (int)cycles_in.size();
  if (P.m < 4)
    throw ValidationError("NonSpherical", "a simple 3-polytope has at least 4 faces");
  if (P.m > 64)
    throw ValidationError("BadIndex", "at most 64 faces supported");
  P.cycles = cycles_in;

  for (int i = 0; i < P.m; ++i) {
    auto& c = P.cycles[i];
    if ((int)c.size() < 3)
      throw ValidationError("MultiEdge", "face " + std::to_string(i) + " has fewer than 3 edges");
    std::vector<int> s = c;
    std::sort(s.begin(), s.end());
    for (size_t t = 0; t + 1 < s.size(); ++t)
      if (s[t] == s[t + 1])
        throw ValidationError("MultiEdge",
                              "face " + std::to_string(i) + " lists neighbour " +
                                  std::to_string(s[t]) + " twice");
    for (int j : c) {
      if (j < 0 || j >= P.m)
        throw ValidationError("BadIndex", "face index out of range: " + std::to_string(j));
      if (j == i)
        throw ValidationError("MultiEdge", "face " + std::to_string(i) + " lists itself");
    }
  }

  // Adjacency symmetry.
  std::vector<Mask> adj(P.m, 0);
  for (int i = 0; i < P.m; ++i)
    for (int j : P.cycles[i]) adj[i] |= bit(j);
  for (int i = 0; i < P.m; ++i)
    for (int j : P.cycles[i])
      if (!has_bit(adj[j], i))
        throw ValidationError("Asymmetric", "face " + std::to_string(i) + " lists " +
                                                std::to_string(j) + " but not conversely");
  P.adj = adj;

  // Make the per-face orientations globally consistent.  For the edge {i,j},
  // face i sees corner faces (prev, next) around j; consistency of an
  // oriented sphere embedding requires face j to see them reversed.  BFS over
  // faces, flipping cycles as needed.
  auto corners = [&](int i, int j) -> std::pair<int, int> {
    const auto& c = P.cycles[i];
    int k = (int)c.size();
    for (int t = 0; t < k; ++t)
      if (c[t] == j) return {c[(t + k - 1) % k], c[(t + 1) % k]};
    return {-1, -1};
  };
  {
    std::vector<int> state(P.m, 0);  // 0 unseen, 1 kept, 2 flipped
    std::queue<int> q;
    state[0] = 1;
    q.push(0);
    int seen = 1;
    while (!q.empty()) {
      int i = q.front();
      q.pop();
      for (int j : P.cycles[i]) {
        auto [pi, ni] = corners(i, j);
        auto [pj, nj] = corners(j, i);
        bool straight = (pi == nj && ni == pj);
        bool flipped = (pi == pj && ni == nj);
        if (!straight && !flipped)
          throw ValidationError("NonCubic", "edge {" + std::to_string(i) + "," +
                                                std::to_string(j) +
                                                "} has inconsistent corner faces");
        if (state[j] == 0) {
          if (flipped) std::reverse(P.cycles[j].begin(), P.cycles[j].end());
          state[j] = 1;
          ++seen;
          q.push(j);
        } else if (flipped) {
          throw ValidationError("NonSpherical", "face rotations admit no consistent orientation");
        }
      }
    }
    if (seen != P.m)
      throw ValidationError("NonSpherical", "face adjacency graph is disconnected");
  }

  // Derive edges.
  for (int i = 0; i < P.m; ++i)
    for (int j : P.cycles[i])
      if (i < j) P.edges.emplace_back(i, j);
  std::sort(P.edges.begin(), P.edges.end());

  // Derive vertices as corner triples; each must be produced exactly once by
  // each of its three faces (3-valence).
  std::map<std::array<int, 3>, int> vc;
  for (int i = 0; i < P.m; ++i) {
    const auto& c = P.cycles[i];
    int k = (int)c.size();
    for (int t = 0; t < k; ++t) vc[sorted3(i, c[t], c[(t + 1) % k])]++;
  }
  for (auto& [t, cnt] : vc) {
    if (cnt != 3)
      throw ValidationError("NonCubic", "corner {" + std::to_string(t[0]) + "," +
                                            std::to_string(t[1]) + "," + std::to_string(t[2]) +
                                            "} is shared by " + std::to_string(cnt) +
                                            " face corners, not 3");
    P.verts.push_back(t);
  }

  long long f0 = (long long)P.verts.size();
  long long f1 = (long long)P.edges.size();
  long long f2 = P.m;
  if (f0 - f1 + f2 != 2 || f1 != 3LL * (P.m - 2) || f0 != 2LL * (P.m - 2))
    throw ValidationError("NonSpherical", "Euler relation fails: f=(" + std::to_string(f0) + "," +
                                              std::to_string(f1) + "," + std::to_string(f2) + ")");

  // Deterministic internal form: rotate each cycle to start at its smallest
  // neighbour.
  for (auto& c : P.cycles) {
    auto it = std::min_element(c.begin(), c.end());
    std::rotate(c.begin(), it, c.end());
  }
  return P;
}

namespace {

// One BFS labeling pass; returns the code for this seed, or nothing as soon
// as it is certainly worse than `best`.  All codes of one polytope have equal
// length, so byte-wise comparison suffices.
std::optional<std::vector<unsigned char>> bfs_code(const SimplePolytope& P, int root, int first,
                                                   bool mirrored,
                                                   const std::vector<unsigned char>* best) {
  const int m = P.m;
  std::vector<int> label(m, -1), order;
  std::vector<int> anchor(m, -1);
  label[root] = 0;
  anchor[root] = first;
  order.push_back(root);
  std::vector<unsigned char> code;
  code.reserve(6 * m);
  bool strictly_less = (best == nullptr);
  auto emit = [&](unsigned char b) -> bool {
    if (!strictly_less) {
      unsigned char ref = (*best)[code.size()];
      if (b > ref) return false;  // worse than best: prune
      if (b < ref) strictly_less = true;
    }
    code.push_back(b);
    return true;
  };
  for (size_t qi = 0; qi < order.size(); ++qi) {
    int f = order[qi];
    std::vector<int> cyc = P.cycles[f];
    if (mirrored) std::reverse(cyc.begin(), cyc.end());
    int k = (int)cyc.size();
    int start = -1;
    for (int t = 0; t < k; ++t)
      if (cyc[t] == anchor[f]) start = t;
    if (!emit((unsigned char)k)) return std::nullopt;
    for (int t = 0; t < k; ++t) {
      int nb = cyc[(start + t) % k];
      if (label[nb] < 0) {
        label[nb] = (int)order.size();
        anchor[nb] = f;
        order.push_back(nb);
      }
      if (!emit((unsigned char)label[nb])) return std::nullopt;
    }
  }
  return code;
}

}  // namespace

std::vector<unsigned char> canonical_code(const SimplePolytope& P) {
  std::vector<unsigned char> best;
  bool have = false;
  for (int mir = 0; mir < 2; ++mir)
    for (auto [i, j] : P.edges)
      for (int dir = 0; dir < 2; ++dir) {
        int a = dir ? j : i, b = dir ? i : j;
        auto c = bfs_code(P, a, b, mir != 0, have ? &best : nullptr);
        if (c && (!have || *c < best)) {
          best = std::move(*c);
          have = true;
        }
      }
  return best;
}

std::string canonical_code_hex(const SimplePolytope& P) {
  auto c = canonical_code(P);
  static const char* hexd = "0123456789abcdef";
  std::string s;
  s.reserve(2 * c.size());
  for (unsigned char b : c) {
    s.push_back(hexd[b >> 4]);
    s.push_back(hexd[b & 15]);
  }
  return s;
}

bool is_isomorphic(const SimplePolytope& P, const SimplePolytope& Q) {
  if (P.m != Q.m) return false;
  return canonical_code(P) == canonical_code(Q);
}

SimplePolytope relabel(const SimplePolytope& P, const std::vector<int>& perm, bool mirror) {
  std::vector<std::vector<int>> cyc(P.m);
  for (int i = 0; i < P.m; ++i) {
    std::vector<int> c;
    for (int j : P.cycles[i]) c.push_back(perm[j]);
    if (mirror) std::reverse(c.begin(), c.end());
    cyc[perm[i]] = std::move(c);
  }
  return from_face_cycles(cyc);
}

int DualComplex::edge_index(int a, int b) const {
  if (a > b) std::swap(a, b);
  auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(a, b));
  if (it == edges.end() || *it != std::make_pair(a, b)) return -1;
  return (int)(it - edges.begin());
}

int DualComplex::tri_index(int a, int b, int c) const {
  auto t = sorted3(a, b, c);
  auto it = std::lower_bound(tris.begin(), tris.end(), t);
  if (it == tris.end() || *it != t) return -1;
  return (int)(it - tris.begin());
}

DualComplex dual_complex(const SimplePolytope& P) {
  DualComplex K;
  K.n = P.m;
  K.edges = P.edges;
  K.tris = P.verts;
  K.adj = P.adj;

  // Each edge must lie in exactly two triangles; build edge->tris incidence.
  std::vector<std::array<int, 2>> et(K.edges.size(), {-1, -1});
  for (int t = 0; t < (int)K.tris.size(); ++t) {
    auto [a, b, c] = K.tris[t];
    for (auto [x, y] : {std::pair{a, b}, std::pair{a, c}, std::pair{b, c}}) {
      int e = K.edge_index(x, y);
      if (e < 0) throw ValidationError("NonCubic", "triangle edge missing from edge set");
      if (et[e][0] < 0)
        et[e][0] = t;
      else if (et[e][1] < 0)
        et[e][1] = t;
      else
        throw ValidationError("NonSpherical", "dual edge lies in more than two triangles");
    }
  }
  for (auto& p : et)
    if (p[1] < 0) throw ValidationError("NonSpherical", "dual edge lies in fewer than two triangles");

  // Coherent orientation by BFS across shared edges: the two triangles on an
  // edge must induce opposite directions on it.
  auto dir_sign = [&](const std::array<int, 3>& t, int x, int y) {
    // sign of (x,y) as it appears in the cyclic order (t0,t1,t2)
    for (int r = 0; r < 3; ++r) {
      if (t[r] == x && t[(r + 1) % 3] == y) return +1;
      if (t[r] == y && t[(r + 1) % 3] == x) return -1;
    }
    return 0;
  };
  K.or_sign.assign(K.tris.size(), 0);
  std::queue<int> q;
  K.or_sign[0] = 1;
  q.push(0);
  int seen = 1;
  while (!q.empty()) {
    int t = q.front();
    q.pop();
    auto [a, b, c] = K.tris[t];
    for (auto [x, y] : {std::pair{a, b}, std::pair{a, c}, std::pair{b, c}}) {
      int e = K.edge_index(x, y);
      int u = et[e][0] == t ? et[e][1] : et[e][0];
      // induced direction of (x,y) in t with K.or_sign[t], must be opposite in u
      int want = -dir_sign(K.tris[t], x, y) * K.or_sign[t];
      int have = dir_sign(K.tris[u], x, y);
      int s = want * have;  // or_sign[u] required
      if (K.or_sign[u] == 0) {
        K.or_sign[u] = s;
        ++seen;
        q.push(u);
      } else if (K.or_sign[u] != s) {
        throw ValidationError("NonSpherical", "dual complex is not orientable");
      }
    }
  }
  if (seen != (int)K.tris.size())
    throw ValidationError("NonSpherical", "dual complex is disconnected");

  // Vertex links must be single cycles; this is the face-cycle structure of P,
  // re-checked here on the dual side.
  for (int v = 0; v < K.n; ++v) {
    int deg = (int)P.cycles[v].size();
    int count = 0;
    for (auto& t : K.tris)
      if (t[0] == v || t[1] == v || t[2] == v) ++count;
    if (count != deg)
      throw ValidationError("NonSpherical", "dual vertex link is not a single cycle");
  }
  return K;
}

}  // namespace ztop
