#include "ztop/subset_betti.hpp"

#include <algorithm>
#include <numeric>

#include "ztop/linalg.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ztop {

namespace {

int uf_find(std::vector<int>& p, int x) {
  while (p[x] != x) {
    p[x] = p[p[x]];
    x = p[x];
  }
  return x;
}

inline void uf_union(std::vector<int>& p, int a, int b) {
  a = uf_find(p, a);
  b = uf_find(p, b);
  if (a != b) p[a < b ? b : a] = std::min(a, b);
}

}  // namespace

OmegaBetti omega_betti(const SimplePolytope& P, Mask omega, OmegaScratch& s) {
  OmegaBetti R;
  R.omega = omega;
  Mask full = full_mask(P.m);
  if (omega == 0) {
    R.b_neg1 = 1;
    return R;
  }
  if (omega == full) {
    R.b2 = 1;
    R.components = 1;
    R.boundary_cycles_per_component = {0};
    return R;
  }

  // components of omega under edge adjacency
  s.uf_face.resize(P.m);
  for_bits(omega, [&](int f) { s.uf_face[f] = f; });
  for_bits(omega, [&](int f) {
    for_bits(P.adj[f] & omega, [&](int g) {
      if (g > f) uf_union(s.uf_face, f, g);
    });
  });
  s.comp_id.assign(P.m, -1);
  int ncomp = 0;
  for_bits(omega, [&](int f) {
    if (uf_find(s.uf_face, f) == f) s.comp_id[f] = ncomp++;
  });
  R.components = ncomp;
  R.b0 = ncomp - 1;

  // boundary edges = edges between omega and its complement; boundary cycles
  // link up at vertices carrying 1 or 2 omega-faces.
  const auto& E = P.edges;
  s.uf_edge.resize(E.size());
  auto is_boundary = [&](int e) {
    return has_bit(omega, E[e].first) != has_bit(omega, E[e].second);
  };
  for (int e = 0; e < (int)E.size(); ++e) s.uf_edge[e] = e;
  for (const auto& v : P.verts) {
    int in = (int)has_bit(omega, v[0]) + has_bit(omega, v[1]) + has_bit(omega, v[2]);
    if (in == 0 || in == 3) continue;
    // exactly two boundary edges meet at this vertex
    int found[2], nf = 0;
    for (auto [x, y] : {std::pair{v[0], v[1]}, std::pair{v[0], v[2]}, std::pair{v[1], v[2]}}) {
      if (has_bit(omega, x) != has_bit(omega, y)) found[nf++] = P.edge_index(x, y);
    }
    uf_union(s.uf_edge, found[0], found[1]);
  }
  // count cycles per face-component
  R.boundary_cycles_per_component.assign(ncomp, 0);
  s.cyc_seen.assign(E.size(), 0);
  for (int e = 0; e < (int)E.size(); ++e) {
    if (!is_boundary(e)) continue;
    int r = uf_find(s.uf_edge, e);
    if (s.cyc_seen[r]) continue;
    s.cyc_seen[r] = 1;
    int f = has_bit(omega, E[e].first) ? E[e].first : E[e].second;
    R.boundary_cycles_per_component[s.comp_id[uf_find(s.uf_face, f)]]++;
  }
  for (int c = 0; c < ncomp; ++c) R.b1 += R.boundary_cycles_per_component[c] - 1;
  return R;
}

OmegaBetti omega_betti(const SimplePolytope& P, Mask omega) {
  OmegaScratch s;
  return omega_betti(P, omega, s);
}

OmegaBetti omega_betti_oracle(const SimplePolytope& P, const DualComplex& K, Mask omega) {
  OmegaBetti R;
  R.omega = omega;
  std::vector<int> vs = mask_to_vec(omega);
  int nv = (int)vs.size();
  std::vector<int> vidx(P.m, -1);
  for (int t = 0; t < nv; ++t) vidx[vs[t]] = t;
  std::vector<std::pair<int, int>> es;
  for (auto [a, b] : K.edges)
    if (has_bit(omega, a) && has_bit(omega, b)) es.emplace_back(a, b);
  std::vector<std::array<int, 3>> ts;
  for (auto& t : K.tris)
    if (has_bit(omega, t[0]) && has_bit(omega, t[1]) && has_bit(omega, t[2])) ts.push_back(t);
  auto eidx = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    auto it = std::lower_bound(es.begin(), es.end(), std::make_pair(a, b));
    return (int)(it - es.begin());
  };

  // reduced cochain complex  Z -> C^0 -> C^1 -> C^2
  IMat dm1(nv, 1), d0((int)es.size(), nv), d1((int)ts.size(), (int)es.size());
  for (int t = 0; t < nv; ++t) dm1.at(t, 0) = 1;
  for (int e = 0; e < (int)es.size(); ++e) {
    d0.at(e, vidx[es[e].first]) = -1;
    d0.at(e, vidx[es[e].second]) = 1;
  }
  for (int t = 0; t < (int)ts.size(); ++t) {
    auto [a, b, c] = ts[t];
    d1.at(t, eidx(a, b)) = 1;
    d1.at(t, eidx(a, c)) = -1;
    d1.at(t, eidx(b, c)) = 1;
  }
  auto smm1 = smith_invariants(dm1);
  auto sm0 = smith_invariants(d0);
  auto sm1 = smith_invariants(d1);
  for (auto* sm : {&smm1, &sm0, &sm1})
    for (auto& d : *sm)
      if (d != 1 && d != 0)
        throw ValidationError("NonSpherical", "torsion found in subcomplex cohomology");
  auto rk = [](const std::vector<boost::multiprecision::cpp_int>& v) {
    int r = 0;
    for (auto& d : v)
      if (d != 0) ++r;
    return r;
  };
  int r_1 = rk(smm1), r0 = rk(sm0), r1 = rk(sm1);
  R.b_neg1 = 1 - r_1;
  R.b0 = nv - r0 - r_1;
  R.b1 = (int)es.size() - r1 - r0;
  R.b2 = (int)ts.size() - r1;
  R.components = R.b0 + (omega ? 1 : 0);
  return R;
}

namespace {

BettiTable assemble(const SimplePolytope& P, int max_m, bool parallel) {
  if (P.m > max_m)
    throw BoundError("BoundTooLarge",
                     "m=" + std::to_string(P.m) + " exceeds subset sweep bound " +
                         std::to_string(max_m));
  const int m = P.m;
  BettiTable T;
  T.m = m;
  T.beta.assign(m + 1, std::vector<long long>(m + 1, 0));
  const std::uint64_t N = Mask{1} << m;

  int nthreads = 1;
#ifdef _OPENMP
  if (parallel) nthreads = omp_get_max_threads();
#endif
  std::vector<std::vector<std::vector<long long>>> partial(
      nthreads, std::vector<std::vector<long long>>(m + 1, std::vector<long long>(m + 1, 0)));

#ifdef _OPENMP
#pragma omp parallel if (parallel)
#endif
  {
    int tid = 0;
#ifdef _OPENMP
    tid = omp_get_thread_num();
#endif
    OmegaScratch scratch;
    auto& acc = partial[tid];
#ifdef _OPENMP
#pragma omp for schedule(static)
#endif
    for (long long w = 0; w < (long long)N; ++w) {
      OmegaBetti R = omega_betti(P, (Mask)w, scratch);
      int j = popcount((Mask)w);
      if (R.b_neg1) acc[0][0] += R.b_neg1;
      if (R.b0) acc[j - 1][j] += R.b0;
      if (R.b1) acc[j - 2][j] += R.b1;
      if (R.b2) acc[j - 3][j] += R.b2;
    }
  }
  for (auto& acc : partial)
    for (int i = 0; i <= m; ++i)
      for (int j = 0; j <= m; ++j) T.beta[i][j] += acc[i][j];

  T.total.assign(m + 4, 0);
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= m; ++j)
      if (T.beta[i][j]) T.total[2 * j - i] += T.beta[i][j];
  return T;
}

}  // namespace

BettiTable bigraded_betti(const SimplePolytope& P, int max_m) { return assemble(P, max_m, true); }
BettiTable bigraded_betti_serial(const SimplePolytope& P, int max_m) {
  return assemble(P, max_m, false);
}

long long three_belt_count_via_betti(const SimplePolytope& P) {
  // beta^{-1,6} = sum of b1 over |omega| = 3
  long long n = 0;
  OmegaScratch s;
  for (int a = 0; a < P.m; ++a)
    for (int b = a + 1; b < P.m; ++b)
      for (int c = b + 1; c < P.m; ++c) n += omega_betti(P, bit(a) | bit(b) | bit(c), s).b1;
  return n;
}

bool flag_h4_criterion(const SimplePolytope& P) {
  if (P.m == 4) throw ValidationError("IsSimplex", "criterion undefined for the simplex");
  long long m = P.m;
  // rk H^4 = beta^{-2,6} = sum of b0 over |omega| = 3
  long long rk = 0;
  OmegaScratch s;
  for (int a = 0; a < P.m; ++a)
    for (int b = a + 1; b < P.m; ++b)
      for (int c = b + 1; c < P.m; ++c) rk += omega_betti(P, bit(a) | bit(b) | bit(c), s).b0;
  return 3 * rk == (m - 2) * (m - 4) * (m - 6);
}

std::array<long long, 4> h_vector(const SimplePolytope& P) {
  auto [f0, f1, f2] = P.f_vector();
  // h(t) = (t-1)^3 + f2 (t-1)^2 + f1 (t-1) + f0
  std::array<long long, 4> h{};
  h[3] = 1;
  h[2] = -3 + f2;
  h[1] = 3 - 2 * f2 + f1;
  h[0] = -1 + f2 - f1 + f0;
  return h;
}

bool verify_poincare_series(const SimplePolytope& P, const BettiTable& T) {
  const int m = P.m, h = m - 3;
  auto hv = h_vector(P);
  // lhs coefficients of t^{2j}: (1-x)^h * (h0 + h1 x + h2 x^2 + h3 x^3), x = t^2
  std::vector<long long> lhs(m + 1, 0);
  std::vector<long long> binom(h + 1, 0);
  binom[0] = 1;
  for (int i = 1; i <= h; ++i) binom[i] = binom[i - 1] * (h - i + 1) / i;
  for (int i = 0; i <= h; ++i)
    for (int d = 0; d <= 3; ++d)
      if (i + d <= m) lhs[i + d] += (i % 2 ? -1 : 1) * binom[i] * hv[d];
  std::vector<long long> rhs(m + 1, 0);
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= m; ++j)
      if (T.beta[i][j]) rhs[j] += (i % 2 ? -1 : 1) * T.beta[i][j];
  return lhs == rhs;
}

bool verify_poincare_series(const SimplePolytope& P) {
  return verify_poincare_series(P, bigraded_betti(P));
}

}  // namespace ztop
