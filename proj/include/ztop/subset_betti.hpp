#ifndef ZTOP_SUBSET_BETTI_HPP
#define ZTOP_SUBSET_BETTI_HPP

#include <vector>

#include "ztop/common.hpp"
#include "ztop/polytope.hpp"

namespace ztop {

// Reduced Betti numbers of P_omega (a disjoint union of spheres with holes),
// computed from face components and boundary cycles.
struct OmegaBetti {
  Mask omega = 0;
  int b_neg1 = 0, b0 = 0, b1 = 0, b2 = 0;
  int components = 0;
  std::vector<int> boundary_cycles_per_component;
};

// Scratch space so the 2^m sweep does not allocate per subset.
struct OmegaScratch {
  std::vector<int> uf_face, uf_edge, comp_id, cyc_seen;
};

OmegaBetti omega_betti(const SimplePolytope& P, Mask omega);
OmegaBetti omega_betti(const SimplePolytope& P, Mask omega, OmegaScratch& scratch);

// Independent oracle: integer reduction of the reduced cochain complex of the
// full subcomplex K_omega of the dual complex.  Also certifies freeness.
OmegaBetti omega_betti_oracle(const SimplePolytope& P, const DualComplex& K, Mask omega);

struct BettiTable {
  int m = 0;
  // beta[i][j] = beta^{-i,2j}, 0 <= i <= m-3+..., 0 <= j <= m
  std::vector<std::vector<long long>> beta;
  std::vector<long long> total;  // rank H^k(Z_P), k = 0..m+3

  long long rank_h(int k) const { return (k >= 0 && k < (int)total.size()) ? total[k] : 0; }
};

// Full 2^m sweep (OpenMP) and a serial reference implementation.
BettiTable bigraded_betti(const SimplePolytope& P, int max_m = 20);
BettiTable bigraded_betti_serial(const SimplePolytope& P, int max_m = 20);

long long three_belt_count_via_betti(const SimplePolytope& P);

// rk H^4 == (m-2)(m-4)(m-6)/3, equivalent to flagness for P != simplex.
bool flag_h4_criterion(const SimplePolytope& P);

// (1-t^2)^{m-3} (h0 + h1 t^2 + h2 t^4 + h3 t^6) == sum (-1)^i beta^{-i,2j} t^{2j}
bool verify_poincare_series(const SimplePolytope& P, const BettiTable& T);
bool verify_poincare_series(const SimplePolytope& P);

std::array<long long, 4> h_vector(const SimplePolytope& P);

}  // namespace ztop

#endif
