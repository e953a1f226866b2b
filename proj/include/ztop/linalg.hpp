#ifndef ZTOP_LINALG_HPP
#define ZTOP_LINALG_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <vector>

#include "ztop/common.hpp"

namespace ztop {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

struct IMat {
  int rows = 0, cols = 0;
  std::vector<Int> a;
  IMat() = default;
  IMat(int r, int c) : rows(r), cols(c), a((size_t)r * c) {}
  Int& at(int r, int c) { return a[(size_t)r * cols + c]; }
  const Int& at(int r, int c) const { return a[(size_t)r * cols + c]; }
  static IMat identity(int n);
  IMat mul(const IMat& o) const;
};

struct RMat {
  int rows = 0, cols = 0;
  std::vector<Rat> a;
  RMat() = default;
  RMat(int r, int c) : rows(r), cols(c), a((size_t)r * c) {}
  Rat& at(int r, int c) { return a[(size_t)r * cols + c]; }
  const Rat& at(int r, int c) const { return a[(size_t)r * cols + c]; }
};

// Rank over Q; deterministic first-nonzero pivot rule.
int rank_rat(RMat M);

// Kernel basis over Q (columns of the result span ker M).
std::vector<std::vector<Rat>> kernel_rat(RMat M);

// Solve M x = b over Q; nullopt when inconsistent.
std::optional<std::vector<Rat>> solve_rat(RMat M, std::vector<Rat> b);

// |det| for a square rational matrix.
Rat det_rat(RMat M);

// Inverse of a square nonsingular rational matrix.
RMat inverse_rat(RMat M);

// Smith normal form invariants d_1 | d_2 | ... (nonzero entries only padded
// with zeros to min(rows, cols)).
std::vector<Int> smith_invariants(IMat M);

// U * M * V = D with U, V unimodular; returns (U, D-diagonal, V).
struct SmithResult {
  IMat U, V;
  std::vector<Int> diag;
};
SmithResult smith_with_transforms(IMat M);

// Basis of the integer kernel lattice of M (columns), saturated.
IMat integer_kernel(const IMat& M);

// Cached LU-style solver for repeated solves of A x = b over Q.
class RatSolver {
 public:
  explicit RatSolver(RMat A);
  // Returns x with A x = b, or nullopt when inconsistent.  When the system is
  // underdetermined, free variables are set to zero.
  std::optional<std::vector<Rat>> solve(const std::vector<Rat>& b) const;
  int rank() const { return rank_; }

 private:
  RMat R_;                       // row echelon of [A | I]
  int rows_ = 0, cols_ = 0, rank_ = 0;
  std::vector<int> pivot_col_;
};

}  // namespace ztop

#endif
