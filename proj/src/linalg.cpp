#include "ztop/linalg.hpp"

#include <algorithm>

namespace ztop {

IMat IMat::identity(int n) {
  IMat I(n, n);
  for (int i = 0; i < n; ++i) I.at(i, i) = 1;
  return I;
}

IMat IMat::mul(const IMat& o) const {
  IMat R(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      const Int& v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < o.cols; ++j)
        if (o.at(k, j) != 0) R.at(i, j) += v * o.at(k, j);
    }
  return R;
}

namespace {

// Forward elimination; returns rank, leaves M in echelon form, records pivot
// columns.  First nonzero pivot by row-scan order keeps results deterministic.
int echelon(RMat& M, std::vector<int>* pivots = nullptr) {
  int r = 0;
  for (int c = 0; c < M.cols && r < M.rows; ++c) {
    int p = -1;
    for (int i = r; i < M.rows; ++i)
      if (M.at(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < M.cols; ++j) std::swap(M.at(p, j), M.at(r, j));
    Rat inv = M.at(r, c);
    for (int i = 0; i < M.rows; ++i) {
      if (i == r || M.at(i, c) == 0) continue;
      Rat f = M.at(i, c) / inv;
      for (int j = c; j < M.cols; ++j) M.at(i, j) -= f * M.at(r, j);
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return r;
}

}  // namespace

int rank_rat(RMat M) { return echelon(M); }

std::vector<std::vector<Rat>> kernel_rat(RMat M) {
  std::vector<int> piv;
  int r = echelon(M, &piv);
  std::vector<bool> is_piv(M.cols, false);
  for (int c : piv) is_piv[c] = true;
  std::vector<std::vector<Rat>> out;
  for (int c = 0; c < M.cols; ++c) {
    if (is_piv[c]) continue;
    std::vector<Rat> v(M.cols, Rat(0));
    v[c] = 1;
    for (int i = 0; i < r; ++i) {
      if (M.at(i, c) == 0) continue;
      v[piv[i]] = -M.at(i, c) / M.at(i, piv[i]);
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<std::vector<Rat>> solve_rat(RMat M, std::vector<Rat> b) {
  RMat A(M.rows, M.cols + 1);
  for (int i = 0; i < M.rows; ++i) {
    for (int j = 0; j < M.cols; ++j) A.at(i, j) = M.at(i, j);
    A.at(i, M.cols) = b[i];
  }
  std::vector<int> piv;
  int r = echelon(A, &piv);
  for (int i = 0; i < r; ++i)
    if (piv[i] == M.cols) return std::nullopt;  // pivot in the rhs column
  std::vector<Rat> x(M.cols, Rat(0));
  for (int i = 0; i < r; ++i) x[piv[i]] = A.at(i, M.cols) / A.at(i, piv[i]);
  return x;
}

Rat det_rat(RMat M) {
  if (M.rows != M.cols) throw UsageError("BadIndex", "det of non-square matrix");
  Rat det = 1;
  int n = M.rows;
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (M.at(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) return 0;
    if (p != c) {
      for (int j = 0; j < n; ++j) std::swap(M.at(p, j), M.at(c, j));
      det = -det;
    }
    det *= M.at(c, c);
    for (int i = c + 1; i < n; ++i) {
      if (M.at(i, c) == 0) continue;
      Rat f = M.at(i, c) / M.at(c, c);
      for (int j = c; j < n; ++j) M.at(i, j) -= f * M.at(c, j);
    }
  }
  return det;
}

RMat inverse_rat(RMat M) {
  int n = M.rows;
  RMat A(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) A.at(i, j) = M.at(i, j);
    A.at(i, n + i) = 1;
  }
  std::vector<int> piv;
  int r = echelon(A, &piv);
  if (r != n || piv[n - 1] != n - 1) throw UsageError("BadIndex", "matrix is singular");
  RMat R(n, n);
  for (int i = 0; i < n; ++i) {
    Rat d = A.at(i, i);
    for (int j = 0; j < n; ++j) R.at(i, j) = A.at(i, n + j) / d;
  }
  return R;
}

namespace {

struct SmithCtx {
  IMat M, U, V;
  bool track;
  void row_swap(int a, int b) {
    for (int j = 0; j < M.cols; ++j) std::swap(M.at(a, j), M.at(b, j));
    if (track)
      for (int j = 0; j < U.cols; ++j) std::swap(U.at(a, j), U.at(b, j));
  }
  void col_swap(int a, int b) {
    for (int i = 0; i < M.rows; ++i) std::swap(M.at(i, a), M.at(i, b));
    if (track)
      for (int i = 0; i < V.rows; ++i) std::swap(V.at(i, a), V.at(i, b));
  }
  void row_add(int dst, int src, const Int& f) {  // row dst += f * row src
    for (int j = 0; j < M.cols; ++j) M.at(dst, j) += f * M.at(src, j);
    if (track)
      for (int j = 0; j < U.cols; ++j) U.at(dst, j) += f * U.at(src, j);
  }
  void col_add(int dst, int src, const Int& f) {
    for (int i = 0; i < M.rows; ++i) M.at(i, dst) += f * M.at(i, src);
    if (track)
      for (int i = 0; i < V.rows; ++i) V.at(i, dst) += f * V.at(i, src);
  }
  void row_neg(int r) {
    for (int j = 0; j < M.cols; ++j) M.at(r, j) = -M.at(r, j);
    if (track)
      for (int j = 0; j < U.cols; ++j) U.at(r, j) = -U.at(r, j);
  }
};

void smith_core(SmithCtx& C, std::vector<Int>& diag) {
  IMat& M = C.M;
  int n = std::min(M.rows, M.cols);
  for (int t = 0; t < n; ++t) {
    // find smallest-abs nonzero entry in the remaining block
    for (;;) {
      int pi = -1, pj = -1;
      Int best = 0;
      for (int i = t; i < M.rows; ++i)
        for (int j = t; j < M.cols; ++j) {
          const Int& v = M.at(i, j);
          if (v == 0) continue;
          Int av = abs(v);
          if (pi < 0 || av < best) {
            best = av;
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) {
        for (int r = t; r < n; ++r) diag.push_back(0);
        return;
      }
      C.row_swap(t, pi);
      C.col_swap(t, pj);
      bool clean = true;
      for (int i = t + 1; i < M.rows; ++i) {
        if (M.at(i, t) == 0) continue;
        Int q = M.at(i, t) / M.at(t, t);
        C.row_add(i, t, -q);
        if (M.at(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < M.cols; ++j) {
        if (M.at(t, j) == 0) continue;
        Int q = M.at(t, j) / M.at(t, t);
        C.col_add(j, t, -q);
        if (M.at(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility sweep
      bool again = false;
      for (int i = t + 1; i < M.rows && !again; ++i)
        for (int j = t + 1; j < M.cols && !again; ++j)
          if (M.at(i, j) % M.at(t, t) != 0) {
            C.row_add(t, i, 1);
            again = true;
          }
      if (!again) break;
    }
    if (M.at(t, t) < 0) C.row_neg(t);
    diag.push_back(M.at(t, t));
  }
}

}  // namespace

std::vector<Int> smith_invariants(IMat M) {
  SmithCtx C{std::move(M), {}, {}, false};
  std::vector<Int> diag;
  smith_core(C, diag);
  return diag;
}

SmithResult smith_with_transforms(IMat M) {
  SmithCtx C{M, IMat::identity(M.rows), IMat::identity(M.cols), true};
  SmithResult R;
  smith_core(C, R.diag);
  R.U = std::move(C.U);
  R.V = std::move(C.V);
  return R;
}

IMat integer_kernel(const IMat& M) {
  // U M V = D; kernel basis = columns of V past the rank
  auto S = smith_with_transforms(M);
  int r = 0;
  for (auto& d : S.diag)
    if (d != 0) ++r;
  IMat K(M.cols, M.cols - r);
  for (int j = r; j < M.cols; ++j)
    for (int i = 0; i < M.cols; ++i) K.at(i, j - r) = S.V.at(i, j);
  return K;
}

RatSolver::RatSolver(RMat A) : rows_(A.rows), cols_(A.cols) {
  R_ = RMat(A.rows, A.cols + A.rows);
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < A.cols; ++j) R_.at(i, j) = A.at(i, j);
    R_.at(i, A.cols + i) = 1;
  }
  // eliminate only within the first cols_ columns
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int p = -1;
    for (int i = r; i < rows_; ++i)
      if (R_.at(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < R_.cols; ++j) std::swap(R_.at(p, j), R_.at(r, j));
    for (int i = 0; i < rows_; ++i) {
      if (i == r || R_.at(i, c) == 0) continue;
      Rat f = R_.at(i, c) / R_.at(r, c);
      for (int j = 0; j < R_.cols; ++j) R_.at(i, j) -= f * R_.at(r, j);
    }
    pivot_col_.push_back(c);
    ++r;
  }
  rank_ = r;
}

std::optional<std::vector<Rat>> RatSolver::solve(const std::vector<Rat>& b) const {
  // transformed rhs: T b where T is recorded in the right block of R_
  std::vector<Rat> tb(rows_, Rat(0));
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < rows_; ++k)
      if (R_.at(i, cols_ + k) != 0 && b[k] != 0) tb[i] += R_.at(i, cols_ + k) * b[k];
  for (int i = rank_; i < rows_; ++i)
    if (tb[i] != 0) return std::nullopt;
  std::vector<Rat> x(cols_, Rat(0));
  for (int i = 0; i < rank_; ++i) x[pivot_col_[i]] = tb[i] / R_.at(i, pivot_col_[i]);
  return x;
}

}  // namespace ztop
