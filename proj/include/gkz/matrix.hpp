#ifndef GKZ_MATRIX_HPP
#define GKZ_MATRIX_HPP

#include <initializer_list>
#include <optional>
#include <vector>

#include "gkz/numbers.hpp"

namespace gkz {

// Dense integer matrix, row-major. Sized for desk-scale configurations
// (d <= 6, n <= 10), not for sparse or large problems.
struct IntMatrix {
  int rows = 0, cols = 0;
  std::vector<Int> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(size_t(r) * c, Int(0)) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> init) {
    rows = int(init.size());
    cols = rows ? int(init.begin()->size()) : 0;
    a.reserve(size_t(rows) * cols);
    for (const auto& row : init) {
      if (int(row.size()) != cols)
        throw Error("SHAPE-MISMATCH", "ragged initializer");
      for (long x : row) a.emplace_back(x);
    }
  }

  Int& at(int i, int j) { return a[size_t(i) * cols + j]; }
  const Int& at(int i, int j) const { return a[size_t(i) * cols + j]; }

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  IntVec col(int j) const {
    IntVec v(rows);
    for (int i = 0; i < rows; ++i) v[i] = at(i, j);
    return v;
  }

  IntVec row(int i) const {
    IntVec v(cols);
    for (int j = 0; j < cols; ++j) v[j] = at(i, j);
    return v;
  }

  bool operator==(const IntMatrix& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
};

inline IntMatrix mul(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols != y.rows) throw Error("SHAPE-MISMATCH", "matrix product");
  IntMatrix z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      if (x.at(i, k) == 0) continue;
      for (int j = 0; j < y.cols; ++j) z.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  return z;
}

inline IntMatrix transpose(const IntMatrix& m) {
  IntMatrix t(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  return t;
}

// Bareiss determinant, exact.
inline Int det(const IntMatrix& m) {
  if (m.rows != m.cols) throw Error("SHAPE-MISMATCH", "det of non-square");
  int n = m.rows;
  if (n == 0) return 1;
  IntMatrix w = m;
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (w.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (w.at(i, k) != 0) { p = i; break; }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int t = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
        mpz_divexact(w.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = w.at(k, k);
  }
  return sign > 0 ? w.at(n - 1, n - 1) : -w.at(n - 1, n - 1);
}

// Rational Gaussian elimination: rank, and solving M x = b exactly.
struct RatMatrix {
  int rows = 0, cols = 0;
  std::vector<Rat> a;
  RatMatrix(int r, int c) : rows(r), cols(c), a(size_t(r) * c) {}
  explicit RatMatrix(const IntMatrix& m) : rows(m.rows), cols(m.cols), a(m.a.size()) {
    for (size_t i = 0; i < m.a.size(); ++i) a[i] = Rat(m.a[i]);
  }
  Rat& at(int i, int j) { return a[size_t(i) * cols + j]; }
  const Rat& at(int i, int j) const { return a[size_t(i) * cols + j]; }
};

inline int rank(const IntMatrix& m) {
  RatMatrix w(m);
  int r = 0;
  for (int c = 0; c < w.cols && r < w.rows; ++c) {
    int p = -1;
    for (int i = r; i < w.rows; ++i)
      if (w.at(i, c) != 0) { p = i; break; }
    if (p < 0) continue;
    for (int j = 0; j < w.cols; ++j) std::swap(w.at(r, j), w.at(p, j));
    for (int i = r + 1; i < w.rows; ++i) {
      if (w.at(i, c) == 0) continue;
      Rat f = w.at(i, c) / w.at(r, c);
      for (int j = c; j < w.cols; ++j) w.at(i, j) -= f * w.at(r, j);
    }
    ++r;
  }
  return r;
}

enum class SolveStatus { Unique, None, Underdetermined };

struct SolveResult {
  SolveStatus status;
  RatVec x;  // valid when status == Unique
};

// Solves M x = b over Q. M given as columns of an IntMatrix restricted to
// `which_cols` (all columns when empty).
inline SolveResult solve_exact(const IntMatrix& m, const RatVec& b,
                               const std::vector<int>& which_cols = {}) {
  std::vector<int> cols;
  if (which_cols.empty())
    for (int j = 0; j < m.cols; ++j) cols.push_back(j);
  else
    cols = which_cols;
  int nr = m.rows, nc = int(cols.size());
  RatMatrix w(nr, nc + 1);
  for (int i = 0; i < nr; ++i) {
    for (int j = 0; j < nc; ++j) w.at(i, j) = Rat(m.at(i, cols[j]));
    w.at(i, nc) = b[i];
  }
  std::vector<int> pivot_col(nr, -1);
  int r = 0;
  for (int c = 0; c < nc && r < nr; ++c) {
    int p = -1;
    for (int i = r; i < nr; ++i)
      if (w.at(i, c) != 0) { p = i; break; }
    if (p < 0) continue;
    for (int j = 0; j <= nc; ++j) std::swap(w.at(r, j), w.at(p, j));
    Rat inv = 1 / w.at(r, c);
    for (int j = c; j <= nc; ++j) w.at(r, j) *= inv;
    for (int i = 0; i < nr; ++i) {
      if (i == r || w.at(i, c) == 0) continue;
      Rat f = w.at(i, c);
      for (int j = c; j <= nc; ++j) w.at(i, j) -= f * w.at(r, j);
    }
    pivot_col[r] = c;
    ++r;
  }
  for (int i = r; i < nr; ++i)
    if (w.at(i, nc) != 0) return {SolveStatus::None, {}};
  if (r < nc) return {SolveStatus::Underdetermined, {}};
  RatVec x(nc);
  for (int i = 0; i < r; ++i) x[pivot_col[i]] = w.at(i, nc);
  return {SolveStatus::Unique, x};
}

// Is the all-ones vector in the rational row span of A?
inline bool ones_in_rowspan(const IntMatrix& A) {
  // Solve A^T y = (1,...,1).
  RatVec ones(A.cols, Rat(1));
  auto res = solve_exact(transpose(A), ones);
  if (res.status == SolveStatus::Unique) return true;
  if (res.status == SolveStatus::None) return false;
  // Underdetermined: consistent iff rank([A^T | 1]) == rank(A^T).
  IntMatrix aug(A.cols, A.rows + 1);
  for (int i = 0; i < A.cols; ++i) {
    for (int j = 0; j < A.rows; ++j) aug.at(i, j) = A.at(j, i);
    aug.at(i, A.rows) = 1;
  }
  return rank(aug) == rank(A);
}

}  // namespace gkz

#endif
