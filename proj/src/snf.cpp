#include "gkz/snf.hpp"

#include <cstdlib>

namespace gkz {

namespace {

void swap_rows(IntMatrix& m, int i, int j) {
  if (i == j) return;
  for (int c = 0; c < m.cols; ++c) std::swap(m.at(i, c), m.at(j, c));
}

void swap_cols(IntMatrix& m, int i, int j) {
  if (i == j) return;
  for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, i), m.at(r, j));
}

void add_row(IntMatrix& m, int dst, int src, const Int& f) {
  for (int c = 0; c < m.cols; ++c) m.at(dst, c) += f * m.at(src, c);
}

void add_col(IntMatrix& m, int dst, int src, const Int& f) {
  for (int r = 0; r < m.rows; ++r) m.at(r, dst) += f * m.at(r, src);
}

void negate_row(IntMatrix& m, int i) {
  for (int c = 0; c < m.cols; ++c) m.at(i, c) = -m.at(i, c);
}

}  // namespace

SmithForm smith_form(const IntMatrix& M) {
  IntMatrix S = M;
  IntMatrix U = IntMatrix::identity(M.rows);
  IntMatrix V = IntMatrix::identity(M.cols);

  int t = 0;
  int limit = std::min(M.rows, M.cols);
  while (t < limit) {
    // Find a nonzero pivot in the trailing block.
    int pi = -1, pj = -1;
    for (int i = t; i < S.rows && pi < 0; ++i)
      for (int j = t; j < S.cols; ++j)
        if (S.at(i, j) != 0) { pi = i; pj = j; break; }
    if (pi < 0) break;
    swap_rows(S, t, pi); swap_rows(U, t, pi);
    swap_cols(S, t, pj); swap_cols(V, t, pj);

    bool clean = false;
    while (!clean) {
      // Clear column t below the pivot.
      for (int i = t + 1; i < S.rows; ++i) {
        while (S.at(i, t) != 0) {
          if (abs(S.at(t, t)) > abs(S.at(i, t))) {
            swap_rows(S, t, i); swap_rows(U, t, i);
          }
          Int q = S.at(i, t) / S.at(t, t);
          if (q != 0) { add_row(S, i, t, -q); add_row(U, i, t, -q); }
          if (S.at(i, t) != 0 && abs(S.at(t, t)) <= abs(S.at(i, t))) continue;
          if (S.at(i, t) != 0) { swap_rows(S, t, i); swap_rows(U, t, i); }
        }
      }
      // Clear row t right of the pivot.
      for (int j = t + 1; j < S.cols; ++j) {
        while (S.at(t, j) != 0) {
          if (abs(S.at(t, t)) > abs(S.at(t, j))) {
            swap_cols(S, t, j); swap_cols(V, t, j);
          }
          Int q = S.at(t, j) / S.at(t, t);
          if (q != 0) { add_col(S, j, t, -q); add_col(V, j, t, -q); }
          if (S.at(t, j) != 0 && abs(S.at(t, t)) <= abs(S.at(t, j))) continue;
          if (S.at(t, j) != 0) { swap_cols(S, t, j); swap_cols(V, t, j); }
        }
      }
      clean = true;
      for (int i = t + 1; i < S.rows; ++i)
        if (S.at(i, t) != 0) { clean = false; break; }
      if (clean)
        for (int j = t + 1; j < S.cols; ++j)
          if (S.at(t, j) != 0) { clean = false; break; }
    }

    // Divisibility: S[t][t] must divide every entry of the trailing block.
    bool restart = false;
    for (int i = t + 1; i < S.rows && !restart; ++i)
      for (int j = t + 1; j < S.cols; ++j)
        if (S.at(i, j) % S.at(t, t) != 0) {
          add_row(S, t, i, 1); add_row(U, t, i, 1);
          restart = true;
          break;
        }
    if (restart) continue;

    if (S.at(t, t) < 0) { negate_row(S, t); negate_row(U, t); }
    ++t;
  }
  return {U, S, V};
}

IntMatrix hermite_rows(const IntMatrix& M) {
  IntMatrix H = M;
  int r = 0;
  for (int c = 0; c < H.cols && r < H.rows; ++c) {
    // Reduce column c below row r to a single nonzero entry via gcd steps.
    while (true) {
      int p = -1;
      for (int i = r; i < H.rows; ++i)
        if (H.at(i, c) != 0) {
          if (p < 0 || abs(H.at(i, c)) < abs(H.at(p, c))) p = i;
        }
      if (p < 0) break;
      swap_rows(H, r, p);
      bool done = true;
      for (int i = r + 1; i < H.rows; ++i) {
        if (H.at(i, c) == 0) continue;
        Int q = H.at(i, c) / H.at(r, c);
        add_row(H, i, r, -q);
        if (H.at(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (H.at(r, c) == 0) continue;
    if (H.at(r, c) < 0) negate_row(H, r);
    // Reduce the entries above the pivot into [0, pivot).
    for (int i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), H.at(i, c).get_mpz_t(), H.at(r, c).get_mpz_t());
      if (q != 0) add_row(H, i, r, -q);
    }
    ++r;
  }
  IntMatrix out(r, H.cols);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < H.cols; ++j) out.at(i, j) = H.at(i, j);
  return out;
}

}  // namespace gkz
