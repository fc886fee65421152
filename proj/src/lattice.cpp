#include "gkz/lattice.hpp"

namespace gkz {

bool lattice_span_ok(const IntMatrix& A) {
  if (rank(A) != A.rows) return false;
  auto sf = smith_form(A);
  for (int i = 0; i < A.rows; ++i)
    if (sf.S.at(i, i) != 1) return false;
  return true;
}

void require_configuration(const IntMatrix& A) {
  if (rank(A) != A.rows)
    throw Error("RANK-DEFICIENT", "matrix does not have full row rank");
  if (!lattice_span_ok(A))
    throw Error("LATTICE-SPAN",
                "columns do not Z-span Z^d (Smith invariant factors != 1)");
}

KernelBasis kernel_basis(const IntMatrix& A) {
  if (rank(A) != A.rows)
    throw Error("RANK-DEFICIENT", "kernel_basis requires full row rank");
  int n = A.cols, d = A.rows;
  // U*A*V = S diagonal with d nonzero pivots; the last n-d columns of V
  // span ker_Z(A).
  auto sf = smith_form(A);
  IntMatrix gens(n - d, n);
  for (int k = 0; k < n - d; ++k)
    for (int i = 0; i < n; ++i) gens.at(k, i) = sf.V.at(i, d + k);
  IntMatrix H = hermite_rows(gens);
  KernelBasis kb;
  kb.n = n;
  for (int i = 0; i < H.rows; ++i) {
    std::vector<long> v(n);
    for (int j = 0; j < n; ++j) {
      if (!H.at(i, j).fits_slong_p())
        throw Error("OVERFLOW", "kernel vector entry out of long range");
      v[j] = H.at(i, j).get_si();
    }
    kb.vectors.push_back(std::move(v));
  }
  return kb;
}

IntMatrix homogenize_matrix(const IntMatrix& A) {
  IntMatrix R(A.rows + 1, A.cols + 1);
  for (int j = 0; j <= A.cols; ++j) R.at(0, j) = 1;
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) R.at(i + 1, j + 1) = A.at(i, j);
  return R;
}

KernelBasis orient_kernel(const KernelBasis& kb, const RatVec& w) {
  KernelBasis out = kb;
  for (auto& g : out.vectors) {
    Rat p = dot(w, g);
    if (p == 0)
      throw Error("WEIGHT-ORTHOGONAL-KERNEL",
                  "weight pairs to zero with a kernel basis vector");
    if (p < 0)
      for (auto& x : g) x = -x;
  }
  return out;
}

GaleDual gale_dual(const IntMatrix& rhoA,
                   const std::optional<KernelBasis>& preferred) {
  int m = rhoA.cols;  // n+1
  GaleDual B;
  std::vector<std::vector<long>> cols;
  if (preferred) {
    if (preferred->n != m - 1)
      throw Error("SHAPE-MISMATCH", "preferred kernel has wrong dimension");
    for (const auto& g : preferred->vectors) {
      std::vector<long> c(m);
      c[0] = -coord_sum(g);
      for (int i = 0; i < m - 1; ++i) c[i + 1] = g[i];
      cols.push_back(std::move(c));
    }
  } else {
    auto kb = kernel_basis(rhoA);
    cols = kb.vectors;
  }
  B.rows.assign(m, RatVec(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j)
    for (int i = 0; i < m; ++i) B.rows[i][j] = Rat(cols[j][i]);
  // Invariants rho(A).B = 0 and -b_0 = sum_{i>=1} b_i hold by construction;
  // verify the first exactly as a guard.
  for (int r = 0; r < rhoA.rows; ++r)
    for (size_t j = 0; j < cols.size(); ++j) {
      Int s = 0;
      for (int i = 0; i < m; ++i) s += rhoA.at(r, i) * Int(cols[j][i]);
      if (s != 0) throw Error("INTERNAL", "gale dual is not in the kernel");
    }
  return B;
}

bool spans_kernel_lattice(const IntMatrix& A,
                          const std::vector<std::vector<long>>& vecs) {
  auto kb = kernel_basis(A);
  if (kb.count() != int(vecs.size())) return false;
  if (kb.empty()) return true;
  int n = A.cols;
  IntMatrix M1(kb.count(), n), M2(int(vecs.size()), n);
  for (int i = 0; i < kb.count(); ++i)
    for (int j = 0; j < n; ++j) M1.at(i, j) = kb.vectors[i][j];
  for (size_t i = 0; i < vecs.size(); ++i) {
    for (int k = 0; k < A.rows; ++k) {
      Int s = 0;
      for (int j = 0; j < n; ++j) s += A.at(k, j) * Int(vecs[i][j]);
      if (s != 0) return false;
    }
    for (int j = 0; j < n; ++j) M2.at(int(i), j) = vecs[i][j];
  }
  return hermite_rows(M1) == hermite_rows(M2);
}

}  // namespace gkz
