#ifndef GKZ_LATTICE_HPP
#define GKZ_LATTICE_HPP

#include <optional>

#include "gkz/matrix.hpp"
#include "gkz/snf.hpp"

namespace gkz {

// Z-basis of ker_Z(A), one vector per entry. Normalized as the HNF rows of
// the kernel lattice, so output is canonical for a given A.
struct KernelBasis {
  std::vector<std::vector<long>> vectors;  // each of length A.cols
  int n = 0;                               // ambient dimension
  bool empty() const { return vectors.empty(); }
  int count() const { return int(vectors.size()); }
};

// Gale dual of a homogenized matrix rho(A): an (n+1) x (n-d) rational
// matrix whose columns form a Z-basis of ker_Z(rho(A)). Rows are b_0..b_n.
struct GaleDual {
  std::vector<RatVec> rows;  // n+1 rows, each of length n-d
  int codim() const { return rows.empty() ? 0 : int(rows[0].size()); }
};

// Throws RANK-DEFICIENT / LATTICE-SPAN diagnostics when A is not a valid
// configuration matrix (full row rank, columns Z-span Z^d).
void require_configuration(const IntMatrix& A);

bool lattice_span_ok(const IntMatrix& A);

KernelBasis kernel_basis(const IntMatrix& A);

// rho(A): first row all ones, first column (1,0,...,0)^T, block A.
IntMatrix homogenize_matrix(const IntMatrix& A);

// Flip signs so that w . gamma_i > 0 for every basis vector. Throws
// WEIGHT-ORTHOGONAL-KERNEL if some pairing is exactly zero.
KernelBasis orient_kernel(const KernelBasis& kb, const RatVec& w);

// Gale dual of rho(A). With a preferred kernel basis of A, columns are
// (-|gamma_i|, gamma_i); otherwise the HNF kernel basis of rho(A) is used.
GaleDual gale_dual(const IntMatrix& rhoA,
                   const std::optional<KernelBasis>& preferred = std::nullopt);

// True iff the given vectors span ker_Z(A) as a lattice (not merely a
// finite-index sublattice). Used by tests as the saturation oracle.
bool spans_kernel_lattice(const IntMatrix& A,
                          const std::vector<std::vector<long>>& vecs);

}  // namespace gkz

#endif
