#ifndef GKZ_SNF_HPP
#define GKZ_SNF_HPP

#include "gkz/matrix.hpp"

namespace gkz {

struct SmithForm {
  IntMatrix U, S, V;  // U*M*V == S, U and V unimodular, S diagonal
};

// Smith normal form with unimodular transforms, the classical pivoting
// algorithm. Exact; fine at desk scale.
SmithForm smith_form(const IntMatrix& M);

// Row-style Hermite normal form of the lattice spanned by the rows of M:
// returns the canonical basis (pivots positive, entries above each pivot
// reduced into [0, pivot)), zero rows dropped. Canonical per lattice, so
// two generating sets span the same lattice iff their HNFs agree.
IntMatrix hermite_rows(const IntMatrix& M);

}  // namespace gkz

#endif
