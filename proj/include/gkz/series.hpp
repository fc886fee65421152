#ifndef GKZ_SERIES_HPP
#define GKZ_SERIES_HPP

#include "gkz/exponents.hpp"
#include "gkz/groebner.hpp"

namespace gkz {

enum class SupportKind { GenericSigma, MinimalNegativeNv };

struct SeriesTerm {
  std::vector<long> u;  // in ker_Z(A)
  Rat coeff;            // nonzero
};

// Truncation of phi_v: all terms with w.u <= T, exactly.
struct TruncatedSeries {
  FakeExponent exponent;
  RatVec weight;
  Rat bound;  // T
  std::vector<SeriesTerm> terms;   // sorted by (w.u, lex u)
  SupportKind kind = SupportKind::GenericSigma;

  const Rat* coeff_of(const std::vector<long>& u) const;
};

// All u in the support set with w.u <= T. Enumeration is exact via
// per-coordinate FM bounds; throws UNBOUNDED-SLICE when the T-slice is
// unbounded (weight/pair mismatch).
std::vector<std::vector<long>> enumerate_support(const FakeExponent& v,
                                                 SupportKind kind,
                                                 const KernelBasis& kb,
                                                 const RatVec& w, const Rat& T);

// phi_v truncated at T with the hypergeometric coefficients
// [v]_{u-} / [u+v]_{u+}. Throws ZERO-DENOMINATOR on genericity violations.
TruncatedSeries build_series(const FakeExponent& v, SupportKind kind,
                             const KernelBasis& kb, const RatVec& w,
                             const Rat& T);

// Falling-factorial action [s]_e = prod_i prod_{j=0}^{e_i-1} (s_i - j).
Rat falling_factorial(const RatVec& s, const Monomial& e);

struct OracleReport {
  struct EulerViolation {
    std::vector<long> u;
    int row;
  };
  struct ToricViolation {
    size_t binomial_index;
    std::vector<long> u;
    Rat lhs, rhs;
  };
  std::vector<EulerViolation> euler;
  std::vector<ToricViolation> toric;
  long toric_pairs_checked = 0;
  bool pass() const { return euler.empty() && toric.empty(); }
};

// Annihilation checks: Euler operators on every term (unconditional), and
// the toric pairing on the truncation-safe window w.u <= T - w.max(a,b).
OracleReport annihilation_oracle(const TruncatedSeries& s,
                                 const std::vector<Binomial>& gb,
                                 const IntMatrix& A, const RatVec& beta);

// Deterministic homogenizing value: 1/p for the smallest prime p dividing
// no |v| denominator. A provided hint is validated instead.
Rat homogenizing_value(const std::vector<FakeExponent>& exps,
                       const std::optional<Rat>& hint = std::nullopt);

// rho: exponent (beta0 - |v|, v), terms u -> (-|u|, u); coefficients are
// re-derived from the homogenized exponent and asserted equal.
TruncatedSeries homogenize_series(const TruncatedSeries& s, const Rat& beta0);

// Inverse of homogenize_series; requires a non-integer 0th exponent
// coordinate (INTEGER-X0-EXPONENT otherwise).
TruncatedSeries dehomogenize_series(const TruncatedSeries& psi);

}  // namespace gkz

#endif
