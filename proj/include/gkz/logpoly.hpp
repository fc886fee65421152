#ifndef GKZ_LOGPOLY_HPP
#define GKZ_LOGPOLY_HPP

#include <map>

#include "gkz/lattice.hpp"

namespace gkz {

// Exact polynomial in log-variables t_0..t_{m-1}, sparse map from
// multidegree to coefficient.
struct LogPolynomial {
  int nvars = 0;
  std::map<std::vector<int>, Rat> coeffs;  // nonzero only

  static LogPolynomial constant(int nvars, const Rat& c);
  static LogPolynomial variable(int nvars, int i);

  bool is_zero() const { return coeffs.empty(); }
  int degree_in(int var) const;
  void add_term(const std::vector<int>& e, const Rat& c);
  bool operator==(const LogPolynomial& o) const {
    return nvars == o.nvars && coeffs == o.coeffs;
  }
};

LogPolynomial add(const LogPolynomial& a, const LogPolynomial& b);
LogPolynomial scale(const LogPolynomial& a, const Rat& c);
LogPolynomial mul(const LogPolynomial& a, const LogPolynomial& b);
LogPolynomial pow(const LogPolynomial& a, int k);
LogPolynomial derivative(const LogPolynomial& a, int var);
LogPolynomial substitute_zero(const LogPolynomial& a, int var);

// Polynomial in the kernel-basis linear forms: coefficient c_alpha on
// prod_j (gamma_j . t)^{alpha_j}.
struct KernelFormPoly {
  std::map<std::vector<int>, Rat> coeffs;  // alpha in N^{n-d}
};

// Expand p as a LogPolynomial in t_1..t_n (n variables).
LogPolynomial expand_kernel_form(const KernelFormPoly& p, const KernelBasis& kb);

// Hat lift: substitute gamma_j . t  ->  (-|gamma_j|) t_0 + gamma_j . t,
// giving an (n+1)-variable polynomial; t_0 = 0 recovers the plain expansion.
LogPolynomial hat_lift(const KernelFormPoly& p, const KernelBasis& kb);

// Forward del_0 action on x_0^{s0+1} q(log x_0, ...):
// p = (s0 + 1) q + dq/dt_0, so that del_0 [x_0^{s0+1} q] = x_0^{s0} p.
LogPolynomial del0_forward(const LogPolynomial& q, const Rat& s0);

// Unique q with del0_forward(q, s0) == p; requires s0 != -1
// (FORBIDDEN-S0). The forward round trip is asserted before returning.
LogPolynomial del0_inverse(const LogPolynomial& p, const Rat& s0);

}  // namespace gkz

#endif
