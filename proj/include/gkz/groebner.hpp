#ifndef GKZ_GROEBNER_HPP
#define GKZ_GROEBNER_HPP

#include <optional>

#include "gkz/lattice.hpp"
#include "gkz/monomial.hpp"

namespace gkz {

// {d^{g+} - d^{g-} : g in kb}; empty basis gives the zero ideal.
std::vector<Binomial> lattice_basis_ideal(const KernelBasis& kb);

// Canonical reduced Groebner basis of a pure-difference binomial ideal.
// Leading monomial stored in `plus`. Deterministic for a fixed order.
std::vector<Binomial> buchberger(std::vector<Binomial> gens,
                                 const TermOrder& ord);

// Normal form of a monomial modulo a Groebner basis (monomial rewriting).
Monomial normal_form(Monomial m, const std::vector<Binomial>& gb,
                     const TermOrder& ord);

// d^a - d^b reduces to zero mod gb?
bool reduces_to_zero(const Binomial& f, const std::vector<Binomial>& gb,
                     const TermOrder& ord);

// I : (d_0 ... d_{m-1})^inf for the lattice basis ideal of the vectors
// `lattice`, saturating one variable at a time under an order making that
// variable cheapest. Requires a positive grading; when none exists the
// computation runs in the homogenized ring and is dehomogenized.
std::vector<Binomial> saturate_toric(const std::vector<Binomial>& lattice_ideal,
                                     std::optional<TermOrder> ord_hint = {});

struct InitialIdealResult {
  std::optional<MonomialIdeal> ideal;   // set when in_w is monomial
  std::optional<Binomial> tie_witness;  // set when NOT-MONOMIAL-AT-w
  std::vector<Binomial> gb;             // reduced GB used
};

// in_w of the binomial ideal generated by gens (a GB under w + graded lex
// is computed internally). A tie in some reduced-GB element flags
// NOT-MONOMIAL-AT-w instead of producing an ideal.
InitialIdealResult initial_monomial_ideal(const std::vector<Binomial>& gens,
                                          const RatVec& w);

struct ValidatedWeight {
  RatVec w;                       // certified weight
  MonomialIdeal initial;          // in_w at the certified weight
  std::vector<Binomial> gb;       // reduced GB at the certified weight
  std::vector<RatVec> witnesses;  // two perturbed weights with equal in_w
};

struct ValidateOptions {
  // Coordinates allowed to move (empty = all). The homogenized pipeline
  // pins coordinate 0.
  std::vector<bool> mask;
  // Kernel vectors that must pair nonzero with the certified weight.
  std::vector<std::vector<long>> orient_against;
  int max_k = 40;
};

// Perturb w (deterministically) until in_w is monomial and stable under two
// independent perturbation witnesses. Throws WEIGHT-VALIDATION-FAILED after
// bounded retries.
ValidatedWeight validate_weight(const std::vector<Binomial>& gens,
                                const RatVec& w,
                                const ValidateOptions& opt = {});

// Deterministic perturbation direction #k (1-based), entries base^{-(i+1)}
// over the unmasked coordinates; bases are the primes 2,3,5,7,...
RatVec perturbation_direction(int k, int m, const std::vector<bool>& mask);

}  // namespace gkz

#endif
