#ifndef GKZ_EXPONENTS_HPP
#define GKZ_EXPONENTS_HPP

#include <optional>

#include "gkz/lattice.hpp"
#include "gkz/standard_pairs.hpp"

namespace gkz {

// Solution v of A v = beta with v_i = alpha_i off sigma, tied to its pair.
struct FakeExponent {
  RatVec v;
  StandardPair pair;
  std::optional<Rat> v0;  // beta0 - |v|, filled once beta0 is fixed
  bool top = true;        // |sigma| == d (embedded pairs are flagged)
};

struct ExponentsResult {
  std::vector<FakeExponent> exponents;
  struct Skipped {
    StandardPair pair;
    std::string reason;  // NO-SOLUTION or NON-UNIQUE
  };
  std::vector<Skipped> skipped;
};

ExponentsResult fake_exponents(const StandardPairSet& S, const IntMatrix& A,
                               const RatVec& beta);

struct GenericityReport {
  bool pass = true;
  std::vector<std::string> violations;
};

// Convention-style genericity: (a) only pair-forced integer coordinates,
// (b) pairwise differences not integer vectors, (c) all exponents from
// top-dimensional pairs. The search bound is accepted for interface
// stability; the three checks are exact and need no search.
GenericityReport genericity_check(const std::vector<FakeExponent>& exps,
                                  long search_bound = 20);

// {i : v_i negative integer}, 0-based.
std::vector<int> negative_support(const RatVec& v);

enum class NsupVerdict { Minimal, NotMinimal, Undecided };

struct NsupResult {
  NsupVerdict verdict;
  std::optional<std::vector<long>> witness;  // u with nsup(v+u) strictly smaller
};

// Certified search for a kernel translate shrinking the negative support.
// MINIMAL is certified globally when every escape polyhedron is empty over
// Q, or when it is bounded and swept exhaustively; otherwise the box
// ||nu||_inf <= K applies and UNDECIDED is possible.
NsupResult minimal_negative_support(const RatVec& v, const KernelBasis& kb,
                                    long K = 20);

}  // namespace gkz

#endif
