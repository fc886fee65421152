#ifndef GKZ_LINPROG_HPP
#define GKZ_LINPROG_HPP

#include <optional>
#include <vector>

#include "gkz/matrix.hpp"

namespace gkz {

// One linear condition  a . x >= rhs  (or > rhs when strict).
struct LinCon {
  RatVec a;
  Rat rhs;
  bool strict = false;
};

using LinSystem = std::vector<LinCon>;

// Exact Fourier-Motzkin elimination over Q with strictness tracking.
// Intended for small variable counts (<= 8 or so).
class FourierMotzkin {
 public:
  explicit FourierMotzkin(int nvars) : nvars_(nvars) {}

  // Feasibility; returns a rational point when feasible.
  std::optional<RatVec> feasible_point(const LinSystem& sys) const;

  // Exact projection of the solution set onto coordinate j:
  // [lo, hi] with open endpoints tracked; nullopt endpoint = unbounded.
  struct Interval {
    std::optional<Rat> lo, hi;
    bool lo_strict = false, hi_strict = false;
    bool empty = false;
  };
  Interval project_interval(const LinSystem& sys, int j) const;

  int nvars() const { return nvars_; }

 private:
  int nvars_;
};

// h with h.A coordinatewise positive, when the cone over the columns of A
// is strongly convex; nullopt otherwise.
std::optional<RatVec> strong_convexity_certificate(const IntMatrix& A);

// Gordan dual feasibility: nonzero y >= 0 with A y = 0 (normalized sum 1).
// Exactly one of this and strong_convexity_certificate succeeds.
bool zero_in_positive_hull(const IntMatrix& A);

// A coordinatewise positive integer grading g with g . (plus - minus) = 0
// for all given lattice vectors, if one exists.
std::optional<std::vector<long>> positive_grading(
    const std::vector<std::vector<long>>& lattice_vectors, int n);

// All integer points of { x : sys }, enumerated exactly via per-coordinate
// FM bounds. Throws UNBOUNDED-SLICE when some coordinate is unbounded.
std::vector<std::vector<long>> integer_points(const LinSystem& sys, int nvars);

// Primitive integer generators of the recession cone {x : a_i . x >= 0}.
// Exact ray enumeration via (nvars-1)-subsets of tight constraints.
std::vector<std::vector<long>> recession_rays(const LinSystem& sys, int nvars);

}  // namespace gkz

#endif
