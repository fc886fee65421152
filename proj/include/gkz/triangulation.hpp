#ifndef GKZ_TRIANGULATION_HPP
#define GKZ_TRIANGULATION_HPP

#include <optional>
#include <set>

#include "gkz/lattice.hpp"
#include "gkz/monomial.hpp"
#include "gkz/series.hpp"

namespace gkz {

using Facet = std::set<int>;

struct Triangulation {
  std::vector<Facet> facets;    // sorted
  std::vector<Int> volumes;     // parallel to facets
  Int total_volume() const {
    Int s = 0;
    for (const auto& v : volumes) s += v;
    return s;
  }
  bool operator==(const Triangulation& o) const { return facets == o.facets; }
};

// Normalized volume |det| of the simplex on the columns sigma of rhoA.
// Throws DEGENERATE-SIMPLEX on zero determinant.
Int normalized_volume(const IntMatrix& rhoA, const Facet& sigma);

// Regular triangulation of the columns of rhoA from a lift vector: sigma is
// a facet iff the unique c with c.col_i = lift_i on sigma has strict slack
// off sigma. Ties raise NOT-A-TRIANGULATION.
Triangulation regular_triangulation(const IntMatrix& rhoA, const RatVec& lift);

// Total normalized volume of conv(columns), via a deterministically
// perturbed moment lift (independent of any input weight).
Int configuration_volume(const IntMatrix& rhoA);

// Maximal simplices read off the radical of in_{(0,w)}(I_rho(A)):
// sigma is a face iff no generator's support is contained in sigma.
std::vector<Facet> stanley_reisner_facets(const MonomialIdeal& in_rho);

struct DimensionRank {
  Int dim_nilsson = 0;    // sum of volumes of facets through 0
  Int vol_total = 0;      // vol(rho(A)) = vol(A)
  bool weight_achieves_volume_rank = false;  // every facet contains 0
};
DimensionRank dimension_and_rank(const Triangulation& t);

enum class ConeClass { Interior, Boundary, Outside };

struct SecondaryConeVerdict {
  Facet sigma;
  RatVec lambdas;  // coefficients on {b_i : i not in sigma}, in index order
  std::vector<int> complement;  // the i's, ascending
  ConeClass cls;
};

// Solve testVector = sum_{i not in sigma} lambda_i b_i; SINGULAR when the
// complement rows are dependent (sigma not a facet).
SecondaryConeVerdict secondary_cone_classify(const GaleDual& B, const Facet& sigma,
                                             const RatVec& test);

enum class ConvergenceVerdict { Convergent, Divergent, Undecided };

struct ConvergenceEntry {
  ConeClass cone_class;
  ConvergenceVerdict verdict;
  std::string evidence;
  std::optional<std::vector<long>> witness_point;  // nu with -b0.nu <= -1
  std::optional<std::vector<long>> witness_ray;    // recession direction
};

struct ConvergenceControl {
  long inflation_steps = 20;
};

// Thm-style classification for an exponent over rho(A) whose pair passes
// through zero. sigma is the pair's face (including 0).
ConvergenceEntry convergence_classify(const FakeExponent& exp_rho,
                                      const GaleDual& B, const Facet& sigma,
                                      const ConvergenceControl& ctl = {});

struct ConvergentDimensionBounds {
  Int lower = 0, upper = 0;
};
ConvergentDimensionBounds convergent_dimension_bounds(const Triangulation& t,
                                                      const IntMatrix& rhoA,
                                                      const GaleDual& B);

enum class IrregularityKind { Homogeneous, Certificate, NotStronglyConvex };

struct IrregularityResult {
  IrregularityKind kind;
  RatVec w;              // certificate weight (original ring)
  Facet sigma;           // facet avoiding 0 in Delta_(0,w)
  Int dim_nilsson = 0;   // at the certificate weight
  Int vol_total = 0;
};

IrregularityResult irregularity_certificate(const IntMatrix& A);

// w = base + eps * delta with shrinking eps until in_w(I_A) is monomial and
// stable as eps -> eps/2 twice.
RatVec perturbation_weight(const std::vector<Binomial>& toric_gens,
                           const RatVec& base);

// Distinct triangulations of rhoA over a deterministic sample of
// perturbations (0, base + eps*delta) of the all-ones base.
std::vector<Triangulation> sample_perturbation_triangulations(
    const IntMatrix& rhoA, const RatVec& base_w);

// A lift (w_0..w_n) whose regular triangulation equals `target`, found by
// exact feasibility on the secondary cone; nullopt if the cone is empty.
std::optional<RatVec> find_lift_for_triangulation(const IntMatrix& rhoA,
                                                  const GaleDual& B,
                                                  const Triangulation& target);

}  // namespace gkz

#endif
