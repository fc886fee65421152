#ifndef GKZ_PIPELINE_HPP
#define GKZ_PIPELINE_HPP

#include <optional>
#include <string>

#include "gkz/triangulation.hpp"

namespace gkz {

enum class Stage { Analyze, Series, Triangulate, Converge, Irregularity, Oracle };

// One externally provided series (oracle subcommand).
struct ProvidedSeries {
  RatVec v;
  std::set<int> sigma;
  std::vector<SeriesTerm> terms;
};

struct ProblemSpec {
  IntMatrix A;
  RatVec beta;
  RatVec w;
  Rat T = 0;
  std::optional<Rat> beta0;
  long K = 20;
  std::vector<RatVec> lifts;  // triangulate subcommand
  std::optional<ProvidedSeries> series;  // oracle subcommand
};

struct Check {
  std::string name;
  bool pass;
  std::string detail;
};

struct SeriesEntry {
  size_t exponent_index = 0;
  SupportKind kind = SupportKind::GenericSigma;
  TruncatedSeries series;
  TruncatedSeries homogenized;
  OracleReport oracle;
  bool roundtrip_ok = false;
  bool rho_compat_ok = false;
};

struct ConvergenceRow {
  size_t exponent_index = 0;
  Facet sigma_rho;
  ConvergenceEntry entry;
};

struct AnalysisReport {
  Stage stage = Stage::Analyze;
  ProblemSpec spec;
  int n = 0, d = 0;
  IntMatrix rhoA;
  KernelBasis kernel;          // oriented by the validated weight
  std::vector<Binomial> toric_A, toric_rho;  // saturated generators
  RatVec w_validated;
  std::vector<RatVec> cone_witnesses;
  MonomialIdeal in_A, in_rho;
  std::vector<Binomial> gb_A;
  StandardPairSet pairs_A, pairs_rho;
  int degree_A = 0, degree_rho = 0;
  MonomialIdeal tp_A;
  Triangulation tri;
  Int vol_independent = 0;
  DimensionRank dims;
  GaleDual gale;
  ExponentsResult exponents;
  GenericityReport genericity;
  std::optional<Rat> beta0;
  std::vector<SeriesEntry> series;
  std::vector<std::string> notes;
  std::vector<ConvergenceRow> convergence;
  ConvergentDimensionBounds conv_bounds;
  std::optional<IrregularityResult> irregularity;
  bool sampled_all_through_zero = false;  // non-strongly-convex regime info
  std::vector<Triangulation> lift_triangulations;  // per spec.lifts
  std::optional<OracleReport> provided_oracle;
  std::vector<Check> checks;
  double elapsed_seconds = 0.0;

  bool all_checks_pass() const;
  bool any_undecided() const;
  // 0 = pass, 1 = a check failed, 2 = undecided verdicts present
  int exit_status() const;
};

AnalysisReport run_analyze(const ProblemSpec& spec);
AnalysisReport run_subcommand(const ProblemSpec& spec, Stage stage);

}  // namespace gkz

#endif
