#include "gkz/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "gkz/groebner.hpp"
#include "gkz/linprog.hpp"

namespace gkz {

namespace {

std::string facet_str(const Facet& f) {
  std::string s = "{";
  for (int i : f) s += (s.size() > 1 ? "," : "") + std::to_string(i);
  return s + "}";
}

KernelBasis lift_kernel(const KernelBasis& kb) {
  KernelBasis out;
  out.n = kb.n + 1;
  for (const auto& g : kb.vectors) {
    std::vector<long> h(kb.n + 1);
    h[0] = -coord_sum(g);
    for (int i = 0; i < kb.n; ++i) h[i + 1] = g[i];
    out.vectors.push_back(std::move(h));
  }
  return out;
}

bool series_equal(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.terms.size() != b.terms.size()) return false;
  for (size_t i = 0; i < a.terms.size(); ++i)
    if (a.terms[i].u != b.terms[i].u || a.terms[i].coeff != b.terms[i].coeff)
      return false;
  return a.exponent.v == b.exponent.v;
}

}  // namespace

bool AnalysisReport::all_checks_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

bool AnalysisReport::any_undecided() const {
  for (const auto& r : convergence)
    if (r.entry.verdict == ConvergenceVerdict::Undecided) return true;
  for (const auto& n : notes)
    if (n.find("UNDECIDED") != std::string::npos) return true;
  return false;
}

int AnalysisReport::exit_status() const {
  if (!all_checks_pass()) return 1;
  if (any_undecided()) return 2;
  return 0;
}

AnalysisReport run_subcommand(const ProblemSpec& spec, Stage stage) {
  auto t0 = std::chrono::steady_clock::now();
  AnalysisReport rep;
  rep.stage = stage;
  rep.spec = spec;
  const IntMatrix& A = spec.A;
  rep.n = A.cols;
  rep.d = A.rows;
  int n = rep.n, d = rep.d;

  auto check = [&](const std::string& name, bool ok, const std::string& detail = "") {
    rep.checks.push_back({name, ok, detail});
  };

  if (int(spec.beta.size()) != d)
    throw Error("SHAPE-MISMATCH", "beta length must equal d");
  if (int(spec.w.size()) != n)
    throw Error("SHAPE-MISMATCH", "weight length must equal n");
  require_configuration(A);
  rep.rhoA = homogenize_matrix(A);

  // Irregularity subcommand needs no weight machinery.
  if (stage == Stage::Irregularity || stage == Stage::Analyze) {
    rep.irregularity = irregularity_certificate(A);
    if (rep.irregularity->kind == IrregularityKind::NotStronglyConvex) {
      auto sampled = sample_perturbation_triangulations(rep.rhoA,
                                                        RatVec(n, Rat(1)));
      bool all_zero = !sampled.empty();
      for (const auto& t : sampled)
        for (const auto& f : t.facets)
          if (!f.count(0)) all_zero = false;
      rep.sampled_all_through_zero = all_zero;
      check("not-strongly-convex: sampled positive weights keep 0 in every facet",
            all_zero);
    }
    if (rep.irregularity->kind == IrregularityKind::Certificate) {
      check("irregularity certificate has dim < vol",
            rep.irregularity->dim_nilsson < rep.irregularity->vol_total);
      check("irregularity certificate facet avoids 0",
            !rep.irregularity->sigma.count(0));
    }
    if (stage == Stage::Irregularity) {
      rep.elapsed_seconds =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
              .count();
      return rep;
    }
  }

  // Kernel and toric ideals.
  KernelBasis kb_raw = kernel_basis(A);
  rep.toric_A = saturate_toric(lattice_basis_ideal(kb_raw));
  KernelBasis kb_rho_raw = lift_kernel(kb_raw);
  rep.toric_rho = saturate_toric(lattice_basis_ideal(kb_rho_raw));

  // Weight normalization (Remark-2.5 shift when some coordinate <= 0).
  RatVec w_in = spec.w;
  bool nonpositive = false;
  for (const auto& x : w_in)
    if (!(x > 0)) nonpositive = true;
  if (nonpositive) {
    auto h = strong_convexity_certificate(A);
    if (!h)
      throw Error("WEIGHT-NOT-POSITIVE",
                  "weight has non-positive entries and the cone over the "
                  "columns is not strongly convex");
    RatVec ha(n);
    Rat worst = 0;
    for (int i = 0; i < n; ++i) {
      Rat acc = 0;
      for (int k = 0; k < d; ++k) acc += (*h)[k] * Rat(A.at(k, i));
      ha[i] = acc;
      Rat need = (Rat(1) - w_in[i]) / acc;  // acc > 0
      if (need > worst) worst = need;
    }
    for (int i = 0; i < n; ++i) w_in[i] += worst * ha[i];
    rep.notes.push_back("weight shifted by a positive multiple of h.A to "
                        "reach the positive orthant");
  }

  // Validate (0,w) against I_rho(A) first (coordinate 0 pinned), then the
  // projection against I_A.
  ValidateOptions vo_rho;
  vo_rho.mask.assign(n + 1, true);
  vo_rho.mask[0] = false;
  vo_rho.orient_against = kb_rho_raw.vectors;
  RatVec w0(n + 1, Rat(0));
  for (int i = 0; i < n; ++i) w0[i + 1] = w_in[i];
  auto val_rho = validate_weight(rep.toric_rho, w0, vo_rho);
  RatVec w_star(n);
  for (int i = 0; i < n; ++i) w_star[i] = val_rho.w[i + 1];

  ValidateOptions vo_A;
  vo_A.orient_against = kb_raw.vectors;
  auto val_A = validate_weight(rep.toric_A, w_star, vo_A);
  check("validated weight is shared by both rings", val_A.w == w_star,
        "in_w(I_A) computed at the rho-validated weight");
  rep.w_validated = w_star;
  rep.cone_witnesses = val_rho.witnesses;
  rep.in_A = val_A.initial;
  rep.in_rho = val_rho.initial;
  rep.gb_A = val_A.gb;

  // Dehomogenization cross-check (primary-decomposition shadow).
  check("dehomogenized in_(0,w)(I_rho(A)) equals in_w(I_A)",
        dehomogenize_ideal(rep.in_rho) == rep.in_A);

  rep.kernel = orient_kernel(kb_raw, w_star);
  rep.gale = gale_dual(rep.rhoA, rep.kernel);
  {
    // -b0 = sum b_i, exact.
    bool ok = true;
    for (int k = 0; k < rep.gale.codim(); ++k) {
      Rat s = 0;
      for (int i = 1; i <= n; ++i) s += rep.gale.rows[i][k];
      if (s != -rep.gale.rows[0][k]) ok = false;
    }
    check("gale dual satisfies -b0 = sum of b_i", ok);
  }

  // Standard pairs.
  rep.pairs_A = standard_pairs(rep.in_A, n);
  rep.pairs_rho = standard_pairs(rep.in_rho, n + 1);
  auto top_A = top_standard_pairs(rep.pairs_A, d);
  auto top_rho = top_standard_pairs(rep.pairs_rho, d + 1);
  rep.degree_A = top_A.degree;
  rep.degree_rho = top_rho.degree;
  rep.tp_A = tp_ideal(top_A.pairs);
  auto through_zero = pairs_through_zero(top_rho.pairs);
  check("#top pairs through zero equals #top pairs of in_w(I_A)",
        int(through_zero.pairs.size()) == top_A.degree);

  // Triangulation at the validated weight.
  RatVec lift(n + 1, Rat(0));
  for (int i = 0; i < n; ++i) lift[i + 1] = w_star[i];
  rep.tri = regular_triangulation(rep.rhoA, lift);
  {
    auto sr = stanley_reisner_facets(rep.in_rho);
    check("Stanley-Reisner facets match the regular triangulation",
          sr == rep.tri.facets);
  }
  rep.vol_independent = configuration_volume(rep.rhoA);
  rep.dims = dimension_and_rank(rep.tri);
  check("sum of facet volumes equals vol(rho(A))",
        rep.dims.vol_total == rep.vol_independent);
  check("degree of in_(0,w)(I_rho(A)) equals vol(rho(A))",
        Int(rep.degree_rho) == rep.vol_independent);
  {
    // dim = #top pairs through zero (counted with the volume identity).
    Int vol_zero = 0;
    for (size_t i = 0; i < rep.tri.facets.size(); ++i)
      if (rep.tri.facets[i].count(0)) vol_zero += rep.tri.volumes[i];
    check("volume through zero equals #top pairs through zero",
          vol_zero == Int(through_zero.pairs.size()));
  }

  if (stage == Stage::Triangulate) {
    for (const auto& l : spec.lifts)
      rep.lift_triangulations.push_back(regular_triangulation(rep.rhoA, l));
    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return rep;
  }

  // Exponents + genericity.
  rep.exponents = fake_exponents(rep.pairs_A, A, spec.beta);
  rep.genericity = genericity_check(rep.exponents.exponents, spec.K);
  if (rep.genericity.pass)
    check("dim N_w equals exponent count (generic beta)",
          rep.dims.dim_nilsson == Int(rep.exponents.exponents.size()));

  rep.beta0 = homogenizing_value(rep.exponents.exponents, spec.beta0);

  if (stage == Stage::Oracle) {
    if (!spec.series)
      throw Error("SHAPE-MISMATCH", "oracle subcommand requires a series");
    TruncatedSeries s;
    s.exponent.v = spec.series->v;
    s.exponent.pair.sigma = spec.series->sigma;
    s.exponent.pair.alpha.assign(n, 0);
    for (int i = 0; i < n; ++i)
      if (!spec.series->sigma.count(i)) {
        if (!is_integer(spec.series->v[i]) || spec.series->v[i] < 0)
          throw Error("BAD-SERIES",
                      "off-sigma exponent coordinates must be in N");
        s.exponent.pair.alpha[i] = int(spec.series->v[i].get_num().get_si());
      }
    s.weight = w_star;
    s.bound = spec.T;
    s.terms = spec.series->terms;
    rep.provided_oracle =
        annihilation_oracle(s, rep.gb_A, A, spec.beta);
    check("provided series passes the annihilation oracle",
          rep.provided_oracle->pass());
    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return rep;
  }

  // Series construction.
  for (size_t k = 0; k < rep.exponents.exponents.size(); ++k) {
    const auto& e = rep.exponents.exponents[k];
    SupportKind kind;
    if (rep.genericity.pass && e.top) {
      kind = SupportKind::GenericSigma;
    } else {
      auto nr = minimal_negative_support(e.v, rep.kernel, spec.K);
      if (nr.verdict == NsupVerdict::NotMinimal) {
        rep.notes.push_back("exponent " + std::to_string(k) +
                            " skipped: negative support not minimal");
        continue;
      }
      if (nr.verdict == NsupVerdict::Undecided) {
        rep.notes.push_back("exponent " + std::to_string(k) +
                            " skipped: minimal negative support UNDECIDED");
        continue;
      }
      kind = SupportKind::MinimalNegativeNv;
    }
    SeriesEntry entry;
    entry.exponent_index = k;
    entry.kind = kind;
    entry.series = build_series(e, kind, rep.kernel, w_star, spec.T);
    entry.oracle = annihilation_oracle(entry.series, rep.gb_A, A, spec.beta);
    check("series " + std::to_string(k) + " passes the annihilation oracle",
          entry.oracle.pass());
    entry.homogenized = homogenize_series(entry.series, *rep.beta0);
    entry.roundtrip_ok =
        series_equal(dehomogenize_series(entry.homogenized), entry.series);
    check("series " + std::to_string(k) + " rho round trip", entry.roundtrip_ok);
    {
      // Direct construction over rho(A) must agree term by term.
      KernelBasis kb_rho = orient_kernel(lift_kernel(rep.kernel), val_rho.w);
      auto direct = build_series(entry.homogenized.exponent, kind, kb_rho,
                                 entry.homogenized.weight, spec.T);
      entry.rho_compat_ok = series_equal(direct, entry.homogenized);
      check("series " + std::to_string(k) + " rho-compatibility",
            entry.rho_compat_ok);
    }
    rep.series.push_back(std::move(entry));
  }
  {
    // Initial-term law and pairwise-distinct initial exponents.
    bool init_ok = true;
    for (const auto& se : rep.series)
      if (se.series.terms.empty() || se.series.terms[0].coeff != 1)
        init_ok = false;
    check("every series starts with coefficient 1 at u = 0", init_ok);
    bool distinct = true;
    for (size_t a = 0; a < rep.series.size(); ++a)
      for (size_t b = a + 1; b < rep.series.size(); ++b)
        if (rep.exponents.exponents[rep.series[a].exponent_index].v ==
            rep.exponents.exponents[rep.series[b].exponent_index].v)
          distinct = false;
    check("series initial exponents pairwise distinct", distinct);
  }

  if (stage == Stage::Series) {
    rep.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    return rep;
  }

  // Convergence classification per series exponent (through-zero pairs).
  for (const auto& se : rep.series) {
    ConvergenceRow row;
    row.exponent_index = se.exponent_index;
    row.sigma_rho = se.homogenized.exponent.pair.sigma.empty()
                        ? Facet{}
                        : Facet(se.homogenized.exponent.pair.sigma.begin(),
                                se.homogenized.exponent.pair.sigma.end());
    ConvergenceControl ctl;
    ctl.inflation_steps = spec.K;
    row.entry = convergence_classify(se.homogenized.exponent, rep.gale,
                                     row.sigma_rho, ctl);
    rep.convergence.push_back(std::move(row));
  }
  {
    bool sound = true;
    for (const auto& r : rep.convergence) {
      if (r.entry.cone_class == ConeClass::Interior &&
          r.entry.verdict == ConvergenceVerdict::Divergent)
        sound = false;
      if (r.entry.cone_class == ConeClass::Outside &&
          r.entry.verdict == ConvergenceVerdict::Convergent)
        sound = false;
    }
    check("cone classes never contradict convergence verdicts", sound);
  }
  rep.conv_bounds = convergent_dimension_bounds(rep.tri, rep.rhoA, rep.gale);
  {
    Int convergent_vol = 0;
    bool exact = true;
    for (const auto& r : rep.convergence) {
      if (r.entry.verdict == ConvergenceVerdict::Convergent) convergent_vol += 1;
      if (r.entry.verdict == ConvergenceVerdict::Undecided) exact = false;
    }
    if (exact && rep.genericity.pass)
      check("convergent count within the secondary-fan bounds",
            rep.conv_bounds.lower <= convergent_vol &&
                convergent_vol <= rep.conv_bounds.upper);
  }

  rep.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return rep;
}

AnalysisReport run_analyze(const ProblemSpec& spec) {
  return run_subcommand(spec, Stage::Analyze);
}

}  // namespace gkz
