#include "gkz/triangulation.hpp"

#include <algorithm>
#include <functional>

#include "gkz/groebner.hpp"
#include "gkz/linprog.hpp"

namespace gkz {

namespace {

std::vector<std::vector<int>> subsets_of_size(int m, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  // Lexicographic enumeration.
  std::function<void(int)> rec = [&](int start) {
    if (int(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i <= m - (k - int(cur.size())); ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

IntMatrix columns_of(const IntMatrix& m, const std::vector<int>& cols) {
  IntMatrix s(m.rows, int(cols.size()));
  for (int i = 0; i < m.rows; ++i)
    for (size_t j = 0; j < cols.size(); ++j) s.at(i, j) = m.at(i, cols[j]);
  return s;
}

}  // namespace

Int normalized_volume(const IntMatrix& rhoA, const Facet& sigma) {
  std::vector<int> cols(sigma.begin(), sigma.end());
  if (int(cols.size()) != rhoA.rows)
    throw Error("SHAPE-MISMATCH", "facet size must be d+1");
  Int dd = det(columns_of(rhoA, cols));
  if (dd == 0) throw Error("DEGENERATE-SIMPLEX", "zero determinant");
  return abs(dd);
}

Triangulation regular_triangulation(const IntMatrix& rhoA, const RatVec& lift) {
  int m = rhoA.cols, dd = rhoA.rows;
  if (int(lift.size()) != m)
    throw Error("SHAPE-MISMATCH", "lift length must match point count");
  Triangulation t;
  for (const auto& cols : subsets_of_size(m, dd)) {
    IntMatrix S = columns_of(rhoA, cols);
    if (det(S) == 0) continue;
    RatVec rhs(dd);
    for (int k = 0; k < dd; ++k) rhs[k] = lift[cols[k]];
    auto sol = solve_exact(transpose(S), rhs);
    if (sol.status != SolveStatus::Unique) continue;
    bool facet = true, tie = false;
    for (int j = 0; j < m && facet; ++j) {
      if (std::find(cols.begin(), cols.end(), j) != cols.end()) continue;
      Rat val = 0;
      for (int k = 0; k < dd; ++k) val += sol.x[k] * Rat(rhoA.at(k, j));
      if (val > lift[j]) facet = false;
      else if (val == lift[j]) tie = true;
    }
    if (!facet) continue;
    if (tie)
      throw Error("NOT-A-TRIANGULATION",
                  "lift is on a wall: non-simplicial cell detected");
    Facet f(cols.begin(), cols.end());
    t.volumes.push_back(normalized_volume(rhoA, f));
    t.facets.push_back(std::move(f));
  }
  // subsets_of_size is lexicographic, so facets arrive sorted.
  return t;
}

Int configuration_volume(const IntMatrix& rhoA) {
  int m = rhoA.cols;
  // Moment (paraboloid) lift, deterministically perturbed on ties.
  RatVec lift(m);
  for (int j = 0; j < m; ++j) {
    Rat s = 0;
    for (int i = 0; i < rhoA.rows; ++i) s += Rat(rhoA.at(i, j) * rhoA.at(i, j));
    lift[j] = s;
  }
  for (int k = 10; k <= 60; ++k) {
    try {
      RatVec cand = lift;
      if (k > 10) {
        Rat eps(Int(1), Int(1) << k);
        Int p = 2;
        for (int j = 0; j < m; ++j) {
          cand[j] += eps * Rat(Int(1), p);
          p *= 2;
        }
      }
      return regular_triangulation(rhoA, cand).total_volume();
    } catch (const Error& e) {
      if (e.code != "NOT-A-TRIANGULATION") throw;
    }
  }
  throw Error("NOT-A-TRIANGULATION", "no generic moment lift found");
}

std::vector<Facet> stanley_reisner_facets(const MonomialIdeal& in_rho) {
  MonomialIdeal rad = radical(in_rho);
  int m = in_rho.nvars;
  std::vector<std::set<int>> supports;
  for (const auto& g : rad.gens) {
    std::set<int> s;
    for (int i = 0; i < m; ++i)
      if (g[i]) s.insert(i);
    supports.push_back(std::move(s));
  }
  auto is_face = [&](const std::set<int>& sigma) {
    for (const auto& s : supports)
      if (std::includes(sigma.begin(), sigma.end(), s.begin(), s.end()))
        return false;
    return true;
  };
  // All faces over <= 2^m subsets; keep the maximal ones.
  std::vector<std::set<int>> faces;
  for (long mask = 0; mask < (1L << m); ++mask) {
    std::set<int> sigma;
    for (int i = 0; i < m; ++i)
      if (mask & (1L << i)) sigma.insert(i);
    if (is_face(sigma)) faces.push_back(std::move(sigma));
  }
  std::vector<Facet> maximal;
  for (const auto& f : faces) {
    bool inside = false;
    for (const auto& g : faces)
      if (f != g && std::includes(g.begin(), g.end(), f.begin(), f.end())) {
        inside = true;
        break;
      }
    if (!inside) maximal.push_back(f);
  }
  std::sort(maximal.begin(), maximal.end());
  return maximal;
}

DimensionRank dimension_and_rank(const Triangulation& t) {
  DimensionRank r;
  bool all_through_zero = true;
  for (size_t i = 0; i < t.facets.size(); ++i) {
    r.vol_total += t.volumes[i];
    if (t.facets[i].count(0)) r.dim_nilsson += t.volumes[i];
    else all_through_zero = false;
  }
  r.weight_achieves_volume_rank = all_through_zero && !t.facets.empty();
  return r;
}

SecondaryConeVerdict secondary_cone_classify(const GaleDual& B, const Facet& sigma,
                                             const RatVec& test) {
  int m = int(B.rows.size());
  int r = B.codim();
  SecondaryConeVerdict v;
  v.sigma = sigma;
  for (int i = 0; i < m; ++i)
    if (!sigma.count(i)) v.complement.push_back(i);
  if (int(v.complement.size()) != r)
    throw Error("SINGULAR", "complement size differs from the Gale codimension");
  if (r == 0) {
    // Zero-dimensional Gale space: K_sigma is all of R^0.
    v.cls = ConeClass::Interior;
    return v;
  }
  IntMatrix M(r, r);  // columns are b_i for i in complement
  for (int c = 0; c < r; ++c)
    for (int k = 0; k < r; ++k) {
      const Rat& x = B.rows[v.complement[c]][k];
      if (!is_integer(x))
        throw Error("INTERNAL", "gale rows expected integral");
      M.at(k, c) = x.get_num();
    }
  auto sol = solve_exact(M, test);
  if (sol.status != SolveStatus::Unique)
    throw Error("SINGULAR", "rows {b_i : i not in sigma} are dependent");
  v.lambdas = sol.x;
  bool any_zero = false, any_neg = false;
  for (const auto& l : v.lambdas) {
    if (l == 0) any_zero = true;
    if (l < 0) any_neg = true;
  }
  v.cls = any_neg ? ConeClass::Outside
                  : any_zero ? ConeClass::Boundary : ConeClass::Interior;
  return v;
}

ConvergenceEntry convergence_classify(const FakeExponent& exp_rho,
                                      const GaleDual& B, const Facet& sigma,
                                      const ConvergenceControl& ctl) {
  ConvergenceEntry e;
  int m = int(B.rows.size());
  int r = B.codim();
  RatVec minus_b0(r);
  for (int k = 0; k < r; ++k) minus_b0[k] = -B.rows[0][k];
  auto verdict = secondary_cone_classify(B, sigma, minus_b0);
  e.cone_class = verdict.cls;
  if (verdict.cls == ConeClass::Interior) {
    e.verdict = ConvergenceVerdict::Convergent;
    e.evidence = "-b0 interior to K_sigma";
    return e;
  }
  if (verdict.cls == ConeClass::Outside) {
    e.verdict = ConvergenceVerdict::Divergent;
    e.evidence = "-b0 outside K_sigma";
    return e;
  }
  // Boundary: exact |u| test on Q = {nu : nu.b_i >= -v_i (i not in sigma),
  // -b0.nu <= -1}; the series diverges iff Q holds infinitely many integer
  // points.
  LinSystem sys;
  for (int i = 0; i < m; ++i) {
    if (sigma.count(i)) continue;
    LinCon c;
    c.a = B.rows[i];
    c.rhs = -exp_rho.v[i];
    sys.push_back(std::move(c));
  }
  {
    LinCon c;  // -(-b0).nu >= 1  <=>  -b0.nu <= -1
    c.a.resize(r);
    for (int k = 0; k < r; ++k) c.a[k] = -minus_b0[k];
    c.rhs = 1;
    sys.push_back(std::move(c));
  }
  FourierMotzkin fm(r);
  if (!fm.feasible_point(sys)) {
    e.verdict = ConvergenceVerdict::Convergent;
    e.evidence = "negative-sum polyhedron empty over Q";
    return e;
  }
  auto rays = recession_rays(sys, r);
  if (rays.empty()) {
    // Bounded Q: finitely many negative-sum terms regardless of integer
    // points, which is convergence by the exact |u| criterion.
    e.verdict = ConvergenceVerdict::Convergent;
    e.evidence = "negative-sum polyhedron bounded (finitely many |u| < 0)";
    return e;
  }
  // Unbounded: search vertex box inflated along the recession directions.
  LinSystem boxed = sys;
  bool have_box = true;
  std::vector<Rat> lo(r), hi(r);
  for (int j = 0; j < r && have_box; ++j) {
    auto iv = fm.project_interval(sys, j);
    if (iv.empty) { have_box = false; break; }
    lo[j] = iv.lo ? *iv.lo : Rat(0);
    hi[j] = iv.hi ? *iv.hi : Rat(0);
    if (!iv.lo) lo[j] = -Rat(ctl.inflation_steps);
    if (!iv.hi) hi[j] = Rat(ctl.inflation_steps);
  }
  std::vector<long> ray_sum(r, 0);
  for (const auto& ray : rays)
    for (int j = 0; j < r; ++j) ray_sum[j] += ray[j];
  for (int j = 0; j < r; ++j) {
    Rat shift = Rat(ctl.inflation_steps) * Rat(ray_sum[j]);
    Rat L = lo[j] + (shift < 0 ? shift : Rat(0));
    Rat H = hi[j] + (shift > 0 ? shift : Rat(0));
    LinCon ge, le;
    ge.a.assign(r, Rat(0));
    ge.a[j] = 1;
    ge.rhs = L;
    le.a.assign(r, Rat(0));
    le.a[j] = -1;
    le.rhs = -H;
    boxed.push_back(ge);
    boxed.push_back(le);
  }
  auto pts = integer_points(boxed, r);
  if (!pts.empty()) {
    e.verdict = ConvergenceVerdict::Divergent;
    e.witness_point = pts.front();
    e.witness_ray = rays.front();
    e.evidence = "integer point with |u| < 0 plus nonzero recession ray";
    return e;
  }
  e.verdict = ConvergenceVerdict::Undecided;
  e.evidence = "unbounded negative-sum polyhedron, no integer point in box";
  return e;
}

ConvergentDimensionBounds convergent_dimension_bounds(const Triangulation& t,
                                                      const IntMatrix& rhoA,
                                                      const GaleDual& B) {
  ConvergentDimensionBounds out;
  int r = B.codim();
  RatVec minus_b0(r);
  for (int k = 0; k < r; ++k) minus_b0[k] = -B.rows[0][k];
  for (size_t i = 0; i < t.facets.size(); ++i) {
    if (!t.facets[i].count(0)) continue;
    auto v = secondary_cone_classify(B, t.facets[i], minus_b0);
    if (v.cls == ConeClass::Interior) out.lower += t.volumes[i];
    if (v.cls != ConeClass::Outside) out.upper += t.volumes[i];
  }
  return out;
}

RatVec perturbation_weight(const std::vector<Binomial>& toric_gens,
                           const RatVec& base) {
  int n = int(base.size());
  for (int j = 1; j <= 3; ++j) {
    RatVec d = perturbation_direction(j, n, {});
    for (int k = 10; k <= 36; ++k) {
      Rat eps(Int(1), Int(1) << k);
      auto in_at = [&](const Rat& scale) -> std::optional<MonomialIdeal> {
        RatVec w(n);
        for (int i = 0; i < n; ++i) w[i] = base[i] + scale * d[i];
        auto r = initial_monomial_ideal(toric_gens, w);
        return r.ideal;
      };
      auto i0 = in_at(eps);
      if (!i0) continue;
      auto i1 = in_at(eps / 2);
      auto i2 = in_at(eps / 4);
      if (i1 && i2 && *i0 == *i1 && *i0 == *i2) {
        RatVec w(n);
        for (int i = 0; i < n; ++i) w[i] = base[i] + eps * d[i];
        return w;
      }
    }
  }
  throw Error("WEIGHT-VALIDATION-FAILED",
              "exhausted retries perturbing the base weight");
}

std::vector<Triangulation> sample_perturbation_triangulations(
    const IntMatrix& rhoA, const RatVec& base_w) {
  int n = rhoA.cols - 1;
  std::vector<Triangulation> found;
  auto consider = [&](const RatVec& w) {
    RatVec lift(n + 1, Rat(0));
    for (int i = 0; i < n; ++i) lift[i + 1] = w[i];
    for (int k = 0; k < 8; ++k) {
      try {
        auto t = regular_triangulation(rhoA, lift);
        if (std::find(found.begin(), found.end(), t) == found.end())
          found.push_back(std::move(t));
        return;
      } catch (const Error& e) {
        if (e.code != "NOT-A-TRIANGULATION") throw;
        Rat eps(Int(1), Int(1) << (24 + 4 * k));
        Int p = 2;
        for (int i = 1; i <= n; ++i) {
          lift[i] += eps * Rat(Int(1), p);
          p *= 2;
        }
      }
    }
  };
  // Deterministic sample: all sign patterns of a graded direction.
  for (long mask = 0; mask < (1L << n); ++mask) {
    RatVec w = base_w;
    Rat eps(Int(1), Int(1) << 10);
    Int p = 2;
    for (int i = 0; i < n; ++i) {
      Rat delta = eps * Rat(Int(1), p);
      w[i] += (mask & (1L << i)) ? delta : -delta;
      p *= 2;
    }
    consider(w);
  }
  return found;
}

std::optional<RatVec> find_lift_for_triangulation(const IntMatrix& rhoA,
                                                  const GaleDual& B,
                                                  const Triangulation& target) {
  int m = rhoA.cols;
  int r = B.codim();
  // Want y in R^m with, for every facet sigma: y.B = sum_{i not in sigma}
  // lambda_i b_i with lambda_i > 0. lambda is linear in y.B, via the
  // inverse of the complement matrix.
  FourierMotzkin fm(m);
  LinSystem sys;
  for (const auto& sigma : target.facets) {
    std::vector<int> comp;
    for (int i = 0; i < m; ++i)
      if (!sigma.count(i)) comp.push_back(i);
    if (int(comp.size()) != r) return std::nullopt;
    IntMatrix M(r, r);
    for (int c = 0; c < r; ++c)
      for (int k = 0; k < r; ++k) M.at(k, c) = B.rows[comp[c]][k].get_num();
    // lambda = M^{-1} (y.B)^T; demand each component >= 1.
    // Solve row by row: lambda_c = e_c^T M^{-1} yB. Compute M^{-1} columns.
    RatMatrix Minv(r, r);
    for (int c = 0; c < r; ++c) {
      RatVec e(r, Rat(0));
      e[c] = 1;
      auto sol = solve_exact(M, e);
      if (sol.status != SolveStatus::Unique) return std::nullopt;
      for (int k = 0; k < r; ++k) Minv.at(k, c) = sol.x[k];
    }
    for (int c = 0; c < r; ++c) {
      LinCon con;  // sum_j y_j * (B_j . Minv_row_c) >= 1
      con.a.assign(m, Rat(0));
      for (int j = 0; j < m; ++j) {
        Rat acc = 0;
        for (int k = 0; k < r; ++k) acc += Minv.at(c, k) * B.rows[j][k];
        con.a[j] = acc;
      }
      con.rhs = 1;
      sys.push_back(std::move(con));
    }
  }
  auto y = fm.feasible_point(sys);
  if (!y) return std::nullopt;
  // The secondary cone is invariant under adding row-span shifts; verify
  // directly and perturb on ties.
  for (int k = 0; k < 8; ++k) {
    try {
      auto t = regular_triangulation(rhoA, *y);
      if (t == target) return y;
      return std::nullopt;
    } catch (const Error& e) {
      if (e.code != "NOT-A-TRIANGULATION") throw;
      Rat eps(Int(1), Int(1) << (30 + 4 * k));
      Int p = 2;
      for (int j = 0; j < m; ++j) {
        (*y)[j] += eps * Rat(Int(1), p);
        p *= 2;
      }
    }
  }
  return std::nullopt;
}

IrregularityResult irregularity_certificate(const IntMatrix& A) {
  IrregularityResult res;
  if (ones_in_rowspan(A)) {
    res.kind = IrregularityKind::Homogeneous;
    return res;
  }
  auto h = strong_convexity_certificate(A);
  if (!h) {
    res.kind = IrregularityKind::NotStronglyConvex;
    return res;
  }
  int n = A.cols, d = A.rows;
  IntMatrix rhoA = homogenize_matrix(A);
  auto kb = kernel_basis(A);
  GaleDual B = gale_dual(rhoA, kb);
  int r = B.codim();

  // h . a_i for each column.
  RatVec ha(n);
  Rat ha_min;
  for (int i = 0; i < n; ++i) {
    Rat acc = 0;
    for (int k = 0; k < d; ++k) acc += (*h)[k] * Rat(A.at(k, i));
    ha[i] = acc;
    if (i == 0 || acc < ha_min) ha_min = acc;
  }

  // sigma subset of {1..n} (as 0-based column indices) of size d+1 with
  // {b_i : i not in sigma} independent; b_0 is always in the complement.
  for (const auto& cols : subsets_of_size(n, d + 1)) {
    Facet sigma;  // homogenized indices
    for (int c : cols) sigma.insert(c + 1);
    std::vector<int> comp;
    for (int i = 0; i <= n; ++i)
      if (!sigma.count(i)) comp.push_back(i);
    IntMatrix M(r, r);
    bool ok = int(comp.size()) == r;
    if (!ok) continue;
    for (int c = 0; c < r; ++c)
      for (int k = 0; k < r; ++k) M.at(k, c) = B.rows[comp[c]][k].get_num();
    if (det(M) == 0) continue;

    // w_i = h.a_i - lambda0 (i in sigma), + lambda_i off sigma, all > 0.
    for (int attempt = 0; attempt < 12; ++attempt) {
      Rat lambda0 = ha_min / Rat(2 + attempt);
      RatVec w(n);
      Int p = 2;
      for (int i = 0; i < n; ++i) {
        w[i] = ha[i] - lambda0;
        if (!sigma.count(i + 1)) {
          // positive lambda_i, slightly distinct per coordinate
          Rat li = lambda0 * (Rat(1) + Rat(Int(1), p * (attempt + 1)));
          w[i] += li;
        }
        p *= 2;
      }
      bool positive = true;
      for (const auto& x : w)
        if (!(x > 0)) positive = false;
      if (!positive) continue;
      RatVec lift(n + 1, Rat(0));
      for (int i = 0; i < n; ++i) lift[i + 1] = w[i];
      try {
        auto t = regular_triangulation(rhoA, lift);
        if (std::find(t.facets.begin(), t.facets.end(), sigma) ==
            t.facets.end())
          continue;
        auto dr = dimension_and_rank(t);
        if (dr.dim_nilsson >= dr.vol_total) continue;
        res.kind = IrregularityKind::Certificate;
        res.w = w;
        res.sigma = sigma;
        res.dim_nilsson = dr.dim_nilsson;
        res.vol_total = dr.vol_total;
        return res;
      } catch (const Error& e) {
        if (e.code != "NOT-A-TRIANGULATION") throw;
        continue;
      }
    }
  }
  throw Error("INTERNAL", "no irregularity certificate found despite "
                          "strong convexity and inhomogeneity");
}

}  // namespace gkz
