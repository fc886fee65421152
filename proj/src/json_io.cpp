#include "gkz/json_io.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace gkz {

using json = nlohmann::ordered_json;

namespace {

std::string facet_str(const Facet& f) {
  std::string s = "{";
  for (int i : f) s += (s.size() > 1 ? "," : "") + std::to_string(i);
  return s + "}";
}

Rat rat_from_json(const json& j, const std::string& where) {
  try {
    if (j.is_number_integer()) return Rat(long(j.get<long long>()), 1L);
    if (j.is_string()) return parse_rat(j.get<std::string>());
  } catch (const Error&) {
    throw Error("BAD-RATIONAL", "field " + where + ": '" + j.dump() + "'");
  }
  throw Error("BAD-RATIONAL",
              "field " + where + ": expected integer or \"p/q\" string");
}

RatVec rat_vec_from_json(const json& j, const std::string& where) {
  if (!j.is_array())
    throw Error("SHAPE-MISMATCH", "field " + where + " must be an array");
  RatVec v;
  for (const auto& x : j) v.push_back(rat_from_json(x, where));
  return v;
}

json rat_vec_to_json(const RatVec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(rat_str(x));
  return a;
}

json long_vec_to_json(const std::vector<long>& v) {
  json a = json::array();
  for (long x : v) a.push_back(x);
  return a;
}

json facet_to_json(const Facet& f) {
  json a = json::array();
  for (int i : f) a.push_back(i);
  return a;
}

json monomial_ideal_to_json(const MonomialIdeal& I, int index_base) {
  json gens = json::array();
  for (const auto& g : I.gens) {
    json one;
    one["exp"] = json::array();
    for (int e : g) one["exp"].push_back(e);
    one["text"] = mono_str(g, index_base);
    gens.push_back(std::move(one));
  }
  return gens;
}

json binomials_to_json(const std::vector<Binomial>& bs, int index_base) {
  json out = json::array();
  for (const auto& b : bs)
    out.push_back(mono_str(b.plus, index_base) + " - " +
                  mono_str(b.minus, index_base));
  return out;
}

json triangulation_to_json(const Triangulation& t) {
  json out;
  out["facets"] = json::array();
  out["volumes"] = json::array();
  for (size_t i = 0; i < t.facets.size(); ++i) {
    out["facets"].push_back(facet_to_json(t.facets[i]));
    out["volumes"].push_back(t.volumes[i].get_str());
  }
  out["total_volume"] = t.total_volume().get_str();
  return out;
}

const char* verdict_str(ConvergenceVerdict v) {
  switch (v) {
    case ConvergenceVerdict::Convergent: return "CONVERGENT";
    case ConvergenceVerdict::Divergent: return "DIVERGENT";
    default: return "UNDECIDED";
  }
}

const char* cone_str(ConeClass c) {
  switch (c) {
    case ConeClass::Interior: return "INTERIOR";
    case ConeClass::Boundary: return "BOUNDARY";
    default: return "OUTSIDE";
  }
}

json series_to_json(const TruncatedSeries& s, int index_base) {
  json out;
  out["exponent"] = rat_vec_to_json(s.exponent.v);
  out["sigma"] = facet_to_json(Facet(s.exponent.pair.sigma.begin(),
                                     s.exponent.pair.sigma.end()));
  out["kind"] = s.kind == SupportKind::GenericSigma ? "generic-sigma"
                                                    : "minimal-negative-Nv";
  out["terms"] = json::array();
  for (const auto& t : s.terms) {
    json jt;
    jt["u"] = long_vec_to_json(t.u);
    jt["coeff"] = rat_str(t.coeff);
    out["terms"].push_back(std::move(jt));
  }
  (void)index_base;
  return out;
}

}  // namespace

ProblemSpec parse_problem(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error("BAD-INPUT", std::string("JSON parse failure: ") + e.what());
  }
  ProblemSpec spec;
  if (!j.contains("A") || !j["A"].is_array() || j["A"].empty())
    throw Error("SHAPE-MISMATCH", "field A: expected a nonempty 2D array");
  int d = int(j["A"].size());
  int n = int(j["A"][0].size());
  spec.A = IntMatrix(d, n);
  for (int i = 0; i < d; ++i) {
    if (int(j["A"][i].size()) != n)
      throw Error("SHAPE-MISMATCH", "field A: ragged rows");
    for (int k = 0; k < n; ++k) {
      const auto& cell = j["A"][i][k];
      if (!cell.is_number_integer())
        throw Error("SHAPE-MISMATCH", "field A: entries must be integers");
      spec.A.at(i, k) = Int(long(cell.get<long long>()));
    }
  }
  if (j.contains("beta")) spec.beta = rat_vec_from_json(j["beta"], "beta");
  if (j.contains("w")) spec.w = rat_vec_from_json(j["w"], "w");
  if (int(spec.beta.size()) != d)
    throw Error("SHAPE-MISMATCH", "beta length " +
                                      std::to_string(spec.beta.size()) +
                                      " but d = " + std::to_string(d));
  if (int(spec.w.size()) != n)
    throw Error("SHAPE-MISMATCH", "w length " + std::to_string(spec.w.size()) +
                                      " but n = " + std::to_string(n));
  spec.T = j.contains("T") ? rat_from_json(j["T"], "T") : Rat(0);
  if (spec.T < 0) throw Error("BAD-INPUT", "truncation bound T must be >= 0");
  if (j.contains("beta0")) spec.beta0 = rat_from_json(j["beta0"], "beta0");
  if (j.contains("K")) {
    if (!j["K"].is_number_integer() || j["K"].get<long long>() <= 0)
      throw Error("BAD-INPUT", "K must be a positive integer");
    spec.K = long(j["K"].get<long long>());
  }
  if (j.contains("lifts")) {
    for (const auto& l : j["lifts"]) {
      auto v = rat_vec_from_json(l, "lifts");
      if (int(v.size()) != n + 1)
        throw Error("SHAPE-MISMATCH", "each lift must have length n+1");
      spec.lifts.push_back(std::move(v));
    }
  }
  if (j.contains("series")) {
    const auto& js = j["series"];
    ProvidedSeries ps;
    ps.v = rat_vec_from_json(js.at("v"), "series.v");
    if (int(ps.v.size()) != n)
      throw Error("SHAPE-MISMATCH", "series.v must have length n");
    for (const auto& s : js.at("sigma")) ps.sigma.insert(s.get<int>());
    for (const auto& t : js.at("terms")) {
      SeriesTerm st;
      for (const auto& u : t.at("u")) st.u.push_back(u.get<long>());
      if (int(st.u.size()) != n)
        throw Error("SHAPE-MISMATCH", "series term u must have length n");
      st.coeff = rat_from_json(t.at("coeff"), "series.terms.coeff");
      ps.terms.push_back(std::move(st));
    }
    spec.series = std::move(ps);
  }
  return spec;
}

std::string report_to_json(const AnalysisReport& rep) {
  json out;
  out["schema"] = 1;
  switch (rep.stage) {
    case Stage::Analyze: out["subcommand"] = "analyze"; break;
    case Stage::Series: out["subcommand"] = "series"; break;
    case Stage::Triangulate: out["subcommand"] = "triangulate"; break;
    case Stage::Converge: out["subcommand"] = "converge"; break;
    case Stage::Irregularity: out["subcommand"] = "irregularity"; break;
    case Stage::Oracle: out["subcommand"] = "oracle"; break;
  }
  {
    json in;
    json A = json::array();
    for (int i = 0; i < rep.spec.A.rows; ++i) {
      json row = json::array();
      for (int k = 0; k < rep.spec.A.cols; ++k)
        row.push_back(rep.spec.A.at(i, k).get_str());
      A.push_back(std::move(row));
    }
    in["A"] = std::move(A);
    in["beta"] = rat_vec_to_json(rep.spec.beta);
    in["w"] = rat_vec_to_json(rep.spec.w);
    in["T"] = rat_str(rep.spec.T);
    if (rep.spec.beta0) in["beta0"] = rat_str(*rep.spec.beta0);
    in["K"] = rep.spec.K;
    out["input"] = std::move(in);
  }

  if (rep.irregularity) {
    json irr;
    switch (rep.irregularity->kind) {
      case IrregularityKind::Homogeneous:
        irr["verdict"] = "HOMOGENEOUS";
        break;
      case IrregularityKind::NotStronglyConvex:
        irr["verdict"] = "NOT-STRONGLY-CONVEX";
        irr["sampled_all_facets_through_zero"] = rep.sampled_all_through_zero;
        break;
      case IrregularityKind::Certificate:
        irr["verdict"] = "CERTIFICATE";
        irr["w"] = rat_vec_to_json(rep.irregularity->w);
        irr["sigma"] = facet_to_json(rep.irregularity->sigma);
        irr["dim_nilsson"] = rep.irregularity->dim_nilsson.get_str();
        irr["vol_total"] = rep.irregularity->vol_total.get_str();
        irr["rank_basis"] = "volume-based";
        break;
    }
    out["irregularity"] = std::move(irr);
  }

  if (rep.stage != Stage::Irregularity) {
    json w;
    w["requested"] = rat_vec_to_json(rep.spec.w);
    w["validated"] = rat_vec_to_json(rep.w_validated);
    w["cone_witnesses"] = json::array();
    for (const auto& cw : rep.cone_witnesses)
      w["cone_witnesses"].push_back(rat_vec_to_json(cw));
    w["note"] = "commutative Groebner-cone condition certified; the "
                "Weyl-algebra constancy of Def-2.4 type is not machine-checked";
    out["weight"] = std::move(w);

    out["toric"] = {{"I_A", binomials_to_json(rep.toric_A, 1)},
                    {"I_rhoA", binomials_to_json(rep.toric_rho, 0)}};
    out["initial_ideals"] = {{"in_w_IA", monomial_ideal_to_json(rep.in_A, 1)},
                             {"in_0w_IrhoA",
                              monomial_ideal_to_json(rep.in_rho, 0)}};

    {
      json pairs = json::array();
      for (const auto& p : rep.pairs_rho.pairs) {
        json jp;
        jp["alpha"] = json::array();
        for (int e : p.alpha) jp["alpha"].push_back(e);
        jp["sigma"] = facet_to_json(Facet(p.sigma.begin(), p.sigma.end()));
        jp["top"] = int(p.sigma.size()) == rep.d + 1;
        jp["through_zero"] = p.sigma.count(0) > 0;
        pairs.push_back(std::move(jp));
      }
      out["standard_pairs_rho"] = std::move(pairs);
      out["degree"] = {{"in_w_IA", rep.degree_A}, {"in_0w_IrhoA", rep.degree_rho}};
      out["tp_ideal"] = monomial_ideal_to_json(rep.tp_A, 1);
    }

    out["triangulation"] = triangulation_to_json(rep.tri);
    out["vol_rhoA_independent"] = rep.vol_independent.get_str();
    {
      json dims;
      dims["dim_nilsson"] = rep.dims.dim_nilsson.get_str();
      dims["initial_rank"] = rep.dims.dim_nilsson.get_str();
      dims["rank_basis"] = "volume-based";
      dims["vol_total"] = rep.dims.vol_total.get_str();
      dims["weight_achieves_volume_rank"] = rep.dims.weight_achieves_volume_rank;
      out["dimension"] = std::move(dims);
    }
    {
      json g = json::array();
      for (const auto& r : rep.gale.rows) g.push_back(rat_vec_to_json(r));
      out["gale_rows"] = std::move(g);
    }

    if (rep.stage == Stage::Triangulate) {
      json lt = json::array();
      for (const auto& t : rep.lift_triangulations)
        lt.push_back(triangulation_to_json(t));
      out["lift_triangulations"] = std::move(lt);
    }

    if (rep.stage == Stage::Analyze || rep.stage == Stage::Series ||
        rep.stage == Stage::Converge || rep.stage == Stage::Oracle) {
      json exps = json::array();
      for (const auto& e : rep.exponents.exponents) {
        json je;
        je["v"] = rat_vec_to_json(e.v);
        je["sigma"] = facet_to_json(Facet(e.pair.sigma.begin(), e.pair.sigma.end()));
        je["top"] = e.top;
        exps.push_back(std::move(je));
      }
      out["fake_exponents"] = std::move(exps);
      json skipped = json::array();
      for (const auto& s : rep.exponents.skipped) {
        json js;
        js["sigma"] = facet_to_json(Facet(s.pair.sigma.begin(), s.pair.sigma.end()));
        js["reason"] = s.reason;
        skipped.push_back(std::move(js));
      }
      out["pairs_without_exponent"] = std::move(skipped);
      out["genericity"] = {{"pass", rep.genericity.pass},
                           {"violations", rep.genericity.violations}};
      if (rep.beta0) out["beta0"] = rat_str(*rep.beta0);
    }

    if (rep.provided_oracle) {
      json o;
      o["pass"] = rep.provided_oracle->pass();
      o["toric_pairs_checked"] = rep.provided_oracle->toric_pairs_checked;
      json viol = json::array();
      for (const auto& v : rep.provided_oracle->euler) {
        json jv;
        jv["type"] = "euler";
        jv["u"] = long_vec_to_json(v.u);
        jv["row"] = v.row;
        viol.push_back(std::move(jv));
      }
      for (const auto& v : rep.provided_oracle->toric) {
        json jv;
        jv["type"] = "toric";
        jv["binomial"] = v.binomial_index;
        jv["u"] = long_vec_to_json(v.u);
        jv["lhs"] = rat_str(v.lhs);
        jv["rhs"] = rat_str(v.rhs);
        viol.push_back(std::move(jv));
      }
      o["violations"] = std::move(viol);
      out["oracle"] = std::move(o);
    }

    if (!rep.series.empty()) {
      json js = json::array();
      for (const auto& se : rep.series) {
        json e;
        e["exponent_index"] = se.exponent_index;
        e["series"] = series_to_json(se.series, 1);
        e["homogenized"] = series_to_json(se.homogenized, 0);
        e["oracle_pass"] = se.oracle.pass();
        e["oracle_toric_pairs_checked"] = se.oracle.toric_pairs_checked;
        e["roundtrip_ok"] = se.roundtrip_ok;
        e["rho_compat_ok"] = se.rho_compat_ok;
        js.push_back(std::move(e));
      }
      out["series"] = std::move(js);
    }

    if (!rep.convergence.empty() || rep.stage == Stage::Converge ||
        rep.stage == Stage::Analyze) {
      json jc = json::array();
      for (const auto& r : rep.convergence) {
        json e;
        e["exponent_index"] = r.exponent_index;
        e["sigma"] = facet_to_json(r.sigma_rho);
        e["cone_class"] = cone_str(r.entry.cone_class);
        e["verdict"] = verdict_str(r.entry.verdict);
        e["evidence"] = r.entry.evidence;
        if (r.entry.witness_point)
          e["witness_point"] = long_vec_to_json(*r.entry.witness_point);
        if (r.entry.witness_ray)
          e["witness_ray"] = long_vec_to_json(*r.entry.witness_ray);
        jc.push_back(std::move(e));
      }
      out["convergence"] = std::move(jc);
      out["convergent_dimension_bounds"] = {
          {"lower", rep.conv_bounds.lower.get_str()},
          {"upper", rep.conv_bounds.upper.get_str()}};
    }
  }

  {
    json checks = json::array();
    for (const auto& c : rep.checks) {
      json jc;
      jc["name"] = c.name;
      jc["pass"] = c.pass;
      if (!c.detail.empty()) jc["detail"] = c.detail;
      checks.push_back(std::move(jc));
    }
    out["checks"] = std::move(checks);
    out["notes"] = rep.notes;
    out["exit_status"] = rep.exit_status();
  }
  return out.dump(2) + "\n";
}

std::string report_to_text(const AnalysisReport& rep) {
  std::ostringstream os;
  os << "== hypergeometric series analysis ==\n";
  os << "n = " << rep.n << ", d = " << rep.d << "\n";
  if (rep.stage != Stage::Irregularity) {
    os << "validated weight:";
    for (const auto& x : rep.w_validated) os << " " << rat_str(x);
    os << "\n";
    os << "in_w(I_A) = <";
    for (size_t i = 0; i < rep.in_A.gens.size(); ++i)
      os << (i ? ", " : " ") << mono_str(rep.in_A.gens[i], 1);
    os << " >\n";
    os << "in_(0,w)(I_rho(A)) = <";
    for (size_t i = 0; i < rep.in_rho.gens.size(); ++i)
      os << (i ? ", " : " ") << mono_str(rep.in_rho.gens[i], 0);
    os << " >\n";
    os << "triangulation:";
    for (size_t i = 0; i < rep.tri.facets.size(); ++i) {
      os << " " << facet_str(rep.tri.facets[i]) << "(vol "
         << rep.tri.volumes[i].get_str() << ")";
    }
    os << "\n";
    os << "dim N_w = " << rep.dims.dim_nilsson.get_str()
       << ", vol = " << rep.dims.vol_total.get_str()
       << "  [rank figures are volume-based]\n";
    if (!rep.convergence.empty()) {
      os << "convergence:\n";
      for (const auto& r : rep.convergence) {
        os << "  exponent " << r.exponent_index << "  sigma "
           << facet_str(r.sigma_rho) << "  " << cone_str(r.entry.cone_class)
           << "  " << verdict_str(r.entry.verdict) << "  (" << r.entry.evidence
           << ")\n";
      }
      os << "convergent dimension bounds: [" << rep.conv_bounds.lower.get_str()
         << ", " << rep.conv_bounds.upper.get_str() << "]\n";
    }
  }
  if (rep.irregularity) {
    os << "irregularity: ";
    switch (rep.irregularity->kind) {
      case IrregularityKind::Homogeneous: os << "HOMOGENEOUS\n"; break;
      case IrregularityKind::NotStronglyConvex:
        os << "NOT-STRONGLY-CONVEX\n";
        break;
      case IrregularityKind::Certificate:
        os << "CERTIFICATE  w = (";
        for (size_t i = 0; i < rep.irregularity->w.size(); ++i)
          os << (i ? ", " : "") << rat_str(rep.irregularity->w[i]);
        os << ")  sigma = " << facet_str(rep.irregularity->sigma)
           << "  dim " << rep.irregularity->dim_nilsson.get_str() << " < vol "
           << rep.irregularity->vol_total.get_str() << " (volume-based)\n";
        break;
    }
  }
  os << "checks:\n";
  for (const auto& c : rep.checks)
    os << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.name << "\n";
  for (const auto& n : rep.notes) os << "note: " << n << "\n";
  os << std::fixed << std::setprecision(3);
  os << "elapsed: " << rep.elapsed_seconds << "s\n";
  os << "exit status: " << rep.exit_status() << "\n";
  return os.str();
}

}  // namespace gkz
