#include "gkz/groebner.hpp"

#include "gkz/linprog.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace gkz {

namespace {

// Oriented copy with `plus` leading; nullopt for the zero binomial.
std::optional<Binomial> orient(Binomial b, const TermOrder& ord) {
  int c = ord.compare(b.plus, b.minus);
  if (c == 0) return std::nullopt;
  if (c < 0) std::swap(b.plus, b.minus);
  return b;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}

}  // namespace

std::vector<Binomial> lattice_basis_ideal(const KernelBasis& kb) {
  std::vector<Binomial> out;
  for (const auto& g : kb.vectors) {
    Binomial b;
    b.plus.assign(g.size(), 0);
    b.minus.assign(g.size(), 0);
    for (size_t i = 0; i < g.size(); ++i) {
      if (g[i] > 0) b.plus[i] = int(g[i]);
      if (g[i] < 0) b.minus[i] = int(-g[i]);
    }
    out.push_back(std::move(b));
  }
  return out;
}

Monomial normal_form(Monomial m, const std::vector<Binomial>& gb,
                     const TermOrder& ord) {
  (void)ord;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& g : gb) {
      if (divides(g.plus, m)) {
        m = mono_mul(mono_div(m, g.plus), g.minus);
        changed = true;
        break;
      }
    }
  }
  return m;
}

bool reduces_to_zero(const Binomial& f, const std::vector<Binomial>& gb,
                     const TermOrder& ord) {
  return normal_form(f.plus, gb, ord) == normal_form(f.minus, gb, ord);
}

std::vector<Binomial> buchberger(std::vector<Binomial> gens,
                                 const TermOrder& ord) {
  std::vector<Binomial> g;
  for (auto& b : gens)
    if (auto ob = orient(std::move(b), ord)) g.push_back(std::move(*ob));

  std::deque<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < g.size(); ++i)
    for (size_t j = i + 1; j < g.size(); ++j) pairs.emplace_back(i, j);

  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    if (coprime(g[i].plus, g[j].plus)) continue;
    Monomial l = mono_lcm(g[i].plus, g[j].plus);
    Binomial s;
    s.plus = mono_mul(mono_div(l, g[i].plus), g[i].minus);
    s.minus = mono_mul(mono_div(l, g[j].plus), g[j].minus);
    Monomial np = normal_form(s.plus, g, ord);
    Monomial nm = normal_form(s.minus, g, ord);
    if (np == nm) continue;
    Binomial r{np, nm};
    auto orr = orient(std::move(r), ord);
    size_t idx = g.size();
    g.push_back(std::move(*orr));
    for (size_t k = 0; k < idx; ++k) pairs.emplace_back(k, idx);
  }

  // Minimalize: drop elements whose lead is divisible by another lead.
  std::vector<size_t> order_idx(g.size());
  for (size_t i = 0; i < order_idx.size(); ++i) order_idx[i] = i;
  std::sort(order_idx.begin(), order_idx.end(), [&](size_t a, size_t b) {
    int c = ord.compare(g[a].plus, g[b].plus);
    if (c != 0) return c < 0;
    return g[a].minus < g[b].minus;
  });
  std::vector<Binomial> min;
  for (size_t id : order_idx) {
    bool divisible = false;
    for (const auto& kept : min)
      if (divides(kept.plus, g[id].plus)) { divisible = true; break; }
    if (!divisible) min.push_back(g[id]);
  }
  // Tail-reduce against the minimal set; leads are pairwise non-dividing so
  // the leads themselves are already in normal form.
  std::vector<Binomial> red;
  for (const auto& b : min) {
    Binomial r{b.plus, normal_form(b.minus, min, ord)};
    red.push_back(std::move(r));
  }
  std::sort(red.begin(), red.end(), [&](const Binomial& a, const Binomial& b) {
    return ord.compare(a.plus, b.plus) < 0;
  });
  red.erase(std::unique(red.begin(), red.end()), red.end());
  return red;
}

namespace {

std::vector<std::vector<long>> lattice_vectors_of(
    const std::vector<Binomial>& bs) {
  std::vector<std::vector<long>> out;
  for (const auto& b : bs) {
    std::vector<long> v(b.plus.size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = long(b.plus[i]) - b.minus[i];
    out.push_back(std::move(v));
  }
  return out;
}

// One pass of J := J : d_i^inf over every variable, valid because `grading`
// is positive and all binomials are grading-homogeneous.
std::vector<Binomial> saturate_all_vars(std::vector<Binomial> g,
                                        const std::vector<long>& grading) {
  if (g.empty()) return g;
  int m = int(g[0].plus.size());
  for (int i = 0; i < m; ++i) {
    TermOrder ord;
    ord.grading = grading;
    ord.cheapest = i;
    g = buchberger(std::move(g), ord);
    for (auto& b : g) {
      int c = std::min(b.plus[i], b.minus[i]);
      if (c > 0) {
        b.plus[i] -= c;
        b.minus[i] -= c;
      }
    }
  }
  return g;
}

}  // namespace

std::vector<Binomial> saturate_toric(const std::vector<Binomial>& lattice_ideal,
                                     std::optional<TermOrder> ord_hint) {
  if (lattice_ideal.empty()) return {};
  int m = int(lattice_ideal[0].plus.size());
  auto vecs = lattice_vectors_of(lattice_ideal);
  auto grading = positive_grading(vecs, m);
  std::vector<Binomial> sat;
  if (grading) {
    sat = saturate_all_vars(lattice_ideal, *grading);
  } else {
    // No positive grading (cone over the columns not strongly convex):
    // run in the homogenized ring, where the standard grading works, and
    // set d0 -> 1 afterwards. I_A is the dehomogenization of I_rho(A).
    std::vector<Binomial> lifted;
    for (const auto& v : vecs) {
      Binomial b;
      b.plus.assign(m + 1, 0);
      b.minus.assign(m + 1, 0);
      long s = -coord_sum(v);
      if (s > 0) b.plus[0] = int(s);
      if (s < 0) b.minus[0] = int(-s);
      for (int i = 0; i < m; ++i) {
        if (v[i] > 0) b.plus[i + 1] = int(v[i]);
        if (v[i] < 0) b.minus[i + 1] = int(-v[i]);
      }
      lifted.push_back(std::move(b));
    }
    auto hsat = saturate_all_vars(lifted, std::vector<long>(m + 1, 1));
    for (const auto& b : hsat) {
      Binomial d;
      d.plus = Monomial(b.plus.begin() + 1, b.plus.end());
      d.minus = Monomial(b.minus.begin() + 1, b.minus.end());
      if (d.plus != d.minus) sat.push_back(std::move(d));
    }
  }
  // Strip any residual common monomial factors (harmless once saturated).
  for (auto& b : sat)
    for (int i = 0; i < m; ++i) {
      int c = std::min(b.plus[i], b.minus[i]);
      b.plus[i] -= c;
      b.minus[i] -= c;
    }
  TermOrder final_ord = ord_hint ? *ord_hint : TermOrder{};
  return buchberger(std::move(sat), final_ord);
}

InitialIdealResult initial_monomial_ideal(const std::vector<Binomial>& gens,
                                          const RatVec& w) {
  InitialIdealResult res;
  TermOrder ord;
  ord.weight = w;
  res.gb = buchberger(gens, ord);
  std::vector<Monomial> lead;
  int nvars = int(w.size());
  for (const auto& g : res.gb) {
    if (ord.w_of(g.plus) == ord.w_of(g.minus)) {
      res.tie_witness = g;
      return res;
    }
    lead.push_back(g.plus);
  }
  res.ideal = make_monomial_ideal(std::move(lead), nvars);
  return res;
}

RatVec perturbation_direction(int k, int m, const std::vector<bool>& mask) {
  static const long primes[] = {2, 3, 5, 7, 11, 13};
  long base = primes[(k - 1) % 6];
  RatVec d(m, Rat(0));
  Int p = base;
  for (int i = 0; i < m; ++i) {
    if (mask.empty() || mask[i]) d[i] = Rat(Int(1), p);
    p *= base;
  }
  return d;
}

ValidatedWeight validate_weight(const std::vector<Binomial>& gens,
                                const RatVec& w, const ValidateOptions& opt) {
  int m = int(w.size());
  auto orientation_ok = [&](const RatVec& cand) {
    for (const auto& v : opt.orient_against) {
      Rat p = dot(cand, v);
      if (p == 0) return false;
    }
    return true;
  };
  auto stable = [&](const RatVec& cand,
                    const MonomialIdeal& in_cand) -> std::optional<std::vector<RatVec>> {
    std::vector<RatVec> wit;
    for (int j = 1; j <= 2; ++j) {
      RatVec d = perturbation_direction(j, m, opt.mask);
      Rat eps(Int(1), Int(1) << 20);
      RatVec cand2(m);
      for (int i = 0; i < m; ++i) cand2[i] = cand[i] + eps * d[i];
      auto r2 = initial_monomial_ideal(gens, cand2);
      if (!r2.ideal || !(*r2.ideal == in_cand)) return std::nullopt;
      wit.push_back(std::move(cand2));
    }
    return wit;
  };
  auto attempt = [&](const RatVec& cand) -> std::optional<ValidatedWeight> {
    if (!orientation_ok(cand)) return std::nullopt;
    auto r = initial_monomial_ideal(gens, cand);
    if (!r.ideal) return std::nullopt;
    auto wit = stable(cand, *r.ideal);
    if (!wit) return std::nullopt;
    return ValidatedWeight{cand, *r.ideal, std::move(r.gb), std::move(*wit)};
  };

  if (auto ok = attempt(w)) return std::move(*ok);
  for (int k = 10; k <= opt.max_k; ++k) {
    for (int j = 1; j <= 3; ++j) {
      RatVec d = perturbation_direction(j, m, opt.mask);
      Rat eps(Int(1), Int(1) << k);
      RatVec cand(m);
      for (int i = 0; i < m; ++i) cand[i] = w[i] + eps * d[i];
      if (auto ok = attempt(cand)) return std::move(*ok);
    }
  }
  throw Error("WEIGHT-VALIDATION-FAILED",
              "no nearby generic weight found (resampling seed advised)");
}

}  // namespace gkz
