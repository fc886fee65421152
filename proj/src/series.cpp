#include "gkz/series.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "gkz/linprog.hpp"

namespace gkz {

const Rat* TruncatedSeries::coeff_of(const std::vector<long>& u) const {
  for (const auto& t : terms)
    if (t.u == u) return &t.coeff;
  return nullptr;
}

std::vector<std::vector<long>> enumerate_support(const FakeExponent& v,
                                                 SupportKind kind,
                                                 const KernelBasis& kb,
                                                 const RatVec& w, const Rat& T) {
  int n = int(v.v.size());
  int r = kb.count();
  if (T < 0) return {};
  if (r == 0) return {std::vector<long>(n, 0)};

  LinSystem sys;
  auto coeff_row = [&](int i) {
    RatVec row(r);
    for (int j = 0; j < r; ++j) row[j] = Rat(kb.vectors[j][i]);
    return row;
  };
  if (kind == SupportKind::GenericSigma) {
    for (int i = 0; i < n; ++i) {
      if (v.pair.sigma.count(i)) continue;
      LinCon c;
      c.a = coeff_row(i);
      c.rhs = -v.v[i];
      sys.push_back(std::move(c));
    }
  } else {
    for (int i = 0; i < n; ++i) {
      if (!is_integer(v.v[i])) continue;
      LinCon c;
      c.a = coeff_row(i);
      if (v.v[i] >= 0) {
        c.rhs = -v.v[i];  // u_i + v_i >= 0
      } else {
        for (auto& x : c.a) x = -x;  // u_i + v_i <= -1
        c.rhs = v.v[i] + 1;
      }
      sys.push_back(std::move(c));
    }
  }
  {
    LinCon c;  // w.u <= T
    c.a.assign(r, Rat(0));
    for (int j = 0; j < r; ++j) c.a[j] = -dot(w, kb.vectors[j]);
    c.rhs = -T;
    sys.push_back(std::move(c));
  }
  auto nus = integer_points(sys, r);
  std::vector<std::vector<long>> out;
  for (const auto& nu : nus) {
    std::vector<long> u(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < r; ++j) u[i] += kb.vectors[j][i] * nu[j];
    out.push_back(std::move(u));
  }
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    Rat wa = dot(w, a), wb = dot(w, b);
    if (wa != wb) return wa < wb;
    return a < b;
  });
  return out;
}

namespace {

// [v]_{u-} = prod_{u_i<0} prod_{j=1}^{-u_i} (v_i - j + 1)
Rat numerator_of(const RatVec& v, const std::vector<long>& u) {
  Rat p = 1;
  for (size_t i = 0; i < u.size(); ++i)
    for (long j = 1; j <= -u[i]; ++j) p *= v[i] - Rat(j) + 1;
  return p;
}

// [u+v]_{u+} = prod_{u_i>0} prod_{j=1}^{u_i} (v_i + j)
Rat denominator_of(const RatVec& v, const std::vector<long>& u) {
  Rat p = 1;
  for (size_t i = 0; i < u.size(); ++i)
    for (long j = 1; j <= u[i]; ++j) p *= v[i] + Rat(j);
  return p;
}

}  // namespace

TruncatedSeries build_series(const FakeExponent& v, SupportKind kind,
                             const KernelBasis& kb, const RatVec& w,
                             const Rat& T) {
  TruncatedSeries s;
  s.exponent = v;
  s.weight = w;
  s.bound = T;
  s.kind = kind;
  for (auto& u : enumerate_support(v, kind, kb, w, T)) {
    Rat den = denominator_of(v.v, u);
    if (den == 0)
      throw Error("ZERO-DENOMINATOR",
                  "a factor v_i + j vanished; re-check beta genericity");
    Rat num = numerator_of(v.v, u);
    if (num == 0)
      throw Error("INTERNAL", "zero series coefficient inside the support set");
    Rat w_u = dot(w, u);
    bool zero = std::all_of(u.begin(), u.end(), [](long x) { return x == 0; });
    if (w_u < 0 || (w_u == 0 && !zero))
      throw Error("SUPPORT-WEIGHT",
                  "support element with nonpositive weight; weight not valid");
    s.terms.push_back({std::move(u), num / den});
  }
  if (s.terms.empty() || !std::all_of(s.terms[0].u.begin(), s.terms[0].u.end(),
                                      [](long x) { return x == 0; }))
    throw Error("INTERNAL", "series does not start at u = 0");
  return s;
}

Rat falling_factorial(const RatVec& s, const Monomial& e) {
  Rat p = 1;
  for (size_t i = 0; i < e.size(); ++i)
    for (int j = 0; j < e[i]; ++j) p *= s[i] - Rat(j);
  return p;
}

OracleReport annihilation_oracle(const TruncatedSeries& s,
                                 const std::vector<Binomial>& gb,
                                 const IntMatrix& A, const RatVec& beta) {
  OracleReport rep;
  int n = A.cols;
  // Euler: A (v + u) = beta for every term.
  for (const auto& t : s.terms) {
    for (int r = 0; r < A.rows; ++r) {
      Rat acc = 0;
      for (int i = 0; i < n; ++i)
        acc += Rat(A.at(r, i)) * (s.exponent.v[i] + Rat(t.u[i]));
      if (acc != beta[r]) rep.euler.push_back({t.u, r});
    }
  }
  // Toric: coeff(u) [v+u]_a = coeff(u+mu) [v+u+mu]_b with mu = b - a,
  // over the truncation-safe window.
  std::map<std::vector<long>, Rat> coeff;
  for (const auto& t : s.terms) coeff[t.u] = t.coeff;
  auto coeff_of = [&](const std::vector<long>& u) -> Rat {
    auto it = coeff.find(u);
    return it == coeff.end() ? Rat(0) : it->second;
  };
  for (size_t gi = 0; gi < gb.size(); ++gi) {
    const auto& g = gb[gi];
    std::vector<long> mu(n);
    for (int i = 0; i < n; ++i) mu[i] = long(g.minus[i]) - g.plus[i];
    Monomial top = mono_lcm(g.plus, g.minus);
    Rat w_top = 0;
    for (int i = 0; i < n; ++i) w_top += s.weight[i] * Rat(top[i]);
    Rat safe = s.bound - w_top;
    std::set<std::vector<long>> candidates;
    for (const auto& t : s.terms) {
      candidates.insert(t.u);
      std::vector<long> shifted(n);
      for (int i = 0; i < n; ++i) shifted[i] = t.u[i] - mu[i];
      candidates.insert(shifted);
    }
    for (const auto& u : candidates) {
      std::vector<long> u2(n);
      for (int i = 0; i < n; ++i) u2[i] = u[i] + mu[i];
      if (dot(s.weight, u) > safe || dot(s.weight, u2) > safe) continue;
      RatVec vu(n), vu2(n);
      for (int i = 0; i < n; ++i) {
        vu[i] = s.exponent.v[i] + Rat(u[i]);
        vu2[i] = s.exponent.v[i] + Rat(u2[i]);
      }
      Rat lhs = coeff_of(u) * falling_factorial(vu, g.plus);
      Rat rhs = coeff_of(u2) * falling_factorial(vu2, g.minus);
      ++rep.toric_pairs_checked;
      if (lhs != rhs) rep.toric.push_back({gi, u, lhs, rhs});
    }
  }
  return rep;
}

namespace {

// [v0]_m for m >= 0 (falling factorial), and the del0^{-1} reciprocal
// 1/((v0+1)...(v0+|m|)) for m < 0. Well defined for non-integer v0.
Rat del0_power_factor(const Rat& v0, long m) {
  Rat p = 1;
  if (m >= 0) {
    for (long j = 0; j < m; ++j) p *= v0 - Rat(j);
  } else {
    for (long j = 1; j <= -m; ++j) p /= v0 + Rat(j);
  }
  return p;
}

}  // namespace

Rat homogenizing_value(const std::vector<FakeExponent>& exps,
                       const std::optional<Rat>& hint) {
  auto valid = [&](const Rat& b0) {
    if (is_integer(b0)) return false;
    for (const auto& e : exps)
      if (is_integer(b0 - coord_sum(e.v))) return false;
    return true;
  };
  if (hint) {
    if (!valid(*hint))
      throw Error("INVALID-BETA0",
                  "provided beta0 is integral against some fake exponent");
    return *hint;
  }
  Int dens = 1;
  for (const auto& e : exps) dens = lcm(dens, Int(coord_sum(e.v).get_den()));
  for (Int p = 2;; mpz_nextprime(p.get_mpz_t(), p.get_mpz_t())) {
    if (dens % p != 0) {
      Rat b0(Int(1), p);
      if (valid(b0)) return b0;
    }
  }
}

TruncatedSeries homogenize_series(const TruncatedSeries& s, const Rat& beta0) {
  int n = int(s.exponent.v.size());
  Rat v0 = beta0 - coord_sum(s.exponent.v);
  if (is_integer(beta0) || is_integer(v0))
    throw Error("INVALID-BETA0", "beta0 - |v| must be non-integer");
  TruncatedSeries out;
  out.kind = s.kind;
  out.bound = s.bound;
  out.weight.assign(n + 1, Rat(0));
  for (int i = 0; i < n; ++i) out.weight[i + 1] = s.weight[i];
  out.exponent.v.assign(n + 1, Rat(0));
  out.exponent.v[0] = v0;
  for (int i = 0; i < n; ++i) out.exponent.v[i + 1] = s.exponent.v[i];
  out.exponent.v0 = v0;
  out.exponent.top = s.exponent.top;
  out.exponent.pair.alpha.assign(n + 1, 0);
  for (int i = 0; i < n; ++i) out.exponent.pair.alpha[i + 1] = s.exponent.pair.alpha[i];
  out.exponent.pair.sigma.insert(0);
  for (int i : s.exponent.pair.sigma) out.exponent.pair.sigma.insert(i + 1);
  for (const auto& t : s.terms) {
    SeriesTerm ht;
    ht.u.assign(n + 1, 0);
    long usum = coord_sum(t.u);
    ht.u[0] = -usum;
    for (int i = 0; i < n; ++i) ht.u[i + 1] = t.u[i];
    // del0^{|u|} acting on x0^{v0} contributes [v0]_{|u|}.
    ht.coeff = t.coeff * del0_power_factor(v0, usum);
    // rho(phi_v) = phi_{rho_beta0(v)}: the coefficient formula applied to
    // the homogenized exponent must reproduce this value exactly.
    Rat num = numerator_of(out.exponent.v, ht.u);
    Rat den = denominator_of(out.exponent.v, ht.u);
    if (den == 0 || num / den != ht.coeff)
      throw Error("INTERNAL", "homogenized coefficient mismatch");
    out.terms.push_back(std::move(ht));
  }
  std::sort(out.terms.begin(), out.terms.end(),
            [&](const SeriesTerm& a, const SeriesTerm& b) {
              Rat wa = dot(out.weight, a.u), wb = dot(out.weight, b.u);
              if (wa != wb) return wa < wb;
              return a.u < b.u;
            });
  return out;
}

TruncatedSeries dehomogenize_series(const TruncatedSeries& psi) {
  if (psi.exponent.v.empty() || is_integer(psi.exponent.v[0]))
    throw Error("INTEGER-X0-EXPONENT",
                "standard pair does not pass through zero");
  int n = int(psi.exponent.v.size()) - 1;
  TruncatedSeries out;
  out.kind = psi.kind;
  out.bound = psi.bound;
  out.weight.assign(psi.weight.begin() + 1, psi.weight.end());
  out.exponent.v.assign(psi.exponent.v.begin() + 1, psi.exponent.v.end());
  out.exponent.v0 = psi.exponent.v[0];
  out.exponent.top = psi.exponent.top;
  out.exponent.pair.alpha.assign(psi.exponent.pair.alpha.begin() + 1,
                                 psi.exponent.pair.alpha.end());
  for (int i : psi.exponent.pair.sigma)
    if (i > 0) out.exponent.pair.sigma.insert(i - 1);
  const Rat v0 = psi.exponent.v[0];
  for (const auto& t : psi.terms) {
    SeriesTerm dt;
    dt.u.assign(t.u.begin() + 1, t.u.end());
    dt.coeff = t.coeff / del0_power_factor(v0, coord_sum(dt.u));
    out.terms.push_back(std::move(dt));
  }
  std::sort(out.terms.begin(), out.terms.end(),
            [&](const SeriesTerm& a, const SeriesTerm& b) {
              Rat wa = dot(out.weight, a.u), wb = dot(out.weight, b.u);
              if (wa != wb) return wa < wb;
              return a.u < b.u;
            });
  (void)n;
  return out;
}

}  // namespace gkz
