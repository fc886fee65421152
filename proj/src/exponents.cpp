#include "gkz/exponents.hpp"

#include <algorithm>
#include <sstream>

#include "gkz/linprog.hpp"

namespace gkz {

ExponentsResult fake_exponents(const StandardPairSet& S, const IntMatrix& A,
                               const RatVec& beta) {
  ExponentsResult out;
  int d = A.rows;
  for (const auto& p : S.pairs) {
    std::vector<int> sigma(p.sigma.begin(), p.sigma.end());
    RatVec rhs = beta;
    for (int i = 0; i < A.cols; ++i) {
      if (p.sigma.count(i)) continue;
      if (p.alpha[i] == 0) continue;
      for (int r = 0; r < d; ++r) rhs[r] -= Rat(A.at(r, i)) * Rat(p.alpha[i]);
    }
    auto sol = solve_exact(A, rhs, sigma);
    if (sol.status == SolveStatus::None) {
      out.skipped.push_back({p, "NO-SOLUTION"});
      continue;
    }
    if (sol.status == SolveStatus::Underdetermined) {
      out.skipped.push_back({p, "NON-UNIQUE"});
      continue;
    }
    FakeExponent e;
    e.v.assign(A.cols, Rat(0));
    for (int i = 0; i < A.cols; ++i)
      if (!p.sigma.count(i)) e.v[i] = Rat(p.alpha[i]);
    for (size_t k = 0; k < sigma.size(); ++k) e.v[sigma[k]] = sol.x[k];
    e.pair = p;
    e.top = int(p.sigma.size()) == d;
    out.exponents.push_back(std::move(e));
  }
  return out;
}

GenericityReport genericity_check(const std::vector<FakeExponent>& exps,
                                  long /*search_bound*/) {
  GenericityReport rep;
  auto fail = [&](const std::string& s) {
    rep.pass = false;
    rep.violations.push_back(s);
  };
  for (size_t k = 0; k < exps.size(); ++k) {
    const auto& e = exps[k];
    for (size_t i = 0; i < e.v.size(); ++i) {
      bool forced = !e.pair.sigma.count(int(i));
      if (!forced && is_integer(e.v[i])) {
        std::ostringstream os;
        os << "exponent " << k << " has unforced integer coordinate " << i + 1
           << " = " << rat_str(e.v[i]);
        fail(os.str());
      }
      if (forced && e.v[i] < 0) {
        std::ostringstream os;
        os << "exponent " << k << " has negative forced coordinate " << i + 1;
        fail(os.str());
      }
    }
    if (!e.top) {
      std::ostringstream os;
      os << "exponent " << k << " arises from an embedded standard pair";
      fail(os.str());
    }
  }
  for (size_t a = 0; a < exps.size(); ++a)
    for (size_t b = a + 1; b < exps.size(); ++b) {
      bool integral = true;
      for (size_t i = 0; i < exps[a].v.size(); ++i)
        if (!is_integer(exps[a].v[i] - exps[b].v[i])) {
          integral = false;
          break;
        }
      if (integral) {
        std::ostringstream os;
        os << "exponents " << a << " and " << b << " differ by an integer vector";
        fail(os.str());
      }
    }
  return rep;
}

std::vector<int> negative_support(const RatVec& v) {
  std::vector<int> out;
  for (size_t i = 0; i < v.size(); ++i)
    if (is_integer(v[i]) && v[i] < 0) out.push_back(int(i));
  return out;
}

NsupResult minimal_negative_support(const RatVec& v, const KernelBasis& kb,
                                    long K) {
  auto nsup = negative_support(v);
  if (nsup.empty() || kb.empty()) return {NsupVerdict::Minimal, std::nullopt};
  int n = int(v.size());
  int r = kb.count();
  FourierMotzkin fm(r);

  // u = sum_j nu_j gamma_j; coefficient of nu_j on coordinate i:
  auto coeff_row = [&](int i) {
    RatVec row(r);
    for (int j = 0; j < r; ++j) row[j] = Rat(kb.vectors[j][i]);
    return row;
  };

  auto nsup_of_shift = [&](const std::vector<long>& nu) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i) {
      Rat vi = v[i];
      for (int j = 0; j < r; ++j) vi += Rat(kb.vectors[j][i]) * Rat(nu[j]);
      if (is_integer(vi) && vi < 0) s.push_back(i);
    }
    return s;
  };

  bool any_feasible = false;
  bool undecided_somewhere = false;
  for (int esc : nsup) {
    // Escape polyhedron: coordinate esc leaves the negative support and no
    // nonnegative-integer coordinate becomes negative.
    LinSystem sys;
    for (int i = 0; i < n; ++i) {
      bool constrain = (i == esc) || (is_integer(v[i]) && v[i] >= 0);
      if (!constrain) continue;
      LinCon c;
      c.a = coeff_row(i);
      c.rhs = -v[i];
      sys.push_back(std::move(c));
    }
    auto pt = fm.feasible_point(sys);
    if (!pt) continue;
    any_feasible = true;

    // Try exact per-coordinate bounds; fall back to the K box.
    LinSystem boxed = sys;
    bool bounded = true;
    for (int j = 0; j < r && bounded; ++j) {
      auto iv = fm.project_interval(sys, j);
      if (!iv.lo || !iv.hi) bounded = false;
    }
    if (!bounded) {
      for (int j = 0; j < r; ++j) {
        LinCon lo, hi;
        lo.a.assign(r, Rat(0));
        lo.a[j] = 1;
        lo.rhs = Rat(-K);
        hi.a.assign(r, Rat(0));
        hi.a[j] = -1;
        hi.rhs = Rat(-K);
        boxed.push_back(lo);
        boxed.push_back(hi);
      }
    }
    auto pts = integer_points(boxed, r);
    for (const auto& nu : pts) {
      bool zero = true;
      for (long x : nu)
        if (x) { zero = false; break; }
      if (zero) continue;
      auto s = nsup_of_shift(nu);
      if (int(s.size()) < int(nsup.size()) &&
          std::includes(nsup.begin(), nsup.end(), s.begin(), s.end())) {
        std::vector<long> u(n, 0);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < r; ++j) u[i] += kb.vectors[j][i] * nu[j];
        return {NsupVerdict::NotMinimal, u};
      }
    }
    if (!bounded) undecided_somewhere = true;
  }
  if (any_feasible && undecided_somewhere)
    return {NsupVerdict::Undecided, std::nullopt};
  return {NsupVerdict::Minimal, std::nullopt};
}

}  // namespace gkz
