#include "gkz/logpoly.hpp"

namespace gkz {

LogPolynomial LogPolynomial::constant(int nvars, const Rat& c) {
  LogPolynomial p;
  p.nvars = nvars;
  if (c != 0) p.coeffs[std::vector<int>(nvars, 0)] = c;
  return p;
}

LogPolynomial LogPolynomial::variable(int nvars, int i) {
  LogPolynomial p;
  p.nvars = nvars;
  std::vector<int> e(nvars, 0);
  e[i] = 1;
  p.coeffs[e] = 1;
  return p;
}

int LogPolynomial::degree_in(int var) const {
  int d = 0;
  for (const auto& [e, c] : coeffs) d = std::max(d, e[var]);
  return d;
}

void LogPolynomial::add_term(const std::vector<int>& e, const Rat& c) {
  if (c == 0) return;
  auto it = coeffs.find(e);
  if (it == coeffs.end()) {
    coeffs[e] = c;
  } else {
    it->second += c;
    if (it->second == 0) coeffs.erase(it);
  }
}

LogPolynomial add(const LogPolynomial& a, const LogPolynomial& b) {
  LogPolynomial r = a;
  for (const auto& [e, c] : b.coeffs) r.add_term(e, c);
  return r;
}

LogPolynomial scale(const LogPolynomial& a, const Rat& c) {
  LogPolynomial r;
  r.nvars = a.nvars;
  if (c == 0) return r;
  for (const auto& [e, x] : a.coeffs) r.coeffs[e] = x * c;
  return r;
}

LogPolynomial mul(const LogPolynomial& a, const LogPolynomial& b) {
  LogPolynomial r;
  r.nvars = a.nvars;
  for (const auto& [ea, ca] : a.coeffs)
    for (const auto& [eb, cb] : b.coeffs) {
      std::vector<int> e(a.nvars);
      for (int i = 0; i < a.nvars; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

LogPolynomial pow(const LogPolynomial& a, int k) {
  LogPolynomial r = LogPolynomial::constant(a.nvars, 1);
  for (int i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

LogPolynomial derivative(const LogPolynomial& a, int var) {
  LogPolynomial r;
  r.nvars = a.nvars;
  for (const auto& [e, c] : a.coeffs) {
    if (e[var] == 0) continue;
    std::vector<int> d = e;
    d[var] -= 1;
    r.add_term(d, c * Rat(e[var]));
  }
  return r;
}

LogPolynomial substitute_zero(const LogPolynomial& a, int var) {
  LogPolynomial r;
  r.nvars = a.nvars;
  for (const auto& [e, c] : a.coeffs)
    if (e[var] == 0) r.add_term(e, c);
  return r;
}

namespace {

LogPolynomial expand_with_forms(const KernelFormPoly& p,
                                const std::vector<LogPolynomial>& forms,
                                int nvars) {
  LogPolynomial r;
  r.nvars = nvars;
  for (const auto& [alpha, c] : p.coeffs) {
    LogPolynomial term = LogPolynomial::constant(nvars, c);
    for (size_t j = 0; j < alpha.size(); ++j)
      if (alpha[j] > 0) term = mul(term, pow(forms[j], alpha[j]));
    r = add(r, term);
  }
  return r;
}

}  // namespace

LogPolynomial expand_kernel_form(const KernelFormPoly& p, const KernelBasis& kb) {
  int n = kb.n;
  std::vector<LogPolynomial> forms;
  for (const auto& g : kb.vectors) {
    LogPolynomial f;
    f.nvars = n;
    for (int i = 0; i < n; ++i)
      if (g[i]) f.add_term([&] {
        std::vector<int> e(n, 0);
        e[i] = 1;
        return e;
      }(), Rat(g[i]));
    forms.push_back(std::move(f));
  }
  return expand_with_forms(p, forms, n);
}

LogPolynomial hat_lift(const KernelFormPoly& p, const KernelBasis& kb) {
  int n = kb.n;
  std::vector<LogPolynomial> forms;
  for (const auto& g : kb.vectors) {
    LogPolynomial f;
    f.nvars = n + 1;
    long s = coord_sum(g);
    if (s != 0) f.add_term([&] {
      std::vector<int> e(n + 1, 0);
      e[0] = 1;
      return e;
    }(), Rat(-s));
    for (int i = 0; i < n; ++i)
      if (g[i]) f.add_term([&] {
        std::vector<int> e(n + 1, 0);
        e[i + 1] = 1;
        return e;
      }(), Rat(g[i]));
    forms.push_back(std::move(f));
  }
  return expand_with_forms(p, forms, n + 1);
}

LogPolynomial del0_forward(const LogPolynomial& q, const Rat& s0) {
  return add(scale(q, s0 + 1), derivative(q, 0));
}

LogPolynomial del0_inverse(const LogPolynomial& p, const Rat& s0) {
  if (s0 == -1) throw Error("FORBIDDEN-S0", "s0 + 1 vanishes");
  int k = p.degree_in(0);
  // Slice p into coefficients of t_0^i, solve downward:
  // p_k = (s0+1) q_k ;  p_i = (s0+1) q_i + (i+1) q_{i+1}.
  std::vector<LogPolynomial> pi(k + 1), qi(k + 1);
  for (int i = 0; i <= k; ++i) {
    pi[i].nvars = p.nvars;
    qi[i].nvars = p.nvars;
  }
  for (const auto& [e, c] : p.coeffs) {
    std::vector<int> rest = e;
    int i = e[0];
    rest[0] = 0;
    pi[i].add_term(rest, c);
  }
  Rat inv = 1 / (s0 + 1);
  for (int i = k; i >= 0; --i) {
    LogPolynomial rhs = pi[i];
    if (i < k) rhs = add(rhs, scale(qi[i + 1], Rat(-(i + 1))));
    qi[i] = scale(rhs, inv);
  }
  LogPolynomial q;
  q.nvars = p.nvars;
  for (int i = 0; i <= k; ++i)
    for (const auto& [e, c] : qi[i].coeffs) {
      std::vector<int> full = e;
      full[0] = i;
      q.add_term(full, c);
    }
  if (!(del0_forward(q, s0) == p))
    throw Error("INTERNAL", "del0 inverse failed its forward check");
  return q;
}

}  // namespace gkz
