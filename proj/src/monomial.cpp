#include "gkz/monomial.hpp"

namespace gkz {

std::string mono_str(const Monomial& m, int index_base) {
  std::string s;
  for (size_t i = 0; i < m.size(); ++i) {
    if (!m[i]) continue;
    if (!s.empty()) s += "*";
    s += "d" + std::to_string(long(i) + index_base);
    if (m[i] != 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
  if (!weight.empty()) {
    Rat wa = w_of(a), wb = w_of(b);
    if (wa != wb) return wa < wb ? -1 : 1;
  }
  if (!grading.empty()) {
    long ga = 0, gb = 0;
    for (size_t i = 0; i < a.size(); ++i) {
      ga += grading[i] * a[i];
      gb += grading[i] * b[i];
    }
    if (ga != gb) return ga < gb ? -1 : 1;
  }
  if (cheapest >= 0 && a[cheapest] != b[cheapest])
    return a[cheapest] > b[cheapest] ? -1 : 1;  // more of the cheapest var = smaller
  int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db ? -1 : 1;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

Rat TermOrder::w_of(const Monomial& m) const {
  Rat s = 0;
  for (size_t i = 0; i < m.size(); ++i)
    if (m[i]) s += weight[i] * Rat(m[i]);
  return s;
}

MonomialIdeal make_monomial_ideal(std::vector<Monomial> gens, int nvars) {
  std::vector<Monomial> min;
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < gens.size() && !redundant; ++j)
      if (i != j && divides(gens[j], gens[i]) && gens[j] != gens[i]) redundant = true;
    // Equal duplicates were removed above; strict divisibility culls the rest.
    if (!redundant) min.push_back(gens[i]);
  }
  std::sort(min.begin(), min.end());
  return {std::move(min), nvars};
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<Monomial> gens;
  for (const auto& x : a.gens)
    for (const auto& y : b.gens) gens.push_back(mono_lcm(x, y));
  return make_monomial_ideal(std::move(gens), a.nvars);
}

MonomialIdeal radical(const MonomialIdeal& a) {
  std::vector<Monomial> gens;
  for (const auto& g : a.gens) {
    Monomial s(g.size());
    for (size_t i = 0; i < g.size(); ++i) s[i] = g[i] ? 1 : 0;
    gens.push_back(std::move(s));
  }
  return make_monomial_ideal(std::move(gens), a.nvars);
}

MonomialIdeal dehomogenize_ideal(const MonomialIdeal& a) {
  std::vector<Monomial> gens;
  for (const auto& g : a.gens)
    gens.push_back(Monomial(g.begin() + 1, g.end()));
  return make_monomial_ideal(std::move(gens), a.nvars - 1);
}

}  // namespace gkz
