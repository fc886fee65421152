#include "gkz/standard_pairs.hpp"

#include <algorithm>
#include <map>

namespace gkz {

namespace {

// Recursion state: active variables (indices into the full ring) and the
// ideal's generators restricted to them. Memoized on a canonical key.
struct PairEnumerator {
  int nvars;
  std::map<std::string, std::vector<StandardPair>> memo;

  std::string key(const std::vector<int>& active,
                  const std::vector<Monomial>& gens) {
    std::string k;
    for (int v : active) k += std::to_string(v) + ",";
    k += "|";
    for (const auto& g : gens) {
      for (int e : g) k += std::to_string(e) + ",";
      k += ";";
    }
    return k;
  }

  // Pairs of the ideal generated by `gens` in the variables `active`;
  // alpha entries live only on active variables.
  std::vector<StandardPair> run(const std::vector<int>& active,
                                std::vector<Monomial> gens) {
    // Minimalize within the slice.
    {
      std::vector<Monomial> red;
      std::sort(gens.begin(), gens.end());
      gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
      for (size_t i = 0; i < gens.size(); ++i) {
        bool drop = false;
        for (size_t j = 0; j < gens.size() && !drop; ++j)
          if (i != j && divides(gens[j], gens[i]) &&
              !(gens[j] == gens[i] && j > i))
            drop = true;
        if (!drop) red.push_back(gens[i]);
      }
      gens = std::move(red);
    }
    for (const auto& g : gens)
      if (is_one(g)) return {};  // unit ideal: no standard monomials
    if (gens.empty()) {
      StandardPair p;
      p.alpha.assign(nvars, 0);
      p.sigma.insert(active.begin(), active.end());
      return {p};
    }
    auto k = key(active, gens);
    auto it = memo.find(k);
    if (it != memo.end()) return it->second;

    // Branch on the first generator: some variable of its support must be
    // bounded below its exponent in any admissible region.
    const Monomial g0 = gens.front();
    std::vector<StandardPair> collected;
    for (int i : active) {
      if (g0[i] == 0) continue;
      for (int c = 0; c < g0[i]; ++c) {
        std::vector<int> sub_active;
        for (int v : active)
          if (v != i) sub_active.push_back(v);
        std::vector<Monomial> slice;
        for (const auto& g : gens) {
          if (g[i] > c) continue;  // cannot constrain this slice
          Monomial h = g;
          h[i] = 0;
          slice.push_back(std::move(h));
        }
        for (auto& p : run(sub_active, std::move(slice))) {
          p.alpha[i] = c;
          collected.push_back(std::move(p));
        }
      }
    }
    // Keep only maximal regions.
    std::sort(collected.begin(), collected.end());
    collected.erase(std::unique(collected.begin(), collected.end()),
                    collected.end());
    std::vector<StandardPair> maximal;
    auto contained = [&](const StandardPair& a, const StandardPair& b) {
      // region(a) subset of region(b)?
      for (int v : a.sigma)
        if (!b.sigma.count(v)) return false;
      for (int v = 0; v < nvars; ++v) {
        if (b.sigma.count(v)) continue;
        if (a.alpha[v] != b.alpha[v]) return false;
      }
      return true;
    };
    for (const auto& p : collected) {
      bool strictly_inside = false;
      for (const auto& q : collected) {
        if (p == q) continue;
        if (contained(p, q)) { strictly_inside = true; break; }
      }
      if (!strictly_inside) maximal.push_back(p);
    }
    memo[k] = maximal;
    return maximal;
  }
};

}  // namespace

StandardPairSet standard_pairs(const MonomialIdeal& I, int nvars) {
  PairEnumerator en;
  en.nvars = nvars;
  std::vector<int> active(nvars);
  for (int i = 0; i < nvars; ++i) active[i] = i;
  StandardPairSet out;
  out.nvars = nvars;
  out.pairs = en.run(active, I.gens);
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

TopPairs top_standard_pairs(const StandardPairSet& S, int dim) {
  TopPairs t;
  t.pairs.nvars = S.nvars;
  for (const auto& p : S.pairs)
    if (int(p.sigma.size()) == dim) t.pairs.pairs.push_back(p);
  t.degree = int(t.pairs.pairs.size());
  return t;
}

MonomialIdeal tp_ideal(const StandardPairSet& top) {
  if (top.pairs.empty()) return make_monomial_ideal({}, top.nvars);
  bool first = true;
  MonomialIdeal acc;
  for (const auto& p : top.pairs) {
    std::vector<Monomial> gens;
    for (int i = 0; i < top.nvars; ++i) {
      if (p.sigma.count(i)) continue;
      Monomial m(top.nvars, 0);
      m[i] = p.alpha[i] + 1;
      gens.push_back(std::move(m));
    }
    MonomialIdeal comp = make_monomial_ideal(std::move(gens), top.nvars);
    acc = first ? comp : intersect(acc, comp);
    first = false;
  }
  return acc;
}

StandardPairSet pairs_through_zero(const StandardPairSet& S) {
  StandardPairSet out;
  out.nvars = S.nvars;
  for (const auto& p : S.pairs)
    if (p.sigma.count(0)) out.pairs.push_back(p);
  return out;
}

bool pair_covers(const StandardPair& p, const Monomial& m) {
  for (size_t i = 0; i < m.size(); ++i) {
    if (p.sigma.count(int(i))) {
      if (m[i] < p.alpha[i]) return false;  // alpha_i = 0 here anyway
    } else if (m[i] != p.alpha[i]) {
      return false;
    }
  }
  return true;
}

}  // namespace gkz
