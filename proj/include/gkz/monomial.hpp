#ifndef GKZ_MONOMIAL_HPP
#define GKZ_MONOMIAL_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "gkz/numbers.hpp"

namespace gkz {

// Monomial in variables d0..d{m-1} (or d1..dn for the unhomogenized ring;
// callers track the labeling), as an exponent vector.
using Monomial = std::vector<int>;

inline int total_degree(const Monomial& m) {
  int s = 0;
  for (int e : m) s += e;
  return s;
}

inline bool divides(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Monomial mono_div(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline bool is_one(const Monomial& m) {
  for (int e : m) if (e) return false;
  return true;
}

std::string mono_str(const Monomial& m, int index_base = 0);

// Pure-difference binomial  d^plus - d^minus.
struct Binomial {
  Monomial plus, minus;
  bool operator==(const Binomial& o) const {
    return plus == o.plus && minus == o.minus;
  }
};

// Term order: cascade of (rational weight) -> (integer grading) ->
// (cheapest variable, reverse) -> total degree -> lex with d0 > d1 > ...
// The default cascade (weight only) refines a w-weight by graded lex,
// which is the fixed global tiebreak.
struct TermOrder {
  RatVec weight;               // optional, empty = skip
  std::vector<long> grading;   // optional positive grading, empty = skip
  int cheapest = -1;           // optional revlex-cheapest variable

  // -1, 0, +1 for a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) < 0;
  }

  // Weight of a monomial under the rational weight vector alone.
  Rat w_of(const Monomial& m) const;
};

// Minimal-generator monomial ideal.
struct MonomialIdeal {
  std::vector<Monomial> gens;  // minimal, sorted
  int nvars = 0;

  bool contains(const Monomial& m) const {
    for (const auto& g : gens)
      if (divides(g, m)) return true;
    return false;
  }
  bool is_zero() const { return gens.empty(); }
  bool operator==(const MonomialIdeal& o) const {
    return nvars == o.nvars && gens == o.gens;
  }
};

MonomialIdeal make_monomial_ideal(std::vector<Monomial> gens, int nvars);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal radical(const MonomialIdeal& a);

// Substitute d0 -> 1: drop coordinate 0 of every generator, re-minimalize.
MonomialIdeal dehomogenize_ideal(const MonomialIdeal& a);

}  // namespace gkz

#endif
