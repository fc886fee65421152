#ifndef GKZ_STANDARD_PAIRS_HPP
#define GKZ_STANDARD_PAIRS_HPP

#include <set>

#include "gkz/monomial.hpp"

namespace gkz {

// (d^alpha, sigma): alpha_i = 0 for i in sigma; alpha + N^sigma disjoint
// from the ideal.
struct StandardPair {
  Monomial alpha;
  std::set<int> sigma;
  bool operator==(const StandardPair& o) const {
    return alpha == o.alpha && sigma == o.sigma;
  }
  bool operator<(const StandardPair& o) const {
    if (sigma != o.sigma) return sigma < o.sigma;
    return alpha < o.alpha;
  }
};

struct StandardPairSet {
  std::vector<StandardPair> pairs;  // canonical order: (sigma, alpha) lex
  int nvars = 0;
};

// Complete, duplicate-free set of standard pairs of I (embedded included).
StandardPairSet standard_pairs(const MonomialIdeal& I, int nvars);

// Pairs with |sigma| == dim, plus the degree (= their count).
struct TopPairs {
  StandardPairSet pairs;
  int degree = 0;
};
TopPairs top_standard_pairs(const StandardPairSet& S, int dim);

// tp(I) = intersection over top pairs of <d_i^{alpha_i + 1} : i not in sigma>.
MonomialIdeal tp_ideal(const StandardPairSet& top);

// Subset with 0 in sigma (homogenized ring).
StandardPairSet pairs_through_zero(const StandardPairSet& S);

// Monomial covered by the pair region alpha + N^sigma?
bool pair_covers(const StandardPair& p, const Monomial& m);

}  // namespace gkz

#endif
