#include <doctest.h>

#include "gkz/standard_pairs.hpp"

using namespace gkz;

namespace {

MonomialIdeal ideal_of(std::vector<Monomial> gens, int n) {
  return make_monomial_ideal(std::move(gens), n);
}

// Exhaustive cover oracle: a monomial with entries <= box is outside I iff
// at least one standard pair covers it.
void check_cover(const MonomialIdeal& I, const StandardPairSet& S, int box) {
  int n = I.nvars;
  std::vector<int> m(n, 0);
  while (true) {
    bool covered = false;
    for (const auto& p : S.pairs)
      if (pair_covers(p, m)) { covered = true; break; }
    CHECK(covered == !I.contains(m));
    int k = 0;
    while (k < n && m[k] == box) m[k++] = 0;
    if (k == n) break;
    ++m[k];
  }
}

int max_gen_degree(const MonomialIdeal& I) {
  int d = 0;
  for (const auto& g : I.gens)
    for (int e : g) d = std::max(d, e);
  return d;
}

}  // namespace

TEST_CASE("standard pairs of <d1 d2> in three variables") {
  auto I = ideal_of({{1, 1, 0}}, 3);
  auto S = standard_pairs(I, 3);
  REQUIRE(S.pairs.size() == 2);
  CHECK(S.pairs[0].sigma == std::set<int>{0, 2});
  CHECK(S.pairs[1].sigma == std::set<int>{1, 2});
  for (const auto& p : S.pairs) CHECK(is_one(p.alpha));
  check_cover(I, S, max_gen_degree(I) + 2);
}

TEST_CASE("standard pairs of the zero ideal") {
  auto I = ideal_of({}, 4);
  auto S = standard_pairs(I, 4);
  REQUIRE(S.pairs.size() == 1);
  CHECK(S.pairs[0].sigma == std::set<int>{0, 1, 2, 3});
  CHECK(is_one(S.pairs[0].alpha));
}

TEST_CASE("standard pairs of the homogenized volume-4 triangle initial ideal") {
  auto I = ideal_of(
      {{1, 0, 0, 1, 0}, {0, 4, 0, 0, 0}, {0, 2, 0, 1, 0}, {0, 0, 0, 2, 0}}, 5);
  auto S = standard_pairs(I, 5);
  auto top = top_standard_pairs(S, 3);
  REQUIRE(top.degree == 4);
  for (int j = 0; j < 4; ++j) {
    CHECK(top.pairs.pairs[j].sigma == std::set<int>{0, 2, 4});
    CHECK(top.pairs.pairs[j].alpha == Monomial{0, j, 0, 0, 0});
  }
  // Embedded pairs exist and are retained.
  CHECK(S.pairs.size() > 4);
  check_cover(I, S, max_gen_degree(I) + 2);
  auto tz = pairs_through_zero(top.pairs);
  CHECK(tz.pairs.size() == 4);
}

TEST_CASE("top pairs and degree for the square configuration ideals") {
  SUBCASE("in = <d1 d2>: two top pairs, degree 2") {
    auto S = standard_pairs(ideal_of({{1, 1, 0}}, 3), 3);
    auto top = top_standard_pairs(S, 2);
    CHECK(top.degree == 2);
  }
  SUBCASE("in = <d3>: one top pair, degree 1") {
    auto S = standard_pairs(ideal_of({{0, 0, 1}}, 3), 3);
    auto top = top_standard_pairs(S, 2);
    REQUIRE(top.degree == 1);
    CHECK(top.pairs.pairs[0].sigma == std::set<int>{0, 1});
    CHECK(is_one(top.pairs.pairs[0].alpha));
  }
}

TEST_CASE("tp ideal computations") {
  SUBCASE("<d1 d2> intersects back to itself") {
    auto S = standard_pairs(ideal_of({{1, 1, 0}}, 3), 3);
    auto top = top_standard_pairs(S, 2);
    CHECK(tp_ideal(top.pairs) == ideal_of({{1, 1, 0}}, 3));
  }
  SUBCASE("<d3> stays <d3>") {
    auto S = standard_pairs(ideal_of({{0, 0, 1}}, 3), 3);
    auto top = top_standard_pairs(S, 2);
    CHECK(tp_ideal(top.pairs) == ideal_of({{0, 0, 1}}, 3));
  }
  SUBCASE("volume-4 triangle: exact intersection over the four pairs") {
    auto S = standard_pairs(
        ideal_of({{1, 0, 0, 1, 0}, {0, 4, 0, 0, 0}, {0, 2, 0, 1, 0},
                  {0, 0, 0, 2, 0}},
                 5),
        5);
    auto top = top_standard_pairs(S, 3);
    // Each pair gives <d1^{j+1}, d3>; the intersection is <d1^4, d3>.
    CHECK(tp_ideal(top.pairs) ==
          ideal_of({{0, 4, 0, 0, 0}, {0, 0, 0, 1, 0}}, 5));
  }
}

TEST_CASE("pairs through zero filters by membership of index 0") {
  StandardPairSet S;
  S.nvars = 4;
  StandardPair a, b;
  a.alpha.assign(4, 0);
  a.sigma = {0, 1, 2};
  b.alpha.assign(4, 0);
  b.sigma = {1, 2, 3};
  S.pairs = {a, b};
  auto tz = pairs_through_zero(S);
  REQUIRE(tz.pairs.size() == 1);
  CHECK(tz.pairs[0].sigma == std::set<int>{0, 1, 2});
  CHECK(pairs_through_zero(StandardPairSet{{}, 4}).pairs.empty());
}

TEST_CASE("dehomogenization of initial ideals") {
  SUBCASE("volume-4 triangle: d0 -> 1 gives <d3, d1^4>") {
    auto I = ideal_of(
        {{1, 0, 0, 1, 0}, {0, 4, 0, 0, 0}, {0, 2, 0, 1, 0}, {0, 0, 0, 2, 0}},
        5);
    CHECK(dehomogenize_ideal(I) ==
          ideal_of({{0, 0, 1, 0}, {4, 0, 0, 0}}, 4));
  }
  SUBCASE("no d0 anywhere: unchanged") {
    auto I = ideal_of({{0, 1, 1, 0}}, 4);
    CHECK(dehomogenize_ideal(I) == ideal_of({{1, 1, 0}}, 3));
  }
}

TEST_CASE("cover property on a random battery of monomial ideals") {
  unsigned long seed = 424242;
  auto next = [&] {
    seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
    return int((seed >> 33) % 4);
  };
  for (int trial = 0; trial < 12; ++trial) {
    int n = 3 + trial % 2;
    std::vector<Monomial> gens;
    for (int g = 0; g < 2 + trial % 3; ++g) {
      Monomial m(n, 0);
      for (int i = 0; i < n; ++i) m[i] = next();
      if (!is_one(m)) gens.push_back(m);
    }
    auto I = make_monomial_ideal(gens, n);
    auto S = standard_pairs(I, n);
    check_cover(I, S, max_gen_degree(I) + 2);
  }
}
