#include <doctest.h>

#include "gkz/groebner.hpp"

using namespace gkz;

namespace {

Binomial bino(const Monomial& p, const Monomial& m) { return {p, m}; }

KernelBasis kb_of(std::vector<std::vector<long>> vecs, int n) {
  KernelBasis kb;
  kb.n = n;
  kb.vectors = std::move(vecs);
  return kb;
}

MonomialIdeal ideal_of(std::vector<Monomial> gens, int n) {
  return make_monomial_ideal(std::move(gens), n);
}

// Exhaustive small-box membership: d^{u+} - d^{u-} must reduce to zero for
// every kernel vector u with small coordinates.
void check_kernel_membership(const IntMatrix& A,
                             const std::vector<Binomial>& gb,
                             const TermOrder& ord, long box) {
  auto kb = kernel_basis(A);
  int r = kb.count(), n = A.cols;
  std::vector<long> nu(r, -box);
  while (true) {
    std::vector<long> u(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < r; ++j) u[i] += kb.vectors[j][i] * nu[j];
    bool small = true;
    for (long x : u)
      if (x > 5 || x < -5) small = false;
    bool zero = std::all_of(u.begin(), u.end(), [](long x) { return !x; });
    if (small && !zero) {
      Binomial b;
      b.plus.assign(n, 0);
      b.minus.assign(n, 0);
      for (int i = 0; i < n; ++i) {
        if (u[i] > 0) b.plus[i] = int(u[i]);
        if (u[i] < 0) b.minus[i] = int(-u[i]);
      }
      CHECK(reduces_to_zero(b, gb, ord));
    }
    int k = 0;
    while (k < r && nu[k] == box) nu[k++] = -box;
    if (k == r) break;
    ++nu[k];
  }
}

}  // namespace

TEST_CASE("lattice basis ideal of the square configuration") {
  auto bs = lattice_basis_ideal(kb_of({{1, 1, -1}}, 3));
  REQUIRE(bs.size() == 1);
  CHECK(bs[0] == bino({1, 1, 0}, {0, 0, 1}));
  CHECK(lattice_basis_ideal(kb_of({}, 3)).empty());
}

TEST_CASE("buchberger: principal binomial ideal is its own GB") {
  TermOrder ord;
  ord.weight = {Rat(1), Rat(1), Rat(1)};
  auto gb = buchberger({bino({1, 1, 0}, {0, 0, 1})}, ord);
  REQUIRE(gb.size() == 1);
  CHECK(gb[0] == bino({1, 1, 0}, {0, 0, 1}));
}

TEST_CASE("saturation: square configuration is already saturated") {
  auto sat = saturate_toric(lattice_basis_ideal(kb_of({{1, 1, -1}}, 3)));
  REQUIRE(sat.size() == 1);
  CHECK(((sat[0] == bino({1, 1, 0}, {0, 0, 1})) ||
         (sat[0] == bino({0, 0, 1}, {1, 1, 0}))));
}

TEST_CASE("saturation: zero ideal") {
  CHECK(saturate_toric({}).empty());
}

TEST_CASE("saturation: volume-4 triangle, homogenized ring") {
  // Kernel of rho(A) for A = [[0,1,0,-1],[1,0,2,4]], lifted basis.
  auto kb = kb_of({{1, -2, 0, 1, 0}, {0, 0, -1, 2, -1}}, 5);
  auto sat = saturate_toric(lattice_basis_ideal(kb));
  // Expect the ideal <d3^2 - d2 d4, d1^2 - d0 d3>.
  std::vector<Binomial> expected = {bino({0, 2, 0, 0, 0}, {1, 0, 0, 1, 0}),
                                    bino({0, 0, 0, 2, 0}, {0, 0, 1, 0, 1})};
  TermOrder ord;  // graded lex
  for (const auto& e : expected) CHECK(reduces_to_zero(e, sat, ord));
  auto back = buchberger(expected, ord);
  for (const auto& s : sat) CHECK(reduces_to_zero(s, back, ord));
}

TEST_CASE("saturation: non-strongly-convex line configuration") {
  // ker = (1,1); lattice ideal <d1 d2 - 1> is its own saturation.
  auto sat = saturate_toric(lattice_basis_ideal(kb_of({{1, 1}}, 2)));
  REQUIRE(sat.size() == 1);
  CHECK(sat[0] == bino({1, 1}, {0, 0}));
}

TEST_CASE("membership sweep over small kernel vectors") {
  TermOrder ord;
  SUBCASE("square configuration") {
    IntMatrix A{{1, 0, 1}, {0, 1, 1}};
    auto sat = saturate_toric(lattice_basis_ideal(kernel_basis(A)));
    auto gb = buchberger(sat, ord);
    check_kernel_membership(A, gb, ord, 5);
  }
  SUBCASE("volume-4 triangle configuration") {
    IntMatrix A{{0, 1, 0, -1}, {1, 0, 2, 4}};
    auto sat = saturate_toric(lattice_basis_ideal(kernel_basis(A)));
    auto gb = buchberger(sat, ord);
    check_kernel_membership(A, gb, ord, 3);
  }
}

TEST_CASE("initial ideal of the square configuration at both weights") {
  auto gens = {bino({1, 1, 0}, {0, 0, 1})};
  SUBCASE("weight (1,1,1) picks the quadratic side") {
    auto r = initial_monomial_ideal(gens, {Rat(1), Rat(1), Rat(1)});
    REQUIRE(r.ideal.has_value());
    CHECK(*r.ideal == ideal_of({{1, 1, 0}}, 3));
  }
  SUBCASE("weight (1,1,3) picks the linear side") {
    auto r = initial_monomial_ideal(gens, {Rat(1), Rat(1), Rat(3)});
    REQUIRE(r.ideal.has_value());
    CHECK(*r.ideal == ideal_of({{0, 0, 1}}, 3));
  }
  SUBCASE("weight (1,1,2) is on the wall") {
    auto r = initial_monomial_ideal(gens, {Rat(1), Rat(1), Rat(2)});
    CHECK(!r.ideal.has_value());
    CHECK(r.tie_witness.has_value());
  }
}

TEST_CASE("initial ideal of the homogenized volume-4 triangle") {
  // in_(0,1,1,3,3)+eps = <d0 d3, d1^4, d1^2 d3, d3^2>.
  auto kb = kb_of({{1, -2, 0, 1, 0}, {0, 0, -1, 2, -1}}, 5);
  auto sat = saturate_toric(lattice_basis_ideal(kb));
  RatVec w{Rat(0), Rat(1), Rat(1), Rat(3), Rat(3)};
  ValidateOptions opt;
  opt.mask = {false, true, true, true, true};
  auto val = validate_weight(sat, w, opt);
  MonomialIdeal expect = ideal_of(
      {{1, 0, 0, 1, 0}, {0, 4, 0, 0, 0}, {0, 2, 0, 1, 0}, {0, 0, 0, 2, 0}}, 5);
  CHECK(val.initial == expect);
  CHECK(val.w[0] == 0);
  // The raw weight sits on a wall: the tie 4 w1 = 2 w0 + w2 + w4 shows up as
  // a non-monomial initial form.
  auto raw = initial_monomial_ideal(sat, w);
  CHECK(!raw.ideal.has_value());
}

TEST_CASE("validate_weight returns the input when already generic") {
  auto gens = {bino({1, 1, 0}, {0, 0, 1})};
  RatVec w{Rat(1), Rat(1), Rat(1)};
  auto val = validate_weight(gens, w);
  CHECK(val.w == w);
  CHECK(val.witnesses.size() == 2);
  for (const auto& cw : val.witnesses) {
    auto r = initial_monomial_ideal(gens, cw);
    REQUIRE(r.ideal.has_value());
    CHECK(*r.ideal == val.initial);
  }
}

TEST_CASE("GB elements stay A-homogeneous") {
  IntMatrix A{{0, 1, 0, -1}, {1, 0, 2, 4}};
  auto sat = saturate_toric(lattice_basis_ideal(kernel_basis(A)));
  TermOrder ord;
  ord.weight = {Rat(1), Rat(1), Rat(3), Rat(3)};
  auto gb = buchberger(sat, ord);
  for (const auto& g : gb)
    for (int r = 0; r < A.rows; ++r) {
      Int sp = 0, sm = 0;
      for (int i = 0; i < A.cols; ++i) {
        sp += A.at(r, i) * Int(g.plus[i]);
        sm += A.at(r, i) * Int(g.minus[i]);
      }
      CHECK(sp == sm);
    }
}

TEST_CASE("initial ideal is inclusion-monotone on a nested pair") {
  // Lattice basis ideal vs its saturation for the homogenized triangle.
  auto kb = kb_of({{1, -2, 0, 1, 0}, {0, 0, -1, 2, -1}}, 5);
  auto small = lattice_basis_ideal(kb);
  auto big = saturate_toric(small);
  RatVec w{Rat(0), Rat(1), Rat(1), Rat(3), Rat(3)};
  ValidateOptions opt;
  opt.mask = {false, true, true, true, true};
  auto val = validate_weight(big, w, opt);
  auto in_small = initial_monomial_ideal(small, val.w);
  REQUIRE(in_small.ideal.has_value());
  for (const auto& g : in_small.ideal->gens) CHECK(val.initial.contains(g));
  for (const auto& g : val.initial.gens) {
    for (const auto& h : val.initial.gens)
      if (!(g == h)) CHECK(!divides(g, h));
  }
}
