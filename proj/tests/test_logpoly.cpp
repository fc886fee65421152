#include <doctest.h>

#include "gkz/logpoly.hpp"

using namespace gkz;

namespace {

KernelBasis square_kernel() {
  KernelBasis kb;
  kb.n = 3;
  kb.vectors = {{1, 1, -1}};
  return kb;
}

LogPolynomial from_terms(int nvars,
                         std::vector<std::pair<std::vector<int>, Rat>> ts) {
  LogPolynomial p;
  p.nvars = nvars;
  for (auto& [e, c] : ts) p.add_term(e, c);
  return p;
}

}  // namespace

TEST_CASE("hat lift of the constant polynomial") {
  KernelFormPoly p;
  p.coeffs[{0}] = 1;
  auto lifted = hat_lift(p, square_kernel());
  CHECK(lifted == from_terms(4, {{{0, 0, 0, 0}, Rat(1)}}));
}

TEST_CASE("hat lift of a single linear form") {
  // gamma = (1,1,-1), |gamma| = 1: gamma.t -> -t0 + t1 + t2 - t3.
  KernelFormPoly p;
  p.coeffs[{1}] = 1;
  auto lifted = hat_lift(p, square_kernel());
  CHECK(lifted == from_terms(4, {{{1, 0, 0, 0}, Rat(-1)},
                                 {{0, 1, 0, 0}, Rat(1)},
                                 {{0, 0, 1, 0}, Rat(1)},
                                 {{0, 0, 0, 1}, Rat(-1)}}));
  // Setting t0 = 0 recovers the plain expansion.
  CHECK(substitute_zero(lifted, 0) ==
        from_terms(4, {{{0, 1, 0, 0}, Rat(1)},
                       {{0, 0, 1, 0}, Rat(1)},
                       {{0, 0, 0, 1}, Rat(-1)}}));
}

TEST_CASE("hat lift of a square expands and specializes correctly") {
  KernelFormPoly p;
  p.coeffs[{2}] = 1;  // (gamma.t)^2
  auto kb = square_kernel();
  auto lifted = hat_lift(p, kb);
  auto plainx = expand_kernel_form(p, kb);
  // Compare t0 = 0 specialization with the n-variable expansion shifted by
  // one slot.
  auto specialized = substitute_zero(lifted, 0);
  LogPolynomial shifted;
  shifted.nvars = 4;
  for (const auto& [e, c] : plainx.coeffs) {
    std::vector<int> e4(4, 0);
    for (int i = 0; i < 3; ++i) e4[i + 1] = e[i];
    shifted.add_term(e4, c);
  }
  CHECK(specialized == shifted);
}

TEST_CASE("del0 inverse of a constant") {
  auto p = LogPolynomial::constant(1, Rat(1));
  auto q = del0_inverse(p, Rat(1, 2));
  CHECK(q == from_terms(1, {{{0}, Rat(2, 3)}}));
}

TEST_CASE("del0 inverse of t0 at s0 = 1/2") {
  auto p = LogPolynomial::variable(1, 0);
  auto q = del0_inverse(p, Rat(1, 2));
  CHECK(q == from_terms(1, {{{1}, Rat(2, 3)}, {{0}, Rat(-4, 9)}}));
}

TEST_CASE("del0 forward-inverse round trip on random polynomials") {
  unsigned long seed = 20240601;
  auto next = [&] {
    seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
    return long((seed >> 33) % 19) - 9;
  };
  for (int trial = 0; trial < 50; ++trial) {
    LogPolynomial p;
    p.nvars = 2;
    for (int t0 = 0; t0 <= 6; ++t0)
      for (int t1 = 0; t1 + t0 <= 6; ++t1) {
        long num = next();
        long den = 1 + std::abs(next()) % 7;
        if (num) p.add_term({t0, t1}, make_rat(Int(num), Int(den)));
      }
    if (p.is_zero()) continue;
    Rat s0(next() * 2 + 1, 2);  // odd halves are never -1
    auto q = del0_inverse(p, s0);
    CHECK(del0_forward(q, s0) == p);
    CHECK(q.degree_in(0) == p.degree_in(0));
  }
}

TEST_CASE("forbidden s0 raises") {
  auto p = LogPolynomial::constant(1, Rat(3));
  CHECK_THROWS_AS(del0_inverse(p, Rat(-1)), Error);
}
