#include <doctest.h>

#include "gkz/groebner.hpp"
#include "gkz/series.hpp"

using namespace gkz;

namespace {

RatVec rv(std::vector<std::string> xs) {
  RatVec v;
  for (auto& s : xs) v.push_back(parse_rat(s));
  return v;
}

FakeExponent exp_of(RatVec v, Monomial alpha, std::set<int> sigma) {
  FakeExponent e;
  e.v = std::move(v);
  e.pair.alpha = std::move(alpha);
  e.pair.sigma = std::move(sigma);
  return e;
}

// The square-configuration exponent (0, -1/6, 1/2) for sigma = {2,3}
// (1-based), weight (1,1,1).
FakeExponent square_exponent() {
  return exp_of(rv({"0", "-1/6", "1/2"}), {0, 0, 0}, {1, 2});
}

KernelBasis square_kernel() {
  KernelBasis kb;
  kb.n = 3;
  kb.vectors = {{1, 1, -1}};
  return kb;
}

}  // namespace

TEST_CASE("support enumeration for the square configuration") {
  auto u = enumerate_support(square_exponent(), SupportKind::GenericSigma,
                             square_kernel(), rv({"1", "1", "1"}), Rat(6));
  // u = k (1,1,-1) for k = 0..6.
  REQUIRE(u.size() == 7);
  for (long k = 0; k <= 6; ++k)
    CHECK(u[k] == std::vector<long>{k, k, -k});
}

TEST_CASE("support at T = 0 is the origin alone") {
  auto u = enumerate_support(square_exponent(), SupportKind::GenericSigma,
                             square_kernel(), rv({"1", "1", "1"}), Rat(0));
  REQUIRE(u.size() == 1);
  CHECK(u[0] == std::vector<long>{0, 0, 0});
}

TEST_CASE("unbounded slice is detected") {
  // Full sigma frees every coordinate; the kernel direction has both signs.
  auto e = exp_of(rv({"1/2", "1/2", "1/2"}), {0, 0, 0}, {0, 1, 2});
  CHECK_THROWS_AS(enumerate_support(e, SupportKind::GenericSigma,
                                    square_kernel(), rv({"1", "1", "1"}),
                                    Rat(4)),
                  Error);
}

TEST_CASE("series coefficients match the hand-derived values") {
  auto s = build_series(square_exponent(), SupportKind::GenericSigma,
                        square_kernel(), rv({"1", "1", "1"}), Rat(6));
  REQUIRE(s.terms.size() == 7);
  CHECK(s.terms[0].u == std::vector<long>{0, 0, 0});
  CHECK(s.terms[0].coeff == 1);
  CHECK(s.terms[1].coeff == Rat(3, 5));     // u = (1,1,-1)
  CHECK(s.terms[2].coeff == Rat(-9, 110));  // u = (2,2,-2)
}

TEST_CASE("series terms have strictly positive weight off the origin") {
  auto s = build_series(square_exponent(), SupportKind::GenericSigma,
                        square_kernel(), rv({"1", "1", "1"}), Rat(6));
  for (size_t i = 1; i < s.terms.size(); ++i)
    CHECK(dot(s.weight, s.terms[i].u) > 0);
}

TEST_CASE("annihilation oracle on the square series") {
  auto s = build_series(square_exponent(), SupportKind::GenericSigma,
                        square_kernel(), rv({"1", "1", "1"}), Rat(6));
  IntMatrix A{{1, 0, 1}, {0, 1, 1}};
  std::vector<Binomial> gb = {{{1, 1, 0}, {0, 0, 1}}};  // d1 d2 - d3
  auto rep = annihilation_oracle(s, gb, A, rv({"1/2", "1/3"}));
  CHECK(rep.pass());
  CHECK(rep.toric_pairs_checked > 0);

  SUBCASE("corrupting one coefficient is detected at adjacent pairs") {
    auto bad = s;
    bad.terms[2].coeff += 1;
    auto rep2 = annihilation_oracle(bad, gb, A, rv({"1/2", "1/3"}));
    CHECK(!rep2.pass());
    CHECK(rep2.euler.empty());  // exponents unchanged
    // Every violation involves the corrupted term's kernel translate.
    for (const auto& v : rep2.toric) {
      bool adjacent = v.u == std::vector<long>{2, 2, -2} ||
                      v.u == std::vector<long>{1, 1, -1} ||
                      v.u == std::vector<long>{3, 3, -3};
      CHECK(adjacent);
    }
  }
  SUBCASE("corrupting the exponent trips the Euler check") {
    auto bad = s;
    bad.exponent.v[0] += 1;  // A v no longer equals beta
    auto rep2 = annihilation_oracle(bad, gb, A, rv({"1/2", "1/3"}));
    CHECK(!rep2.euler.empty());
  }
}

TEST_CASE("oracle is vacuous at T = 0") {
  auto s = build_series(square_exponent(), SupportKind::GenericSigma,
                        square_kernel(), rv({"1", "1", "1"}), Rat(0));
  IntMatrix A{{1, 0, 1}, {0, 1, 1}};
  std::vector<Binomial> gb = {{{1, 1, 0}, {0, 0, 1}}};
  auto rep = annihilation_oracle(s, gb, A, rv({"1/2", "1/3"}));
  CHECK(rep.pass());
  CHECK(rep.toric_pairs_checked == 0);
}

TEST_CASE("homogenizing value selection") {
  SUBCASE("|v| in {1/3, 1/2} picks 1/5") {
    std::vector<FakeExponent> exps = {square_exponent(),
                                      exp_of(rv({"1/6", "0", "1/3"}), {0, 0, 0},
                                             {0, 2})};
    CHECK(homogenizing_value(exps) == Rat(1, 5));
  }
  SUBCASE("|v| = 0 picks 1/2") {
    std::vector<FakeExponent> exps = {exp_of(rv({"0", "0"}), {0, 0}, {0, 1})};
    CHECK(homogenizing_value(exps) == Rat(1, 2));
  }
  SUBCASE("|v| = 1/2 picks 1/3") {
    std::vector<FakeExponent> exps = {
        exp_of(rv({"1/4", "1/4"}), {0, 0}, {0, 1})};
    CHECK(homogenizing_value(exps) == Rat(1, 3));
  }
  SUBCASE("invalid hint is rejected") {
    std::vector<FakeExponent> exps = {square_exponent()};
    CHECK_THROWS_AS(homogenizing_value(exps, Rat(1, 3) + 1),  // 4/3 - 1/3 = 1
                    Error);
  }
}

TEST_CASE("homogenization and dehomogenization round trip") {
  auto s = build_series(square_exponent(), SupportKind::GenericSigma,
                        square_kernel(), rv({"1", "1", "1"}), Rat(6));
  auto psi = homogenize_series(s, Rat(1, 5));
  // Exponent (beta0 - |v|, v) with |v| = 1/3.
  CHECK(psi.exponent.v[0] == Rat(1, 5) - Rat(1, 3));
  CHECK(psi.exponent.v[1] == 0);
  CHECK(psi.exponent.v[2] == Rat(-1, 6));
  CHECK(psi.exponent.v[3] == Rat(1, 2));
  // Terms map u -> (-|u|, u); del0^{|u|} rescales the k = 1 coefficient by
  // [v0]_1 = -2/15, giving (3/5)(-2/15) = -2/25.
  CHECK(psi.terms[1].u == std::vector<long>{-1, 1, 1, -1});
  CHECK(psi.terms[1].coeff == Rat(-2, 25));
  auto back = dehomogenize_series(psi);
  REQUIRE(back.terms.size() == s.terms.size());
  for (size_t i = 0; i < s.terms.size(); ++i) {
    CHECK(back.terms[i].u == s.terms[i].u);
    CHECK(back.terms[i].coeff == s.terms[i].coeff);
  }
  CHECK(back.exponent.v == s.exponent.v);
}

TEST_CASE("dehomogenization requires a non-integer zeroth coordinate") {
  TruncatedSeries psi;
  psi.exponent.v = rv({"2", "0", "-1/6", "1/2"});
  psi.weight = rv({"0", "1", "1", "1"});
  CHECK_THROWS_AS(dehomogenize_series(psi), Error);
}

TEST_CASE("zero-kernel system yields the single trivial series") {
  IntMatrix A{{1, 0}, {0, 1}};
  KernelBasis kb;
  kb.n = 2;
  auto e = exp_of(rv({"2/7", "5/3"}), {0, 0}, {0, 1});
  auto s = build_series(e, SupportKind::GenericSigma, kb, rv({"1", "1"}),
                        Rat(10));
  REQUIRE(s.terms.size() == 1);
  CHECK(s.terms[0].coeff == 1);
  auto psi = homogenize_series(s, homogenizing_value({e}));
  CHECK(psi.terms.size() == 1);
  auto back = dehomogenize_series(psi);
  CHECK(back.terms.size() == 1);
}
