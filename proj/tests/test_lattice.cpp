#include <doctest.h>

#include "gkz/lattice.hpp"
#include "gkz/snf.hpp"

using namespace gkz;

namespace {

// Independent oracle for a Smith form: U M V = S, |det U| = |det V| = 1,
// S diagonal with a divisibility chain.
void check_smith(const IntMatrix& M) {
  auto sf = smith_form(M);
  CHECK(mul(mul(sf.U, M), sf.V) == sf.S);
  CHECK(abs(det(sf.U)) == 1);
  CHECK(abs(det(sf.V)) == 1);
  for (int i = 0; i < sf.S.rows; ++i)
    for (int j = 0; j < sf.S.cols; ++j)
      if (i != j) CHECK(sf.S.at(i, j) == 0);
  int lim = std::min(sf.S.rows, sf.S.cols);
  for (int i = 0; i + 1 < lim; ++i) {
    if (sf.S.at(i + 1, i + 1) == 0) continue;
    CHECK(sf.S.at(i, i) != 0);
    CHECK(sf.S.at(i + 1, i + 1) % sf.S.at(i, i) == 0);
  }
}

}  // namespace

TEST_CASE("smith form: identity") {
  auto sf = smith_form(IntMatrix::identity(2));
  CHECK(sf.S == IntMatrix::identity(2));
  check_smith(IntMatrix::identity(2));
}

TEST_CASE("smith form: diag(2,3) has invariants 1,6") {
  IntMatrix M{{2, 0}, {0, 3}};
  auto sf = smith_form(M);
  CHECK(sf.S.at(0, 0) == 1);
  CHECK(sf.S.at(1, 1) == 6);
  check_smith(M);
}

TEST_CASE("smith form: wide unimodular-span matrix") {
  IntMatrix M{{1, 0, 1}, {0, 1, 1}};
  auto sf = smith_form(M);
  CHECK(sf.S.at(0, 0) == 1);
  CHECK(sf.S.at(1, 1) == 1);
  CHECK(sf.S.at(0, 2) == 0);
  CHECK(sf.S.at(1, 2) == 0);
  check_smith(M);
}

TEST_CASE("smith form: random small matrices satisfy the oracle") {
  unsigned long seed = 12345;
  auto next = [&] {
    seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
    return long((seed >> 33) % 9) - 4;
  };
  for (int trial = 0; trial < 30; ++trial) {
    IntMatrix M(2 + trial % 2, 3 + trial % 3);
    for (auto& x : M.a) x = next();
    check_smith(M);
  }
}

TEST_CASE("kernel basis: injective matrix has empty kernel") {
  CHECK(kernel_basis(IntMatrix::identity(2)).empty());
}

TEST_CASE("kernel basis: 2x3 square configuration") {
  IntMatrix A{{1, 0, 1}, {0, 1, 1}};
  auto kb = kernel_basis(A);
  REQUIRE(kb.count() == 1);
  CHECK(spans_kernel_lattice(A, kb.vectors));
  CHECK(spans_kernel_lattice(A, {{1, 1, -1}}));
  bool matches = kb.vectors[0] == std::vector<long>{1, 1, -1} ||
                 kb.vectors[0] == std::vector<long>{-1, -1, 1};
  CHECK(matches);
}

TEST_CASE("kernel basis: volume-4 triangle configuration") {
  IntMatrix A{{0, 1, 0, -1}, {1, 0, 2, 4}};
  auto kb = kernel_basis(A);
  REQUIRE(kb.count() == 2);
  CHECK(spans_kernel_lattice(A, kb.vectors));
  CHECK(spans_kernel_lattice(A, {{-2, 0, 1, 0}, {0, -1, 2, -1}}));
}

TEST_CASE("kernel basis: rank-deficient input is rejected") {
  IntMatrix A{{1, 1}, {2, 2}};
  CHECK_THROWS_AS(kernel_basis(A), Error);
}

TEST_CASE("kernel vectors satisfy A gamma = 0 exactly") {
  IntMatrix A{{2, 0, 1, 2, 2}, {0, 2, 2, 1, 2}};
  auto kb = kernel_basis(A);
  REQUIRE(kb.count() == 3);
  for (const auto& g : kb.vectors)
    for (int r = 0; r < A.rows; ++r) {
      Int s = 0;
      for (int j = 0; j < A.cols; ++j) s += A.at(r, j) * Int(g[j]);
      CHECK(s == 0);
    }
}

TEST_CASE("homogenize: 1x2 line configuration") {
  IntMatrix A(1, 2);
  A.at(0, 0) = -1;
  A.at(0, 1) = 1;
  IntMatrix R = homogenize_matrix(A);
  CHECK(R == IntMatrix{{1, 1, 1}, {0, -1, 1}});
}

TEST_CASE("homogenize: square configuration columns") {
  IntMatrix A{{1, 0, 1}, {0, 1, 1}};
  IntMatrix R = homogenize_matrix(A);
  CHECK(R.col(0) == IntVec{1, 0, 0});
  CHECK(R.col(1) == IntVec{1, 1, 0});
  CHECK(R.col(2) == IntVec{1, 0, 1});
  CHECK(R.col(3) == IntVec{1, 1, 1});
}

TEST_CASE("homogenize: first row all ones") {
  IntMatrix A{{0, 1, 0, -1}, {1, 0, 2, 4}};
  IntMatrix R = homogenize_matrix(A);
  CHECK(R.rows == 3);
  CHECK(R.cols == 5);
  for (int j = 0; j < 5; ++j) CHECK(R.at(0, j) == 1);
}

TEST_CASE("orient kernel flips against the weight") {
  IntMatrix A{{0, 1, 0, -1}, {1, 0, 2, 4}};
  auto kb = kernel_basis(A);
  RatVec w{Rat(1), Rat(1), Rat(3), Rat(3)};
  auto ok = orient_kernel(kb, w);
  for (const auto& g : ok.vectors) CHECK(dot(w, g) > 0);
  std::vector<std::vector<long>> expect{{-2, 0, 1, 0}, {0, -1, 2, -1}};
  CHECK(ok.vectors == expect);
}

TEST_CASE("gale dual with preferred kernel: line configuration") {
  IntMatrix A(1, 2);
  A.at(0, 0) = -1;
  A.at(0, 1) = 1;
  auto kb = kernel_basis(A);  // {(1,1)}
  REQUIRE(kb.vectors == std::vector<std::vector<long>>{{1, 1}});
  auto B = gale_dual(homogenize_matrix(A), kb);
  REQUIRE(B.codim() == 1);
  CHECK(B.rows[0][0] == -2);
  CHECK(B.rows[1][0] == 1);
  CHECK(B.rows[2][0] == 1);
}

TEST_CASE("gale dual rows: volume-4 triangle, oriented kernel") {
  IntMatrix A{{0, 1, 0, -1}, {1, 0, 2, 4}};
  RatVec w{Rat(1), Rat(1), Rat(3), Rat(3)};
  auto kb = orient_kernel(kernel_basis(A), w);
  auto B = gale_dual(homogenize_matrix(A), kb);
  REQUIRE(B.codim() == 2);
  auto row = [&](int i) { return std::pair(B.rows[i][0], B.rows[i][1]); };
  CHECK(row(0) == std::pair(Rat(1), Rat(0)));
  CHECK(row(1) == std::pair(Rat(-2), Rat(0)));
  CHECK(row(2) == std::pair(Rat(0), Rat(-1)));
  CHECK(row(3) == std::pair(Rat(1), Rat(2)));
  CHECK(row(4) == std::pair(Rat(0), Rat(-1)));
}

TEST_CASE("gale dual invariant: -b0 equals the sum of the other rows") {
  for (auto A : {IntMatrix{{1, 0, 1}, {0, 1, 1}},
                 IntMatrix{{2, 0, 1, 2, 2}, {0, 2, 2, 1, 2}}}) {
    auto B = gale_dual(homogenize_matrix(A));
    for (int k = 0; k < B.codim(); ++k) {
      Rat s = 0;
      for (size_t i = 1; i < B.rows.size(); ++i) s += B.rows[i][k];
      CHECK(s == -B.rows[0][k]);
    }
  }
}

TEST_CASE("lattice span check rejects a non-spanning configuration") {
  IntMatrix A{{2, 0}, {0, 2}};
  CHECK(!lattice_span_ok(A));
  CHECK(lattice_span_ok(IntMatrix{{1, 0, 1}, {0, 1, 1}}));
}
