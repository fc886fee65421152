#include <doctest.h>

#include "gkz/linprog.hpp"

using namespace gkz;

TEST_CASE("strong convexity: square configuration has a certificate") {
  IntMatrix A{{1, 0, 1}, {0, 1, 1}};
  auto h = strong_convexity_certificate(A);
  REQUIRE(h.has_value());
  for (int j = 0; j < A.cols; ++j) {
    Rat acc = 0;
    for (int i = 0; i < A.rows; ++i) acc += (*h)[i] * Rat(A.at(i, j));
    CHECK(acc > 0);
  }
  // (1,1) itself works: h.A = (1,1,2).
  RatVec ones{Rat(1), Rat(1)};
  for (int j = 0; j < A.cols; ++j) {
    Rat acc = 0;
    for (int i = 0; i < A.rows; ++i) acc += ones[i] * Rat(A.at(i, j));
    CHECK(acc > 0);
  }
  CHECK(!zero_in_positive_hull(A));
}

TEST_CASE("strong convexity: line configuration has none") {
  IntMatrix A(1, 2);
  A.at(0, 0) = -1;
  A.at(0, 1) = 1;
  CHECK(!strong_convexity_certificate(A).has_value());
  // Gordan dual cross-check: 0 is a nonneg nonzero combination of columns.
  CHECK(zero_in_positive_hull(A));
}

TEST_CASE("strong convexity: two-square configuration") {
  IntMatrix A{{2, 0, 1, 2, 2}, {0, 2, 2, 1, 2}};
  auto h = strong_convexity_certificate(A);
  REQUIRE(h.has_value());
  for (int j = 0; j < A.cols; ++j) {
    Rat acc = 0;
    for (int i = 0; i < A.rows; ++i) acc += (*h)[i] * Rat(A.at(i, j));
    CHECK(acc > 0);
  }
  CHECK(!zero_in_positive_hull(A));
}

TEST_CASE("gordan alternative on random configurations") {
  unsigned long seed = 777;
  auto next = [&] {
    seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
    return long((seed >> 33) % 7) - 3;
  };
  for (int trial = 0; trial < 40; ++trial) {
    IntMatrix A(2, 4);
    for (auto& x : A.a) x = next();
    bool cert = strong_convexity_certificate(A).has_value();
    bool hull = zero_in_positive_hull(A);
    CHECK(cert != hull);
  }
}

TEST_CASE("feasible point honors strict constraints") {
  // x > 1, x < 2
  FourierMotzkin fm(1);
  LinSystem sys;
  sys.push_back({{Rat(1)}, Rat(1), true});
  sys.push_back({{Rat(-1)}, Rat(-2), true});
  auto p = fm.feasible_point(sys);
  REQUIRE(p.has_value());
  CHECK((*p)[0] > 1);
  CHECK((*p)[0] < 2);
  sys.push_back({{Rat(1)}, Rat(2), false});  // x >= 2 contradicts x < 2
  CHECK(!fm.feasible_point(sys).has_value());
}

TEST_CASE("projection interval is exact") {
  // Triangle nu1 >= 0, nu2 >= 0, nu1 + 2 nu2 <= 3.
  FourierMotzkin fm(2);
  LinSystem sys;
  sys.push_back({{Rat(1), Rat(0)}, Rat(0), false});
  sys.push_back({{Rat(0), Rat(1)}, Rat(0), false});
  sys.push_back({{Rat(-1), Rat(-2)}, Rat(-3), false});
  auto iv0 = fm.project_interval(sys, 0);
  REQUIRE(iv0.lo.has_value());
  REQUIRE(iv0.hi.has_value());
  CHECK(*iv0.lo == 0);
  CHECK(*iv0.hi == 3);
  auto iv1 = fm.project_interval(sys, 1);
  CHECK(*iv1.hi == Rat(3, 2));
}

TEST_CASE("integer points of a small polytope") {
  FourierMotzkin fm(2);
  LinSystem sys;
  sys.push_back({{Rat(1), Rat(0)}, Rat(0), false});
  sys.push_back({{Rat(0), Rat(1)}, Rat(0), false});
  sys.push_back({{Rat(-1), Rat(-2)}, Rat(-3), false});
  auto pts = integer_points(sys, 2);
  // (0,0),(1,0),(2,0),(3,0),(0,1),(1,1)
  CHECK(pts.size() == 6);
  for (const auto& p : pts) CHECK(p[0] + 2 * p[1] <= 3);
}

TEST_CASE("integer points: unbounded slice raises") {
  FourierMotzkin fm(1);
  LinSystem sys;
  sys.push_back({{Rat(1)}, Rat(0), false});
  CHECK_THROWS_AS(integer_points(sys, 1), Error);
}

TEST_CASE("recession rays of a quadrant-like cone") {
  LinSystem sys;
  sys.push_back({{Rat(1), Rat(0)}, Rat(-5), false});
  sys.push_back({{Rat(0), Rat(1)}, Rat(-7), false});
  auto rays = recession_rays(sys, 2);
  REQUIRE(!rays.empty());
  for (const auto& r : rays) {
    CHECK(r[0] >= 0);
    CHECK(r[1] >= 0);
  }
}

TEST_CASE("positive grading exists iff the lattice admits one") {
  // Lattice of the square configuration: gamma = (1,1,-1);
  // g = (1,1,2) works.
  auto g = positive_grading({{1, 1, -1}}, 3);
  REQUIRE(g.has_value());
  CHECK((*g)[0] + (*g)[1] - (*g)[2] == 0);
  for (long x : *g) CHECK(x > 0);
  // gamma = (1,1): no positive grading kills it.
  CHECK(!positive_grading({{1, 1}}, 2).has_value());
}
