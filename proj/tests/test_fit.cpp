#include <doctest.h>

#include <random>

#include "nearcurve/errors.hpp"
#include "nearcurve/fit.hpp"
#include "oracles.hpp"

using namespace nearcurve;

namespace {

BigRational q(long n, long d = 1) { return make_rational(n, d); }

PointSet random_points(std::mt19937_64& rng, std::size_t count, long y_range) {
  PointSet pts;
  std::int64_t x = static_cast<std::int64_t>(rng() % 5);
  for (std::size_t i = 0; i < count; ++i) {
    x += 1 + static_cast<std::int64_t>(rng() % 3);
    pts.push_back({x, BigInteger(static_cast<long>(rng() % static_cast<unsigned long>(y_range)))});
  }
  return pts;
}

}  // namespace

TEST_SUITE("fit") {
  TEST_CASE("interpolation examples") {
    CHECK(interpolate(PointSet{{1, 1}, {2, 4}, {3, 9}}, 2) == RationalPolynomial({0, 0, 1}));
    CHECK(interpolate(PointSet{{0, 0}, {2, 1}}, 1) == RationalPolynomial({0, q(1, 2)}));
    CHECK(interpolate(PointSet{{5, 7}}, 3) == RationalPolynomial::constant(7));
    CHECK_THROWS_AS(interpolate(PointSet{{1, 1}, {1, 2}}, 1), DegenerateInputError);
    CHECK_THROWS_AS(interpolate(PointSet{{1, 1}, {2, 2}, {3, 3}}, 1), PreconditionError);
    CHECK_THROWS_AS(interpolate(PointSet{}, 1), PreconditionError);
  }

  TEST_CASE("interpolation matches Lagrange and reproduces the points") {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 200; ++trial) {
      const PointSet pts = random_points(rng, 1 + rng() % 5, 1000);
      const RationalPolynomial p = interpolate(pts, pts.size() - 1);
      CHECK(p == RationalPolynomial(oracle::lagrange(pts)));
      for (const LatticePoint& pt : pts) CHECK(eval(p, BigRational(pt.x)) == BigRational(pt.y));
      CHECK(on_curve_count(pts, p) == pts.size());
    }
  }

  TEST_CASE("denominator of interpolants through nodes in [X, 2X]") {
    CHECK(denominator_bound(1, q(10)) == 10);
    CHECK(denominator_bound(2, q(5, 2)) == 27);
    std::mt19937_64 rng(52);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t n = 1 + rng() % 3;
      const long X = 5 + static_cast<long>(rng() % 50);
      PointSet pts;
      for (std::int64_t x = X; x <= 2 * X && pts.size() <= n; x += 1 + static_cast<std::int64_t>(rng() % 3)) {
        pts.push_back({x, BigInteger(static_cast<long>(rng() % 10000))});
      }
      if (pts.size() != n + 1) continue;
      const RationalPolynomial p = interpolate(pts, n);
      std::vector<BigInteger> nodes;
      for (const LatticePoint& pt : pts) nodes.push_back(BigInteger(pt.x));
      CHECK(vandermonde_det(nodes) % p.denominator() == 0);
      CHECK(p.denominator() <= denominator_bound(n, q(X)));
    }
  }

  TEST_CASE("membership") {
    const CurveMembership m(RationalPolynomial({q(1, 3), q(2, 3)}));
    CHECK(m.contains({1, 1}));
    CHECK(!m.contains({2, 1}));
    CHECK(m.contains({4, 3}));
    CHECK(!m.contains({0, 0}));
  }

  TEST_CASE("R examples") {
    // 5 points on y = x^2 plus one outlier
    const PointSet pts{{1, 1}, {2, 4}, {3, 9}, {4, 7}, {5, 25}, {6, 36}};
    const RResult r2 = compute_R(pts, 2);
    CHECK(r2.R == 5);
    CHECK(r2.witness == RationalPolynomial({0, 0, 1}));
    CHECK(r2.exhaustive);
    CHECK(compute_R(pts, 1).R == 2);
    CHECK(compute_R(PointSet{}, 2).R == 0);
    CHECK(compute_R(PointSet{{1, 1}, {2, 5}}, 3).R == 2);
    CHECK_THROWS_AS(compute_R(pts, 0), PreconditionError);
  }

  TEST_CASE("ties pick the lexicographically smallest coefficients") {
    // two lines with three points each
    const PointSet pts{{1, 1}, {2, 2}, {3, 3}, {4, 0}, {5, 0}, {6, 0}};
    const RResult r = compute_R(pts, 1);
    CHECK(r.R == 3);
    CHECK(r.witness.is_zero());
  }

  TEST_CASE("R equals the exhaustive subset search") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 80; ++trial) {
      const std::size_t n = 1 + rng() % 3;
      PointSet pts = random_points(rng, 4 + rng() % 9, 4);
      const std::size_t expected = oracle::exhaustive_R(pts, n);
      const RResult one = compute_R(pts, n);
      ROptions threaded;
      threaded.jobs = 3;
      const RResult three = compute_R(pts, n, threaded);
      CHECK(one.R == expected);
      CHECK(three.R == expected);
      CHECK(three.witness == one.witness);
      CHECK(on_curve_count(pts, one.witness) == one.R);
    }
  }

  TEST_CASE("consecutive windows give a lower bound") {
    std::mt19937_64 rng(54);
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t n = 1 + rng() % 2;
      const PointSet pts = random_points(rng, 5 + rng() % 6, 3);
      ROptions o;
      o.search = RSearch::consecutive_windows;
      const RResult lower = compute_R(pts, n, o);
      CHECK(!lower.exhaustive);
      CHECK(lower.R <= compute_R(pts, n).R);
      CHECK(lower.R >= std::min(pts.size(), n + 1));
    }
  }

  TEST_CASE("budget") {
    PointSet pts;
    for (std::int64_t x = 1; x <= 30; ++x) pts.push_back({x, BigInteger(x * x % 7)});
    ROptions tight;
    tight.budget = 100;
    CHECK_THROWS_AS(compute_R(pts, 2, tight), WorkLimitError);
    CHECK_NOTHROW(compute_R(pts, 2));
  }
}
