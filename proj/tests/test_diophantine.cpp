#include <doctest.h>

#include <random>

#include "nearcurve/diophantine.hpp"
#include "nearcurve/errors.hpp"

#include "oracles.hpp"

using namespace nearcurve;

namespace {

BigRational q(long n, long d = 1) { return make_rational(n, d); }

std::vector<std::pair<long, long>> fractions(const ConvergentExpansion& e) {
  std::vector<std::pair<long, long>> out;
  for (const Approximation& a : e.convergents) out.emplace_back(a.r.get_si(), a.s.get_si());
  return out;
}

}  // namespace

TEST_SUITE("diophantine") {
  TEST_CASE("golden ratio") {
    const RealNumber phi = RealNumber::parse("quad:1/2:1/2:5");
    const ConvergentExpansion e = convergents(phi, 5);
    CHECK(fractions(e) == std::vector<std::pair<long, long>>{{1, 1}, {2, 1}, {3, 2}, {5, 3}, {8, 5}});
    for (const BigInteger& a : e.partial_quotients) CHECK(a == 1);
    CHECK(!e.truncated);
    CHECK(!e.terminated);
    CHECK(oracle::encloses(e.convergents.back().error, "0.018033988749894848"));
  }

  TEST_CASE("sqrt 2 best approximation") {
    const RealNumber r2 = RealNumber::parse("sqrt:2");
    const Approximation a = best_approx_in_range(r2, 12);
    CHECK(a.r == 17);
    CHECK(a.s == 12);
    CHECK(oracle::encloses(a.error, "0.0024531042935716179"));
    CHECK(a.error.width() < power_of_two(-100));
  }

  TEST_CASE("rational alpha terminates") {
    const ConvergentExpansion e = convergents(RealNumber(q(7, 3)), 100);
    CHECK(fractions(e) == std::vector<std::pair<long, long>>{{2, 1}, {7, 3}});
    CHECK(e.terminated);
    CHECK(e.convergents.back().error == Bracket::exact(0));
    CHECK(convergents(RealNumber(q(-5, 2)), 1).convergents.front().r == -3);
  }

  TEST_CASE("fixed enclosures") {
    const ConvergentExpansion e = convergents(RealNumber::parse("[1414/1000,1415/1000]"), 1000);
    CHECK(e.truncated);
    REQUIRE(e.convergents.size() >= 2);
    CHECK(e.convergents[0].r == 1);
    CHECK(e.convergents[1].r == 3);
    CHECK(e.convergents[1].s == 2);
    CHECK_THROWS_AS(convergents(RealNumber::parse("[9/10,11/10]"), 10), CertificationError);
  }

  TEST_CASE("distance comparison") {
    const RealNumber r2 = RealNumber::parse("sqrt:2");
    CHECK(compare_distance(r2, 3, 2, q(1, 10)) == Certified::less);
    CHECK(compare_distance(r2, 3, 2, q(1, 12)) == Certified::greater);
    CHECK(compare_distance(RealNumber(q(1, 2)), 1, 1, q(1, 2)) == Certified::equal);
    CHECK(compare_distance(RealNumber::parse("[0,1]"), 1, 2, q(1, 10)) == Certified::undecided);
  }

  TEST_CASE("convergents of quadratic irrationals") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 60; ++trial) {
      const long d = 2 + static_cast<long>(rng() % 200);
      const QuadraticNumber x(make_rational(static_cast<long>(rng() % 21) - 10, 1 + rng() % 9),
                              make_rational(1 + static_cast<long>(rng() % 5), 1 + rng() % 5), d);
      const RealNumber alpha = RealNumber::quadratic(x);
      const ConvergentExpansion e = convergents(alpha, 100000);
      REQUIRE(!e.convergents.empty());
      int previous_side = 0;
      for (std::size_t i = 0; i < e.convergents.size(); ++i) {
        const Approximation& a = e.convergents[i];
        CHECK(gcd(a.r, a.s) == 1);
        // q_1 = a_1 may equal q_0 = 1
        if (i > 1) CHECK(a.s > e.convergents[i - 1].s);
        CHECK(compare_distance(alpha, a.r, a.s, make_rational(1, a.s * a.s)) != Certified::greater);
        // exact rationals lie on alternating sides unless alpha is rational
        const int side = compare(x, make_rational(a.r, a.s));
        if (side != 0 && previous_side != 0) CHECK(side == -previous_side);
        previous_side = side;
        CHECK(a.error.contains(a.error.midpoint()));
      }
      // an enclosure tight around alpha reproduces a prefix
      const Bracket enc = x.enclose(200);
      const ConvergentExpansion f = convergents(RealNumber::interval(enc), 100000);
      REQUIRE(f.convergents.size() <= e.convergents.size());
      for (std::size_t i = 0; i < f.convergents.size(); ++i) {
        CHECK(f.convergents[i].r == e.convergents[i].r);
        CHECK(f.convergents[i].s == e.convergents[i].s);
      }
    }
  }

  TEST_CASE("badly approximable check") {
    const RealNumber r2 = RealNumber::parse("sqrt:2");
    const BadlyApproxReport ok = check_badly_approximable(r2, q(1, 3), 1, 1, 100);
    CHECK(ok.pass);
    CHECK(ok.entries.size() == 100);
    CHECK(ok.entries[11].r == 17);  // s = 12
    const BadlyApproxReport bad = check_badly_approximable(r2, q(1), 1, 1, 5);
    CHECK(!bad.pass);
    CHECK(!bad.entries[0].pass);
    CHECK(bad.entries[0].r == 1);
    CHECK(check_badly_approximable(r2, q(1), 1, 5, 4).pass);
    CHECK(check_badly_approximable(r2, q(1), 1, 5, 4).entries.empty());
    CHECK_THROWS_AS(check_badly_approximable(r2, q(0), 1, 1, 5), DomainError);
    // a rational alpha fails at every multiple of its denominator
    const BadlyApproxReport rat = check_badly_approximable(RealNumber(q(2, 3)), q(1, 100), 2, 1, 6);
    CHECK(!rat.entries[2].pass);
    CHECK(rat.entries[2].r == 2);
    CHECK(!rat.pass);
  }
}
