#include <doctest.h>

#include <random>

#include "nearcurve/congruence.hpp"
#include "nearcurve/errors.hpp"
#include "oracles.hpp"

using namespace nearcurve;

namespace {

BigRational q(long n, long d = 1) { return make_rational(n, d); }

}  // namespace

TEST_SUITE("congruence") {
  TEST_CASE("x^2/4 on 0..7") {
    const CongruenceCount c = count_congruence_solutions(RationalPolynomial({0, 0, q(1, 4)}), {0, 7});
    CHECK(c.W == 4);
    CHECK(c.q == 4);
    CHECK(qsol_bound(2, 7, 4) == Bracket::exact(9));
  }

  TEST_CASE("trivial denominators") {
    CHECK(count_congruence_solutions(RationalPolynomial({3, 1, 5}), {-4, 10}).W == 15);
    CHECK(count_congruence_solutions(RationalPolynomial(), {2, 2}).W == 1);
    CHECK_THROWS_AS(count_congruence_solutions(RationalPolynomial({q(1, 2)}), {3, 2}), DomainError);
  }

  TEST_CASE("binomial-style polynomials are integer valued") {
    // x(x-1)/2 and x(x-1)(x-2)/6 take integer values everywhere
    CHECK(count_congruence_solutions(RationalPolynomial({0, q(-1, 2), q(1, 2)}), {-50, 50}).W == 101);
    CHECK(count_congruence_solutions(RationalPolynomial({0, q(1, 3), q(-1, 2), q(1, 6)}), {0, 1000}).W == 1001);
  }

  TEST_CASE("matches the direct count") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t n = 1 + rng() % 4;
      std::vector<BigRational> cs;
      for (std::size_t i = 0; i <= n; ++i) cs.push_back(oracle::random_rational(rng, 30, 12));
      const std::int64_t a = static_cast<std::int64_t>(rng() % 200) - 100;
      const std::int64_t b = a + static_cast<std::int64_t>(rng() % 300);
      const CongruenceCount c = count_congruence_solutions(RationalPolynomial(cs), {a, b});
      CHECK(c.W == oracle::naive_congruence(cs, a, b));
    }
  }

  TEST_CASE("a denominator above 2^32") {
    const BigInteger big("8589934597");  // > 2^33
    const std::vector<BigRational> cs{0, make_rational(1, big)};
    CHECK(count_congruence_solutions(RationalPolynomial(cs), {-5, 5}).W == 1);
  }

  TEST_CASE("bounds") {
    // 2*10/8^(1/2) + 2^1
    const Bracket b = qsol_bound(2, 10, 8, make_rational(1, 1000000000000L));
    CHECK(oracle::encloses(b, "9.07106781186"));
    CHECK(b.width() <= make_rational(1, 1000000000000L));
    CHECK_THROWS_AS(qsol_bound(0, 10, 8), PreconditionError);
    CHECK_THROWS_AS(qdensity_bound(1, 3, 10, 8), PreconditionError);
    CHECK_THROWS_AS(qdensity_bound(2, 2, 10, 8), PreconditionError);
    // n = 2, k = 3: e = 1/4 and 16^(1/4) = 2, so 3 * (10/2 + 1)
    CHECK(qdensity_bound(2, 3, 10, 16) == Bracket::exact(18));
  }

  TEST_CASE("the density bound dominates W") {
    std::mt19937_64 rng(62);
    for (int trial = 0; trial < 150; ++trial) {
      const std::size_t n = 2 + rng() % 3;
      std::vector<BigRational> cs;
      for (std::size_t i = 0; i <= n; ++i) cs.push_back(oracle::random_rational(rng, 20, 30));
      if (cs.back() == 0) cs.back() = q(1, 7);
      const RationalPolynomial p(cs);
      const std::int64_t a = static_cast<std::int64_t>(rng() % 100);
      const CongruenceCount c = count_congruence_solutions(p, {a, a + static_cast<std::int64_t>(rng() % 500)});
      const BigInteger L(static_cast<long>(c.interval.length()));
      for (std::size_t k = n + 1; k <= n + 4; ++k) {
        CHECK(BigRational(static_cast<unsigned long>(c.W)) < qdensity_bound(n, k, L, c.q).lo);
      }
    }
  }
}
