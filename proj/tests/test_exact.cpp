#include <doctest.h>

#include <algorithm>
#include <random>

#include "nearcurve/errors.hpp"
#include "nearcurve/exact.hpp"
#include "oracles.hpp"

using namespace nearcurve;

namespace {

IntegerMatrix matrix(std::vector<std::vector<long>> rows) {
  IntegerMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

std::vector<std::vector<BigInteger>> rows_of(const IntegerMatrix& m) {
  std::vector<std::vector<BigInteger>> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out[r].push_back(m(r, c));
  }
  return out;
}

}  // namespace

TEST_SUITE("exact") {
  TEST_CASE("rationals stay canonical") {
    CHECK(make_rational(6, -4) == make_rational(-3, 2));
    CHECK(make_rational(-3, 2).get_den() == 2);
    CHECK(to_string(make_rational(0, 5)) == "0");
    CHECK(parse_rational("0.001") == make_rational(1, 1000));
    CHECK(parse_rational("355/113") == make_rational(355, 113));
    CHECK(parse_rational("-2.5e-3") == make_rational(-1, 400));
    CHECK(parse_rational("12/-8") == make_rational(-3, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
    CHECK_THROWS_AS(parse_rational("abc"), InputError);
    CHECK_THROWS_AS(parse_rational("1.5.2"), InputError);
    CHECK_THROWS_AS(make_rational(1, 0), DomainError);
  }

  TEST_CASE("floor, ceil and rounding") {
    CHECK(floor(make_rational(-7, 2)) == -4);
    CHECK(ceil(make_rational(-7, 2)) == -3);
    CHECK(round_nearest(make_rational(5, 2)) == 3);
    CHECK(round_nearest(make_rational(-5, 2)) == -2);
    CHECK(to_decimal(make_rational(1, 3), 4, Rounding::down) == "0.3333");
    CHECK(to_decimal(make_rational(1, 3), 4, Rounding::up) == "0.3334");
    CHECK(to_decimal(make_rational(-1, 3), 2, Rounding::down) == "-0.34");
  }

  TEST_CASE("det examples") {
    CHECK(det(matrix({{1, 0}, {1, 1}})) == 1);
    CHECK(det(matrix({{1, 0, 0}, {1, 1, 1}, {1, 2, 4}})) == 2);
    CHECK(det(matrix({{1, 0, 0}, {1, 1, 0}, {1, 2, 1}})) == 1);
    CHECK(det(matrix({{0, 1}, {1, 0}})) == -1);
    CHECK_THROWS_AS(det(IntegerMatrix(2, 3)), DimensionError);
  }

  TEST_CASE("vandermonde examples") {
    std::vector<BigInteger> a{0, 1}, b{0, 1, 2}, c{1, 3, 7, 2}, d{4, 9, 4};
    CHECK(vandermonde_det(a) == 1);
    CHECK(vandermonde_det(b) == 2);
    CHECK(vandermonde_det(c) == 240);
    CHECK(vandermonde_det(c) == det(vandermonde_matrix(c)));
    CHECK(vandermonde_det(d) == 0);
  }

  TEST_CASE("det agrees with cofactor expansion and flips with row parity") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t k = 1 + rng() % 6;
      IntegerMatrix m(k, k);
      for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = 0; c < k; ++c) m(r, c) = static_cast<long>(rng() % 41) - 20;
      }
      const BigInteger d = det(m);
      CHECK(d == oracle::cofactor_det(rows_of(m)));
      std::vector<std::size_t> perm(k);
      for (std::size_t i = 0; i < k; ++i) perm[i] = i;
      std::shuffle(perm.begin(), perm.end(), rng);
      IntegerMatrix p(k, k);
      int inversions = 0;
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) inversions += perm[i] > perm[j];
        for (std::size_t c = 0; c < k; ++c) p(i, c) = m(perm[i], c);
      }
      CHECK(det(p) == (inversions % 2 ? BigInteger(-d) : d));
    }
  }

  TEST_CASE("vandermonde product formula on random nodes") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<BigInteger> nodes;
      const std::size_t k = 1 + rng() % 7;
      for (std::size_t i = 0; i < k; ++i) nodes.emplace_back(static_cast<long>(rng() % 200) - 100);
      CHECK(vandermonde_det(nodes) == det(vandermonde_matrix(nodes)));
    }
  }

  TEST_CASE("omega") {
    CHECK(omega(1) == 0);
    CHECK(omega(12) == 2);
    CHECK(omega(1024) == 1);
    CHECK(omega(30) == 3);
    // a 20-digit semiprime forces the splitting stage
    CHECK(omega(BigInteger("10000000019") * BigInteger("1000000007")) == 2);
    CHECK(omega(BigInteger("1000000007") * BigInteger("1000000007") * 6) == 3);
    CHECK_THROWS_AS(omega(0), DomainError);
  }

  TEST_CASE("omega is additive on coprime pairs") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
      BigInteger p(static_cast<unsigned long>(1 + rng() % 100000));
      BigInteger q(static_cast<unsigned long>(1 + rng() % 100000));
      BigInteger g;
      mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
      q /= g;
      mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
      if (g != 1) continue;
      CHECK(omega(p * q) == omega(p) + omega(q));
    }
  }

  TEST_CASE("lcm_list") {
    std::vector<BigInteger> a{2, 3}, b{4, 6, 8}, empty, bad{3, 0};
    CHECK(lcm_list(a) == 6);
    CHECK(lcm_list(b) == 24);
    CHECK(lcm_list(empty) == 1);
    CHECK_THROWS_AS(lcm_list(bad), DomainError);
  }

  TEST_CASE("rational arithmetic round trips") {
    std::mt19937_64 rng(14);
    for (int trial = 0; trial < 500; ++trial) {
      const BigRational a = oracle::random_rational(rng, 1000, 1000);
      const BigRational b = oracle::random_rational(rng, 1000, 1000);
      CHECK((a + b) - b == a);
      if (b != 0) CHECK((a * b) / b == a);
    }
  }
}
