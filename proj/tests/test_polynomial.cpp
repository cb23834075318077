#include <doctest.h>

#include <random>

#include "nearcurve/errors.hpp"
#include "nearcurve/polynomial.hpp"
#include "oracles.hpp"

using namespace nearcurve;

namespace {

RationalPolynomial poly(std::initializer_list<BigRational> c) { return RationalPolynomial(std::vector<BigRational>(c)); }

BigRational q(long n, long d = 1) { return make_rational(n, d); }

RationalPolynomial random_poly(std::mt19937_64& rng, std::size_t degree, long h) {
  std::vector<BigRational> c;
  for (std::size_t i = 0; i <= degree; ++i) c.push_back(BigRational(static_cast<long>(rng() % (2 * h + 1)) - h));
  if (c.back() == 0) c.back() = 1;
  return RationalPolynomial(c);
}

// Longest run of grid samples with |t| <= delta, as a length.
BigRational sampled_max_length(const RationalPolynomial& t, const BigRational& delta, const BigRational& a,
                               const BigRational& b, const BigRational& step) {
  BigRational best = 0, run_start = 0;
  bool in_run = false;
  for (BigRational x = a; x <= b; x += step) {
    const bool inside = abs(eval(t, x)) <= delta;
    if (inside && !in_run) run_start = x;
    if (inside) best = std::max(best, BigRational(x - run_start));
    in_run = inside;
  }
  return best;
}

}  // namespace

TEST_SUITE("bracket") {
  TEST_CASE("exact roots collapse to points") {
    CHECK(root_bracket(q(1000), 3, default_width()) == Bracket::exact(10));
    CHECK(root_bracket(q(4, 9), 2, default_width()) == Bracket::exact(q(2, 3)));
    CHECK(pow_bracket(q(1, 4), 2, 2, default_width()) == Bracket::exact(q(1, 4)));
  }

  TEST_CASE("irrational roots are bracketed to width") {
    const BigRational w = power_of_two(-50);
    const Bracket r = root_bracket(q(2), 2, w);
    CHECK(r.width() <= w);
    CHECK(r.lo * r.lo < 2);
    CHECK(r.hi * r.hi > 2);
    const Bracket g = root_bracket(q(200000), 6, make_rational(1, 1000000000));
    CHECK(oracle::encloses(g, "7.647244913317"));
  }

  TEST_CASE("interval arithmetic and three-valued comparison") {
    const Bracket a(q(1), q(2)), b(q(-1), q(3));
    CHECK(a + b == Bracket(q(0), q(5)));
    CHECK(a * b == Bracket(q(-2), q(6)));
    CHECK(abs(b) == Bracket(q(0), q(3)));
    CHECK(compare(a, q(3)) == Certified::less);
    CHECK(compare(a, q(0)) == Certified::greater);
    CHECK(compare(a, q(3, 2)) == Certified::undecided);
    CHECK(compare(Bracket::exact(q(2)), q(2)) == Certified::equal);
    CHECK_THROWS_AS(a / b, DomainError);
    CHECK_THROWS(Bracket(q(2), q(1)));
  }
}

TEST_SUITE("real") {
  TEST_CASE("quadratic numbers") {
    const QuadraticNumber s2(0, 1, 2);
    CHECK(s2.sign() == 1);
    CHECK(s2.floor() == 1);
    CHECK((s2 * s2).is_rational());
    CHECK((s2 * s2).rational_part() == 2);
    CHECK(QuadraticNumber(q(3, 2), q(-1), 2).sign() == 1);  // 1.5 - 1.414
    CHECK(QuadraticNumber(q(7, 5), q(-1), 2).sign() == -1);
    CHECK(QuadraticNumber(q(1), q(1), 4).is_rational());    // 1 + sqrt 4 = 3
    CHECK(QuadraticNumber(q(1), q(1), 4).rational_part() == 3);
    const Bracket e = s2.enclose(60);
    CHECK(e.width() <= power_of_two(-60));
    CHECK(oracle::encloses(e, "1.41421356237309504"));
  }

  TEST_CASE("parse and print round trip") {
    for (const char* text : {"355/113", "quad:1/2:1/2:5", "[1/3,1/2]", "-7"}) {
      CHECK(RealNumber::parse(RealNumber::parse(text).to_string()).to_string() == RealNumber::parse(text).to_string());
    }
    CHECK(RealNumber::parse("sqrt:2").certified_irrational());
    CHECK(RealNumber::parse("0.25").rational() == q(1, 4));
    CHECK(!RealNumber::parse("[-1,1]").sign().has_value());
    CHECK_THROWS_AS(RealNumber::parse("[2,1]"), InputError);
  }
}

TEST_SUITE("polynomial") {
  TEST_CASE("eval examples") {
    CHECK(eval(poly({0, q(1, 2)}), q(4)) == 2);
    CHECK(eval(poly({0, q(-1, 2), q(1, 2)}), q(5)) == 10);
    CHECK(eval(poly({0, q(1, 7), q(3, 7)}), q(2)) == 2);
  }

  TEST_CASE("global denominator") {
    const RationalPolynomial p = poly({q(1, 6), q(3, 4), q(5)});
    CHECK(p.denominator() == 12);
    CHECK(p.integer_coefficients() == std::vector<BigInteger>{2, 9, 60});
    CHECK(poly({1, 2, 0, 0}).degree() == 1u);
    CHECK(!poly({}).degree().has_value());
  }

  TEST_CASE("q*P is integral at integers") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<BigRational> c;
      for (int i = 0; i < 4; ++i) c.push_back(oracle::random_rational(rng, 50, 30));
      const RationalPolynomial p(c);
      const BigRational x(static_cast<long>(rng() % 1000) - 500);
      CHECK(BigRational(eval(p, x) * BigRational(p.denominator())).get_den() == 1);
    }
  }

  TEST_CASE("isolate_roots examples") {
    RootIsolation r = isolate_roots(poly({-2, 0, 1}));
    REQUIRE(r.size() == 2);
    CHECK(r.roots()[0].location.lo >= -2);
    CHECK(r.roots()[0].location.hi <= -1);
    CHECK(r.roots()[1].location.lo >= 1);
    CHECK(r.roots()[1].location.hi <= 2);
    CHECK(!r.roots()[0].exact());

    CHECK(isolate_roots(poly({1, 0, 1})).size() == 0);

    // (x-1)^2 (x-3) = x^3 - 5x^2 + 7x - 3
    r = isolate_roots(poly({-3, 7, -5, 1}));
    REQUIRE(r.size() == 2);
    CHECK(r.roots()[0].exact());
    CHECK(r.roots()[0].location.lo == 1);
    CHECK(r.roots()[0].multiplicity == 2);
    CHECK(r.roots()[1].location.lo == 3);
    CHECK(r.roots()[1].multiplicity == 1);
    CHECK(r.count_with_multiplicity() == 3);

    CHECK_THROWS_AS(isolate_roots(poly({})), DomainError);
  }

  TEST_CASE("refinement reaches any width") {
    RootIsolation r = isolate_roots(poly({-2, 0, 1}));
    r.refine_all(power_of_two(-80));
    for (const IsolatedRoot& root : r.roots()) {
      CHECK(root.location.width() <= power_of_two(-80));
      CHECK(sign_at(root.factor, root.location.lo) * sign_at(root.factor, root.location.hi) < 0);
    }
  }

  TEST_CASE("root counts agree with Sturm chains and parity") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 150; ++trial) {
      const std::size_t d = 1 + rng() % 5;
      RationalPolynomial p = random_poly(rng, d, 100);
      if (trial % 3 == 0) p = p * poly({static_cast<long>(rng() % 7) - 3, 1});  // force a repeated/rational root
      const RootIsolation r = isolate_roots(p);
      const std::size_t deg = *p.degree();
      CHECK((deg - r.count_with_multiplicity()) % 2 == 0);
      const RationalPolynomial sf = divmod(p, gcd(p, p.derivative())).first;
      const SturmChain chain(sf);
      CHECK(static_cast<std::size_t>(chain.variations_at_negative_infinity() - chain.variations_at_positive_infinity()) ==
            r.size());
      for (std::size_t i = 0; i + 1 < r.size(); ++i) CHECK(r.roots()[i].location.hi < r.roots()[i + 1].location.lo);
      for (const IsolatedRoot& root : r.roots()) {
        if (root.exact()) {
          CHECK(eval(p, root.location.lo) == 0);
        } else {
          CHECK(sign_at(root.factor, root.location.lo) * sign_at(root.factor, root.location.hi) < 0);
        }
      }
    }
  }

  TEST_CASE("sublevel examples") {
    const Bracket wide(q(-10), q(10));
    CHECK(max_sublevel_length(poly({0, 0, 1}), q(1), wide) == Bracket::exact(2));
    CHECK(count_sublevel_components(poly({0, 0, 1}), q(1), wide) == 1);

    const Bracket band = max_sublevel_length(poly({-2, 0, 1}), q(1), Bracket(q(0), q(10)));
    CHECK(band.width() <= default_width());
    CHECK(oracle::encloses(band, "0.7320508075688772935"));
    CHECK(count_sublevel_components(poly({-2, 0, 1}), q(1), wide) == 2);

    const RationalPolynomial cubic = poly({0, 2, -3, 1});  // x(x-1)(x-2)
    CHECK(count_sublevel_components(cubic, q(1, 100), Bracket(q(-5), q(5))) == 3);
    const Bracket longest = max_sublevel_length(cubic, q(1, 10), Bracket(q(-5), q(5)), make_rational(1, 1000000));
    const BigRational sampled = sampled_max_length(cubic, q(1, 10), q(-5), q(5), make_rational(1, 10000));
    CHECK(longest.lo >= sampled);
    CHECK(longest.hi <= sampled + make_rational(2, 10000));

    CHECK_THROWS_AS(count_sublevel_components(poly({}), q(1), wide), DomainError);
  }

  TEST_CASE("empty sublevel set has length zero") {
    CHECK(max_sublevel_length(poly({5, 0, 1}), q(1), Bracket(q(-3), q(3))) == Bracket::exact(0));
    CHECK(count_sublevel_components(poly({5, 0, 1}), q(1), Bracket(q(-3), q(3))) == 0);
  }

  TEST_CASE("component count and length bounds on random polynomials") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 150; ++trial) {
      const std::size_t d = 1 + rng() % 5;
      const RationalPolynomial t = random_poly(rng, d, 100);
      const BigRational delta = make_rational(static_cast<long>(1 + rng() % 1000), 10);
      const Bracket window(q(-50), q(50));
      CHECK(count_sublevel_components(t, delta, window) <= d);
      const Bracket longest = max_sublevel_length(t, delta, window);
      CHECK(longest.hi < sublevel_length_bound(t, delta).lo);
    }
  }

  TEST_CASE("sublevel_covers") {
    CHECK(sublevel_covers(poly({0, 0, 1}), q(1), Bracket(q(-1), q(1))));
    CHECK(!sublevel_covers(poly({0, 0, 1}), q(1), Bracket(q(-1), q(2))));
    CHECK(!sublevel_covers(poly({-2, 0, 1}), q(1), Bracket(q(-2), q(2))));
  }

  TEST_CASE("rep-loc examples") {
    // n = 1: K >= (sigma - delta_cap) / |h'|
    CHECK(rep_loc_min_distance(poly({0, 1}), Bracket(q(-1, 2), q(1, 2)), q(1), q(1), q(1, 2)) ==
          Bracket::exact(q(1, 2)));
    // n = 2, h = x^2 on [-1/4, 1/4], x0 = 1: min(5/16, sqrt(1/2)) = 5/16
    const Bracket k = rep_loc_min_distance(poly({0, 0, 1}), Bracket(q(-1, 4), q(1, 4)), q(1), q(1), q(1, 10));
    CHECK(k == Bracket::exact(q(5, 16)));
    CHECK(k.hi <= q(5, 4));
    CHECK_THROWS_AS(rep_loc_min_distance(poly({0, 1}), Bracket(q(0), q(1, 2)), q(1), q(1, 2), q(1, 2)),
                    PreconditionError);
    // |h| exceeds the cap on the interval
    CHECK_THROWS_AS(rep_loc_min_distance(poly({0, 0, 1}), Bracket(q(-1), q(1)), q(2), q(4), q(1, 10)),
                    PreconditionError);
  }

  TEST_CASE("rep-loc bound never exceeds the measured distance") {
    std::mt19937_64 rng(24);
    int checked = 0;
    for (int trial = 0; trial < 400 && checked < 100; ++trial) {
      const std::size_t d = 1 + rng() % 4;
      const RationalPolynomial h = random_poly(rng, d, 20);
      const BigRational a(static_cast<long>(rng() % 21) - 10);
      const BigRational L = make_rational(static_cast<long>(1 + rng() % 8), 8);
      const Bracket I(a, a + L);
      const BigRational cap = abs(eval(h, I)).hi;
      const BigRational x0 = a + L + make_rational(static_cast<long>(1 + rng() % 40), 4);
      const BigRational sigma = abs(eval(h, x0));
      if (sigma <= cap) continue;
      const Bracket bound = rep_loc_min_distance(h, I, x0, sigma, cap);
      const BigRational K = x0 - a;
      CHECK(bound.hi <= K);
      ++checked;
    }
    CHECK(checked >= 50);
  }

  TEST_CASE("real polynomial modes") {
    CHECK_THROWS_AS(RealPolynomial::rational({q(1)}), DomainError);
    CHECK_THROWS_AS(RealPolynomial::rational({q(1), q(0)}), DomainError);
    CHECK_THROWS_AS(RealPolynomial::interval({RealNumber(q(1)), RealNumber::parse("[-1,1]")}), DomainError);
    const RealPolynomial f = RealPolynomial::interval({RealNumber(q(1)), RealNumber::parse("sqrt:2")});
    CHECK(f.has_exact_values());
    const auto v = f.exact_value(3);
    REQUIRE(v.has_value());
    CHECK(v->floor() == 5);  // 1 + 3 sqrt 2 = 5.24...
    CHECK(oracle::encloses(f.enclose(BigInteger(3), 64), "5.2426406871192851"));
  }
}
